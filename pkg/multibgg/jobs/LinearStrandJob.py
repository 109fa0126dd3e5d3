from werkzeug.datastructures import MultiDict

from multibgg.colorized_logger import get_logger
from multibgg.io.payloads import module_from_payload
from multibgg.io.render import render_strand
from multibgg.io.serialize import to_json
from multibgg.jobs.Job import Job
from multibgg.jobs.KEYS import KEYS
from multibgg.strands import is_strongly_linear_matrix, strongly_linear_strand
from reports import Report, ReportStatus

logger = get_logger('multibgg.jobs.LinearStrandJob')


class LinearStrandJob(Job):
    def __init__(self, ring, payload, params: MultiDict):
        super().__init__(ring, payload, params)
        self._module = None
        self._result = None

    def prepare(self):
        self._module = module_from_payload(self.ring, self._field('module'))

    def run(self):
        self._result = strongly_linear_strand(self._module)
        logger.info("strand ranks %s", self._result.strand.ranks)

    def extract_report(self) -> Report:
        C = self._result.strand
        linear = all(is_strongly_linear_matrix(d) for d in C.differentials.values())
        report = Report(KEYS.LINEAR_STRAND, ReportStatus.OK,
                        summary={"ranks": {str(i): r for i, r in C.ranks.items()},
                                 "source degree": list(self._result.source_degree),
                                 "strongly linear": linear})
        report.add("strand", render_strand(self._result), to_json(self._result))
        return report
