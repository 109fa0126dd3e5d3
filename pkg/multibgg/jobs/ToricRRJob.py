from werkzeug.datastructures import MultiDict

from multibgg.bgg import toric_rr
from multibgg.colorized_logger import get_logger
from multibgg.io.payloads import degree_list_from_payload, module_from_payload
from multibgg.io.render import render_e_module
from multibgg.io.serialize import to_json
from multibgg.jobs.Job import Job
from multibgg.jobs.KEYS import KEYS
from reports import Report, ReportStatus

logger = get_logger('multibgg.jobs.ToricRRJob')


class ToricRRJob(Job):
    """R(M) on a degree window: the option degreeList, else payload "degrees", else the default."""

    def __init__(self, ring, payload, params: MultiDict):
        super().__init__(ring, payload, params)
        self._module = None
        self._window = None
        self._result = None

    def prepare(self):
        self._module = module_from_payload(self.ring, self._field('module'))
        if self._degree_list is not None:
            self._window = degree_list_from_payload(self._degree_list, self.ring.rank)
        elif 'degrees' in self._payload:
            self._window = degree_list_from_payload(self._payload['degrees'], self.ring.rank, "/payload/degrees")

    def run(self):
        self._result = toric_rr(self._module, self._window)
        logger.info("toricRR: rank %d", self._result.rank)

    def extract_report(self) -> Report:
        N = self._result
        report = Report(KEYS.TORIC_RR, ReportStatus.OK,
                        summary={"rank": N.rank,
                                 "degrees": sorted((list(t) for t in N.twists), reverse=True)})
        report.add("R(M)", render_e_module(N), to_json(N))
        return report
