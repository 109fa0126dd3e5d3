from werkzeug.datastructures import MultiDict

from multibgg.bgg import graded_pieces_of_e_module, toric_ll
from multibgg.colorized_logger import get_logger
from multibgg.core.ExtAlgebra import dual_ring_toric
from multibgg.io.payloads import e_module_from_payload
from multibgg.io.render import render_complex
from multibgg.io.serialize import to_json
from multibgg.jobs.Job import Job
from multibgg.jobs.KEYS import KEYS
from reports import Report, ReportStatus

logger = get_logger('multibgg.jobs.ToricLLJob')


class ToricLLJob(Job):
    """L(N) for an E-module N over the Koszul dual of the job's ring."""

    def __init__(self, ring, payload, params: MultiDict):
        super().__init__(ring, payload, params)
        self._pieces = None
        self._complex = None

    def prepare(self):
        E = dual_ring_toric(self.ring)
        self._pieces = graded_pieces_of_e_module(e_module_from_payload(E, self._field('emodule')))

    def run(self):
        logger.info("toricLL of an E-module of total dimension %d", self._pieces.total_dim)
        self._complex = toric_ll(self._pieces)

    def extract_report(self) -> Report:
        C = self._complex
        report = Report(KEYS.TORIC_LL, ReportStatus.OK,
                        summary={"ranks": {str(i): r for i, r in C.ranks.items()}})
        report.add("L(N)", render_complex(C), to_json(C))
        return report
