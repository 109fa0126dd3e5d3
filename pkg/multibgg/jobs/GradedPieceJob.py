from werkzeug.datastructures import MultiDict

from multibgg.colorized_logger import get_logger
from multibgg.io.payloads import degree_list_from_payload, module_from_payload
from multibgg.io.serialize import degree_from_json
from multibgg.jobs.Job import Job
from multibgg.jobs.KEYS import KEYS
from multibgg.modules.pieces import graded_piece_basis
from multibgg.utils import format_degree
from reports import Report, ReportStatus

logger = get_logger('multibgg.jobs.GradedPieceJob')


class GradedPieceJob(Job):
    """dim_k M_d and a monomial basis, for payload "degree" or a list under "degrees"."""

    def __init__(self, ring, payload, params: MultiDict):
        super().__init__(ring, payload, params)
        self._module = None
        self._degrees = []
        self._pieces = []

    def prepare(self):
        self._module = module_from_payload(self.ring, self._field('module'))
        if 'degrees' in self._payload:
            self._degrees = degree_list_from_payload(self._payload['degrees'], self.ring.rank, "/payload/degrees")
        else:
            self._degrees = [degree_from_json(self._field('degree'), "/payload/degree", self.ring.rank)]

    def run(self):
        self._pieces = [graded_piece_basis(self._module, d) for d in self._degrees]

    def _basis_text(self, piece) -> str:
        ring = self.ring
        names = [f"g_{i}*{ring.monomial(e)}" if self._module.rank > 1 else str(ring.monomial(e))
                 for i, e in piece.basis]
        return f"{format_degree(piece.degree)}: dim {piece.dim}" + (f"  [{', '.join(names)}]" if names else "")

    def extract_report(self) -> Report:
        report = Report(KEYS.GRADED_PIECE, ReportStatus.OK,
                        summary={"dims": [{"degree": list(p.degree), "dim": p.dim} for p in self._pieces]})
        report.add("graded pieces", "\n".join(self._basis_text(p) for p in self._pieces))
        return report
