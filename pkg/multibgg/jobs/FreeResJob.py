from werkzeug.datastructures import MultiDict

from multibgg.colorized_logger import get_logger
from multibgg.errors import SchemaError
from multibgg.groebner import minimal_presentation, syzygies
from multibgg.io.payloads import module_from_payload
from multibgg.io.render import render_complex
from multibgg.io.serialize import to_json
from multibgg.jobs.Job import Job
from multibgg.jobs.KEYS import KEYS
from multibgg.modules.resolution import minimal_free_resolution
from reports import Report, ReportStatus

logger = get_logger('multibgg.jobs.FreeResJob')


class FreeResJob(Job):
    """Minimal free resolution up to payload "length" (default: number of variables)."""

    def __init__(self, ring, payload, params: MultiDict):
        super().__init__(ring, payload, params)
        self._length = self._payload.get('length', self._max_iter or ring.nvars)
        self._module = None
        self._resolution = None

    def prepare(self):
        if not isinstance(self._length, int) or self._length < 0:
            raise SchemaError("length is a non-negative integer", "/payload/length")
        self._module = module_from_payload(self.ring, self._field('module'))

    def run(self):
        self._resolution = minimal_free_resolution(self._module, self._length)

    def extract_report(self) -> Report:
        C = self._resolution
        last = C.indices[-1] if C.indices else 0
        if last < self._length:
            done = True
        elif last:
            done = syzygies(C.differential(last)).ncols == 0
        else:
            done = minimal_presentation(self._module).is_free()
        betti = {str(i): sorted(list(t) for t in C.term(i).twists) for i in C.indices}
        report = Report(KEYS.FREE_RES, ReportStatus.OK if done else ReportStatus.TRUNCATED,
                        summary={"ranks": {str(i): r for i, r in C.ranks.items()}, "twists": betti})
        report.add("resolution", render_complex(C), to_json(C))
        return report
