from werkzeug.datastructures import MultiDict

from multibgg.colorized_logger import get_logger
from multibgg.errors import SchemaError
from multibgg.io.payloads import module_from_payload
from multibgg.io.render import render_presented
from multibgg.io.serialize import degree_from_json, to_json
from multibgg.jobs.Job import Job
from multibgg.jobs.KEYS import KEYS
from multibgg.modules.resolution import ext_module
from reports import Report, ReportStatus

logger = get_logger('multibgg.jobs.ExtJob')


class ExtJob(Job):
    """Ext^index(M, S(twist))."""

    def __init__(self, ring, payload, params: MultiDict):
        super().__init__(ring, payload, params)
        self._module = None
        self._index = None
        self._twist = None
        self._ext = None

    def prepare(self):
        self._module = module_from_payload(self.ring, self._field('module'))
        self._index = self._field('index')
        if not isinstance(self._index, int):
            raise SchemaError("the Ext index is an integer", "/payload/index")
        self._twist = degree_from_json(self._payload.get('twist', list(self.ring.zero_degree())),
                                       "/payload/twist", self.ring.rank)

    def run(self):
        self._ext = ext_module(self._module, self._index, self._twist)
        logger.info("Ext^%d: %d minimal generators", self._index, self._ext.rank)

    def extract_report(self) -> Report:
        M = self._ext
        report = Report(KEYS.EXT, ReportStatus.OK,
                        summary={"generators": M.rank,
                                 "degrees": sorted(list(t) for t in M.generators.twists)})
        report.add(f"Ext^{self._index}", render_presented(M), to_json(M))
        return report
