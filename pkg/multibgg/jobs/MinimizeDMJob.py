from werkzeug.datastructures import MultiDict

from multibgg.colorized_logger import get_logger
from multibgg.diffmod import is_minimal_dm, minimize_dm, res_dm
from multibgg.io.payloads import dm_from_payload
from multibgg.io.render import render_dm
from multibgg.io.serialize import to_json
from multibgg.jobs.Job import Job
from multibgg.jobs.KEYS import KEYS
from reports import Report, ReportStatus

logger = get_logger('multibgg.jobs.MinimizeDMJob')


class MinimizeDMJob(Job):
    """
    Minimize a free differential module. With "resolve": true in the payload
    the module is first replaced by its free flag resolution.
    """

    def __init__(self, ring, payload, params: MultiDict):
        super().__init__(ring, payload, params)
        self._resolve = bool(self._payload.get('resolve', False))
        self._dm = None
        self._minimal = None
        self._status = ReportStatus.OK

    def prepare(self):
        self._dm = dm_from_payload(self.ring, self._field('dm'))

    def run(self):
        if self._resolve:
            resolution = res_dm(self._dm, self._max_iter)
            if not resolution.complete:
                self._status = ReportStatus.TRUNCATED
            self._dm = resolution.flag
        self._minimal = minimize_dm(self._dm)
        logger.info("minimized rank %d to rank %d", self._dm.rank, self._minimal.rank)

    def extract_report(self) -> Report:
        D = self._minimal
        report = Report(KEYS.MINIMIZE_DM, self._status,
                        summary={"rank before": self._dm.rank, "rank": D.rank,
                                 "degrees": sorted((list(t) for t in D.generators.twists), reverse=True),
                                 "minimal": is_minimal_dm(D)})
        report.add("minimal differential module", render_dm(D), to_json(D))
        return report
