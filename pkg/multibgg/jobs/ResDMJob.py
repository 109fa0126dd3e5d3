from werkzeug.datastructures import MultiDict

from multibgg.colorized_logger import get_logger
from multibgg.diffmod import is_minimal_dm, res_dm
from multibgg.diffmod.FlagResolution import FlagResolution
from multibgg.io.payloads import dm_from_payload
from multibgg.io.render import render_dm, render_matrix
from multibgg.io.serialize import to_json
from multibgg.jobs.Job import Job
from multibgg.jobs.KEYS import KEYS
from reports import Report, ReportStatus

logger = get_logger('multibgg.jobs.ResDMJob')


def flag_summary(res: FlagResolution) -> dict:
    return {"rank": res.flag.rank,
            "degrees": sorted((list(t) for t in res.flag.generators.twists), reverse=True),
            "blocks": [len(b) for b in res.flag.flag],
            "iterations": res.iterations,
            "minimal": is_minimal_dm(res.flag)}


def flag_report(command: KEYS, res: FlagResolution) -> Report:
    status = ReportStatus.OK if res.complete else ReportStatus.TRUNCATED
    report = Report(command, status, summary=flag_summary(res))
    report.add("free flag", render_dm(res.flag), to_json(res.flag))
    report.add("augmentation", render_matrix(res.augmentation.matrix), to_json(res.augmentation.matrix))
    return report


class ResDMJob(Job):
    def __init__(self, ring, payload, params: MultiDict):
        super().__init__(ring, payload, params)
        self._dm = None
        self._resolution = None

    def prepare(self):
        self._dm = dm_from_payload(self.ring, self._field('dm'))

    def run(self):
        logger.info("resolving a rank %d differential module of degree %s", self._dm.rank, self._dm.degree)
        self._resolution = res_dm(self._dm, self._max_iter)

    def extract_report(self) -> Report:
        return flag_report(KEYS.RES_DM, self._resolution)
