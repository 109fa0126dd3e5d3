from werkzeug.datastructures import MultiDict

from multibgg.colorized_logger import get_logger
from multibgg.config import Config
from multibgg.diffmod import res_min_flag
from multibgg.io.payloads import dm_from_payload
from multibgg.jobs.Job import Job
from multibgg.jobs.KEYS import KEYS
from multibgg.jobs.ResDMJob import flag_report
from reports import Report

logger = get_logger('multibgg.jobs.ResMinFlagJob')


class ResMinFlagJob(Job):
    def __init__(self, ring, payload, params: MultiDict):
        super().__init__(ring, payload, params)
        self._dm = None
        self._resolution = None

    def prepare(self):
        self._dm = dm_from_payload(self.ring, self._field('dm'))

    def run(self):
        t = self._iterations
        if t is None:
            t = Config.default_max_iter or self.ring.nvars + 1
        logger.info("minimal free flag with %d blocks", t)
        self._resolution = res_min_flag(self._dm, t)

    def extract_report(self) -> Report:
        return flag_report(KEYS.RES_MIN_FLAG, self._resolution)
