import json
from abc import abstractmethod
from typing import Any, Dict, Optional

from werkzeug.datastructures import MultiDict

from multibgg.colorized_logger import get_logger, set_level
from multibgg.config import Config
from multibgg.errors import SchemaError
from multibgg.io.serialize import require
from reports import Report

logger = get_logger('multibgg.jobs.Job')


def _read_json(value, pointer: str):
    if not isinstance(value, str):
        return value
    try:
        return json.loads(value)
    except json.JSONDecodeError as e:
        raise SchemaError(f"not valid JSON: {e.msg}", pointer) from None


class Job:
    """
    One batch computation. The front ends build the ring and hand over the
    raw payload plus the options as a MultiDict, then call prepare, run and
    extract_report in that order.
    """

    def __init__(self, ring, payload: Dict[str, Any], params: MultiDict):
        self._ring = ring
        self._payload = payload if payload is not None else {}
        if not isinstance(self._payload, dict):
            raise SchemaError("the payload is a JSON object", "/payload")

        Config.theta_search_bound = params.get('theta_bound', 10, type=int)
        Config.default_max_iter = params.get('max_iter', None, type=int)
        log_level = params.get('log_level', None)
        if log_level:
            set_level(log_level)
        self._max_iter: Optional[int] = params.get('max_iter', None, type=int)
        self._iterations: Optional[int] = params.get('iterations', None, type=int)
        self._degree_list = _read_json(params.get('degree_list', None), "/options/degreeList")

    @property
    def ring(self):
        return self._ring

    def _field(self, key: str):
        return require(self._payload, key, "/payload")

    @abstractmethod
    def prepare(self):
        """Parse and validate the payload. Raises SchemaError or AlgebraicError."""
        raise NotImplementedError

    @abstractmethod
    def run(self):
        raise NotImplementedError

    @abstractmethod
    def extract_report(self) -> Report:
        raise NotImplementedError
