import json
from dataclasses import dataclass, field
from typing import Any, Dict

from werkzeug.datastructures import MultiDict

from multibgg.errors import SchemaError
from multibgg.io.serialize import check_schema, require, ring_from_json
from multibgg.jobs.KEYS import KEYS

OPTION_KEYS = {
    "maxIter": "max_iter",
    "iterations": "iterations",
    "degreeList": "degree_list",
    "thetaBound": "theta_bound",
    "logLevel": "log_level",
}
FORMATS = ("text", "json", "both")


@dataclass
class JobSpec:
    """A JobSpec document: {"schema": 1, "command", "ring", "payload", "options"}."""
    command: KEYS
    ring: Any
    payload: Dict[str, Any]
    options: MultiDict = field(default_factory=MultiDict)
    format: str = "text"

    @staticmethod
    def from_json(doc) -> "JobSpec":
        check_schema(doc)
        command = require(doc, "command", "")
        try:
            command = KEYS(command)
        except ValueError:
            raise SchemaError(f"unknown command {command!r}, expected one of {[k.value for k in KEYS]}",
                              "/command") from None
        ring = ring_from_json(require(doc, "ring", ""), "/ring")
        payload = doc.get("payload", {})
        if not isinstance(payload, dict):
            raise SchemaError("the payload is a JSON object", "/payload")
        raw = doc.get("options", {})
        if not isinstance(raw, dict):
            raise SchemaError("options is a JSON object", "/options")
        options = MultiDict()
        fmt = raw.get("format", "text")
        if fmt not in FORMATS:
            raise SchemaError(f"format must be one of {FORMATS}", "/options/format")
        for key, value in raw.items():
            if key == "format":
                continue
            if key not in OPTION_KEYS:
                raise SchemaError(f"unknown option {key!r}", f"/options/{key}")
            if key in ("maxIter", "iterations", "thetaBound") and (not isinstance(value, int) or value < 0):
                raise SchemaError(f"{key} is a non-negative integer", f"/options/{key}")
            options[OPTION_KEYS[key]] = json.dumps(value) if key == "degreeList" else value
        return JobSpec(command, ring, payload, options, fmt)
