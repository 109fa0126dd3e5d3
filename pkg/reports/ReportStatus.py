from enum import Enum


class ReportStatus(Enum):
    OK = "ok"
    TRUNCATED = "truncated"
