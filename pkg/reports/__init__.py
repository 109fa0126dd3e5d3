from .Report import Report
from .ReportStatus import ReportStatus
from .Section import Section
