from dataclasses import dataclass, field
from typing import Any, Dict, List

from reports.ReportStatus import ReportStatus
from reports.Section import Section


@dataclass
class Report:
    command: str
    status: ReportStatus
    sections: List[Section] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)
    """small scalar facts (ranks, degrees, flags) shown above the sections"""

    @property
    def truncated(self) -> bool:
        return self.status is ReportStatus.TRUNCATED

    def add(self, title: str, text: str, data: Any = None) -> "Report":
        self.sections.append(Section(title, text, data))
        return self

    def to_json(self) -> Dict[str, Any]:
        return {"schema": 1, "command": self.command, "status": self.status.value, "summary": self.summary,
                "sections": [{"title": s.title, "text": s.text, "data": s.data} for s in self.sections]}

    def to_text(self) -> str:
        lines = [f"== {self.command} ({self.status.value})"]
        lines.extend(f"{key}: {value}" for key, value in self.summary.items())
        for s in self.sections:
            lines.append("")
            lines.append(f"-- {s.title}")
            lines.append(s.text)
        return "\n".join(lines)
