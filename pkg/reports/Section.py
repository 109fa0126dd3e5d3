from dataclasses import dataclass
from typing import Any, Optional


@dataclass
class Section:
    title: str
    text: str
    """transcript-style rendering"""
    data: Optional[Any] = None
    """JSON document of the same object (schema 1)"""
