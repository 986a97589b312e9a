"""JSON reports written by the command-line tool."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from . import __version__
from .artinian import HilbertFunction
from .concordance import ConcordanceVerdict
from .lefschetz import WlpReport
from .pencil import SplittingType
from .stability import StabilityReport

RESULT_TYPES = {
    "hilbert": HilbertFunction,
    "wlp": WlpReport,
    "split": SplittingType,
    "stable": StabilityReport,
    "concord": ConcordanceVerdict,
}


@dataclass(frozen=True)
class Report:
    command: tuple[str, ...]
    input: tuple[str, ...]
    kind: str
    result: Any
    seed: int
    version: str = __version__

    def result_dict(self) -> dict:
        return self.result.to_dict() if hasattr(self.result, "to_dict") else self.result

    def to_dict(self) -> dict:
        return {
            "command": list(self.command),
            "input": list(self.input),
            "kind": self.kind,
            "result": self.result_dict(),
            "seed": self.seed,
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        kind = data["kind"]
        result = data["result"]
        if kind in RESULT_TYPES:
            result = RESULT_TYPES[kind].from_dict(result)
        return cls(tuple(data["command"]), tuple(data["input"]), kind, result, data["seed"], data["version"])

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))
