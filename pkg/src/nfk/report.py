from __future__ import annotations

import json
from dataclasses import dataclass, field

PROVENANCE = ("formula", "enumeration", "brute-force", "table")


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def add(self, key: str, value, provenance: str) -> None:
        if provenance not in PROVENANCE:
            raise ValueError(f"unknown provenance {provenance!r}")
        self.results[key] = str(value)
        self.provenance[key] = provenance

    def warn(self, message: str) -> None:
        self.warnings.append(message)

    def to_dict(self) -> dict:
        return {"command": self.command, "inputs": {k: str(v) for k, v in self.inputs.items()},
                "results": self.results, "provenance": self.provenance,
                "warnings": self.warnings}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"{self.command}: " + " ".join(f"{k}={v}" for k, v in self.inputs.items())]
        width = max((len(k) for k in self.results), default=0)
        for key, value in self.results.items():
            lines.append(f"  {key:<{width}}  {value}  [{self.provenance[key]}]")
        for w in self.warnings:
            lines.append(f"  warning: {w}")
        return "\n".join(lines) + "\n"
