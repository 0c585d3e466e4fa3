"""Findings, run configuration and the append-only JSONL cache."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from ..generators import CorpusSpec

PROPERTIES = (
    "oracle_agreement",
    "reed_bound",
    "theorem_2_1",
    "prop_a",
    "prop_b",
    "lemma_2_1",
    "fact_u_literal",
    "peel_safety",
    "fact_2_2",
    "fact_2_3",
    "claim_2_1",
    "independentize",
)
# a Violated finding for these means the code is wrong, not the mathematics
BLOCKING = frozenset({"oracle_agreement", "peel_safety", "fact_2_2", "independentize"})


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


@dataclass(frozen=True)
class Finding:
    graph_key: str
    property_id: str
    verdict: str
    certificates: dict = field(default_factory=dict)
    solver_stats: dict = field(default_factory=dict)
    config_hash: str = ""

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.graph_key, self.property_id, self.config_hash)

    @property
    def blocking_violation(self) -> bool:
        return self.verdict == "Violated" and self.property_id in BLOCKING

    def to_json(self) -> dict:
        return asdict(self)

    def to_line(self) -> str:
        return dumps(self.to_json())

    @classmethod
    def from_json(cls, d: dict) -> "Finding":
        return cls(d["graph_key"], d["property_id"], d["verdict"], d.get("certificates", {}),
                   d.get("solver_stats", {}), d.get("config_hash", ""))


@dataclass(frozen=True)
class RunConfig:
    corpus: tuple[CorpusSpec, ...]
    properties: tuple[str, ...] = PROPERTIES
    node_limit: int | None = None
    time_limit: float | None = None
    peel_policy: str = "deg3"
    max_dsets: int = 64
    seed: int = 0
    fact_u_injection: dict | None = None
    workers: int = 1  # not part of the hash: output must not depend on it

    def __post_init__(self):
        unknown = set(self.properties) - set(PROPERTIES)
        if unknown:
            raise ValueError(f"unknown properties {sorted(unknown)}")

    def to_json(self) -> dict:
        return {
            "corpus": [c.to_json() for c in self.corpus],
            "properties": list(self.properties),
            "node_limit": self.node_limit,
            "time_limit": self.time_limit,
            "peel_policy": self.peel_policy,
            "max_dsets": self.max_dsets,
            "seed": self.seed,
            "fact_u_injection": self.fact_u_injection,
            "workers": self.workers,
        }

    @classmethod
    def from_json(cls, d: dict) -> "RunConfig":
        d = dict(d)
        d["corpus"] = tuple(CorpusSpec.from_json(c) for c in d["corpus"])
        d["properties"] = tuple(d.get("properties", PROPERTIES))
        return cls(**d)

    def config_hash(self) -> str:
        payload = self.to_json()
        del payload["workers"]
        payload["properties"] = sorted(payload["properties"])
        return hashlib.sha256(dumps(payload).encode()).hexdigest()[:16]


class CacheError(ValueError):
    pass


def read_findings(path: Path | str) -> tuple[list[Finding], list[tuple[int, str]]]:
    """Parse a findings JSONL file; bad lines come back as (line number, error)."""
    findings, errors = [], []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                findings.append(Finding.from_json(json.loads(line)))
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                errors.append((lineno, str(exc)))
    return findings, errors


class ResultCache:
    """Append-only JSONL keyed by (graph key, property, config hash); on load,
    later lines win over earlier ones with the same key."""

    def __init__(self, path: Path | str | None):
        self.path = Path(path) if path else None
        self.entries: dict[tuple[str, str, str], Finding] = {}
        self.errors: list[tuple[int, str]] = []
        if self.path and self.path.exists():
            found, self.errors = read_findings(self.path)
            for f in found:
                self.entries[f.key] = f

    def get(self, key: tuple[str, str, str]) -> Finding | None:
        return self.entries.get(key)

    def append(self, findings: Iterable[Finding]) -> None:
        findings = list(findings)
        for f in findings:
            self.entries[f.key] = f
        if self.path and findings:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as fh:
                for f in findings:
                    fh.write(f.to_line() + "\n")

    def __iter__(self) -> Iterator[Finding]:
        return iter(self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)
