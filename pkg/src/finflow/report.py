"""Aggregated analysis results with lossless JSON round-tripping."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields

from . import reduction, semiflow
from .errors import SchemaError
from .poset import elements_of

SCHEMA_VERSION = 1


@dataclass
class AnalysisReport:
    """Everything the analyzer knows about one space, in JSON-able form.

    Semiflow maps are listed in canonical (lexicographic value table)
    order with identity entries omitted.
    """

    labels: list
    covers: list
    heights: list
    down_beat_points: list
    up_beat_points: list
    is_minimal: bool
    core_labels: list
    core_trace: list
    potential_points: list
    s_f: int
    nontrivial_semiflows: list
    bounds_checked: list
    schema: int = SCHEMA_VERSION

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise SchemaError("report must be an object")
        if data.get("schema") != SCHEMA_VERSION:
            raise SchemaError(f"unsupported report schema: {data.get('schema')!r}")
        names = {f.name for f in fields(cls)}
        missing = names - data.keys()
        if missing:
            raise SchemaError(f"report is missing fields: {sorted(missing)}")
        return cls(**{k: v for k, v in data.items() if k in names})

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text):
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None


def analyze(p, max_n=None):
    """Full report: beat structure, core, potential points, semiflow census."""
    flows = semiflow.enumerate_semiflows(p, max_n=max_n)
    checks = semiflow.verify_counting_results(p, max_n=max_n, flows=flows)
    core_poset, trace = reduction.core(p)
    pot_mask = reduction.potential_down_beat_points(p, max_n=max_n)
    witnesses = []
    for x in elements_of(pot_mask):
        seq = reduction.removal_sequence_for(p, x, max_n=max_n)
        witnesses.append({
            "point": p.labels[x],
            "witness": [p.labels[i] for i in seq.points],
        })
    return AnalysisReport(
        labels=list(p.labels),
        covers=[[p.labels[a], p.labels[b]] for a, b in p.covers],
        heights=list(p.heights),
        down_beat_points=p.labels_of(reduction.down_beat_points(p)),
        up_beat_points=p.labels_of(reduction.up_beat_points(p)),
        is_minimal=reduction.is_minimal_space(p),
        core_labels=list(core_poset.labels),
        core_trace=[p.labels[x] for x in trace],
        potential_points=witnesses,
        s_f=len(flows),
        nontrivial_semiflows=[sf.moves() for sf in flows if not sf.trivial],
        bounds_checked=[{"name": c.name, "satisfied": c.satisfied, "detail": c.detail}
                        for c in checks],
    )
