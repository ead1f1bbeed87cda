"""Poset text/JSON formats and DOT export."""

from __future__ import annotations

import json

from .errors import ParseError, SchemaError, UnknownLabelError
from .poset import Poset


def parse_poset_text(text):
    """Parse the line-oriented poset format.

    Grammar: optional ``elements: a b c`` declaration lines, one strict
    relation ``a < b`` per line, ``#`` starts a comment, blank lines are
    ignored.  Undeclared names are auto-registered in order of first
    appearance.  CycleError propagates from closure.
    """
    labels = []
    seen = set()
    pairs = []

    def register(name):
        if name not in seen:
            seen.add(name)
            labels.append(name)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            for name in line[len("elements:"):].split():
                if "<" in name:
                    raise ParseError(lineno, f"element name {name!r} may not contain '<'")
                if name in seen:
                    raise ParseError(lineno, f"element {name!r} declared twice")
                register(name)
            continue
        parts = line.split("<")
        if len(parts) != 2:
            raise ParseError(lineno, "expected exactly one '<' per relation line")
        a, b = parts[0].strip(), parts[1].strip()
        if not a or not b or len(a.split()) != 1 or len(b.split()) != 1:
            raise ParseError(lineno, f"malformed relation {line.strip()!r}")
        register(a)
        register(b)
        pairs.append((a, b))
    return Poset.from_relations(labels, pairs)


def write_poset_text(p):
    """Text form: an elements line plus one cover relation per line."""
    lines = []
    if p.n:
        lines.append("elements: " + " ".join(p.labels))
    for a, b in p.covers:
        lines.append(f"{p.labels[a]} < {p.labels[b]}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_poset_json(text):
    """Parse ``{"elements": [...], "relations": [[lesser, greater], ...]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SchemaError("top level must be an object")
    elements = data.get("elements")
    relations = data.get("relations")
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise SchemaError("'elements' must be a list of names")
    if not isinstance(relations, list):
        raise SchemaError("'relations' must be a list of [lesser, greater] pairs")
    pairs = []
    for item in relations:
        if not (isinstance(item, list) and len(item) == 2
                and all(isinstance(s, str) for s in item)):
            raise SchemaError(f"bad relation entry: {item!r}")
        pairs.append((item[0], item[1]))
    try:
        return Poset.from_relations(elements, pairs)
    except UnknownLabelError as exc:
        raise SchemaError(str(exc)) from None
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def write_poset_json(p):
    data = {
        "elements": list(p.labels),
        "relations": [[p.labels[a], p.labels[b]] for a, b in p.covers],
    }
    return json.dumps(data, indent=2) + "\n"


def _q(label):
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(p, annotate=None):
    """Hasse diagram in DOT: cover edges oriented bottom-to-top, ranks by height.

    With ``annotate`` set to a semiflow, every moved point gets a dashed
    arrow to its image.
    """
    lines = ["digraph poset {", "  rankdir=BT;"]
    for x in range(p.n):
        lines.append(f"  {_q(p.labels[x])};")
    by_height = {}
    for x in range(p.n):
        by_height.setdefault(p.heights[x], []).append(x)
    for h in sorted(by_height):
        if len(by_height[h]) > 1:
            row = " ".join(f"{_q(p.labels[x])};" for x in by_height[h])
            lines.append(f"  {{ rank=same; {row} }}")
    for a, b in p.covers:
        lines.append(f"  {_q(p.labels[a])} -> {_q(p.labels[b])};")
    if annotate is not None:
        for x, v in enumerate(annotate.retraction.values):
            if v != x:
                lines.append(
                    f"  {_q(p.labels[x])} -> {_q(p.labels[v])} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"
