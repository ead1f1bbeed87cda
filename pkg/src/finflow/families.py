"""Deterministic generators for the named example spaces and random posets."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSpecError
from .poset import Poset
from .prng import Xorshift64Star

KINDS = ("chain", "antichain", "example_3_1", "example_2_5", "pseudo_circle",
         "cone", "x_n", "random")

_NEEDS_N = ("chain", "antichain", "x_n", "random")


def chain(n):
    """Total order c0 < c1 < ... on n elements."""
    labels = [f"c{i}" for i in range(n)]
    return Poset.from_relations(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])


def antichain(n):
    """n pairwise incomparable elements."""
    return Poset.from_relations([f"a{i}" for i in range(n)], [])


def pseudo_circle():
    """The 4-point minimal space a, b < c, d."""
    return Poset.from_relations(
        ["a", "b", "c", "d"],
        [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])


def example_3_1():
    """Six points: top A over B, C, which share the bottleneck D over minima E, F."""
    pairs = []
    for low in "BCDEF":
        pairs.append((low, "A"))
    for low in "DEF":
        pairs.append((low, "B"))
        pairs.append((low, "C"))
    pairs += [("E", "D"), ("F", "D")]
    return Poset.from_relations(list("ABCDEF"), pairs)


def example_2_5():
    """Five points: a pseudo-circle A, B < C, D plus a top E over A, B, C only."""
    return Poset.from_relations(
        list("ABCDE"),
        [("A", "C"), ("A", "D"), ("B", "C"), ("B", "D"),
         ("A", "E"), ("B", "E"), ("C", "E")])


def cone(p, apex="top"):
    """Add a new maximum above everything; primes the label on collision."""
    label = apex
    while label in p.labels:
        label += "'"
    labels = list(p.labels) + [label]
    pairs = [(p.labels[a], p.labels[b]) for a, b in p.covers]
    pairs += [(lab, label) for lab in p.labels]
    return Poset.from_relations(labels, pairs)


def realization_family(n):
    """Space with a single down beat point but n + 2 semiflows in total.

    Level i (0 <= i <= n) holds a removable point x{i} over its landing
    point y{i}; pins z{i} (i >= 1) keep the y{i} from ever becoming
    removable themselves, so moving x{i} requires moving every x{j} below
    it first.  Cross-level relations put y{i}, x{i}, z{i} under x{j} and
    y{i}, z{i} under y{j} for i < j.
    """
    if n < 0:
        raise InvalidSpecError("x_n family needs n >= 0")
    labels = ["y0", "x0"]
    pairs = [("y0", "x0")]
    for i in range(1, n + 1):
        labels += [f"z{i}", f"y{i}", f"x{i}"]
        pairs += [(f"z{i}", f"y{i}"), (f"y{i}", f"x{i}")]
    for j in range(n + 1):
        for i in range(j):
            pairs += [(f"y{i}", f"x{j}"), (f"y{i}", f"y{j}"), (f"x{i}", f"x{j}")]
            if i >= 1:
                pairs += [(f"z{i}", f"x{j}"), (f"z{i}", f"y{j}")]
    return Poset.from_relations(labels, pairs)


def random_poset(n, edge_prob, seed):
    """Random DAG on a fixed topological order, closed into a partial order.

    Each edge i -> j with i < j is kept independently with probability
    ``edge_prob`` using the deterministic generator from :mod:`finflow.prng`,
    so (n, edge_prob, seed) pins the result exactly.  edge_prob 0 gives the
    antichain, edge_prob 1 the chain.
    """
    if n < 0:
        raise InvalidSpecError("random poset needs n >= 0")
    if not 0.0 <= edge_prob <= 1.0:
        raise InvalidSpecError("edge probability must be in [0, 1]")
    rng = Xorshift64Star(seed)
    labels = [f"v{i}" for i in range(n)]
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.next_float() < edge_prob:
                pairs.append((labels[i], labels[j]))
    return Poset.from_relations(labels, pairs)


def random_corpus(count, max_n, seed):
    """Fixed-seed list of random posets with 1..max_n elements."""
    rng = Xorshift64Star(seed)
    out = []
    for _ in range(count):
        n = 1 + rng.next_int(max_n)
        prob = rng.next_float()
        out.append(random_poset(n, prob, rng.next_u64()))
    return out


@dataclass(frozen=True)
class GeneratorSpec:
    """Description of a generated space; ``make`` turns it into a poset."""

    kind: str
    n: int | None = None
    seed: int = 0
    edge_prob: float = 0.5

    def validate(self):
        if self.kind not in KINDS:
            raise InvalidSpecError(f"unknown kind {self.kind!r} (choose from {', '.join(KINDS)})")
        if self.kind in _NEEDS_N:
            if self.n is None or self.n < 0:
                raise InvalidSpecError(f"kind {self.kind!r} needs n >= 0")
        if self.kind == "random" and not 0.0 <= self.edge_prob <= 1.0:
            raise InvalidSpecError("edge probability must be in [0, 1]")


def make(spec):
    """Build the poset a GeneratorSpec describes; pure for a fixed spec."""
    spec.validate()
    kind = spec.kind
    if kind == "chain":
        return chain(spec.n)
    if kind == "antichain":
        return antichain(spec.n)
    if kind == "example_3_1":
        return example_3_1()
    if kind == "example_2_5":
        return example_2_5()
    if kind == "pseudo_circle":
        return pseudo_circle()
    if kind == "cone":
        return cone(pseudo_circle())
    if kind == "x_n":
        return realization_family(spec.n)
    return random_poset(spec.n, spec.edge_prob, spec.seed)
