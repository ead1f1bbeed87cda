"""Hand-rolled oracles used to cross-check the library.

Everything here deliberately avoids the code paths it checks: heights via
subset enumeration instead of the DP, monotonicity over all pairs instead
of covers, lower sets straight from the definition.
"""

from itertools import combinations

from finflow.poset import elements_of


def brute_height(p, x):
    """Longest chain inside the down-set of x, by trying every subset."""
    members = elements_of(p.down_set(x))
    best = 1
    for r in range(2, len(members) + 1):
        for combo in combinations(members, r):
            if all(p.comparable(a, b) for a, b in combinations(combo, 2)):
                best = max(best, r)
    return best - 1


def brute_monotone(p, values):
    """Order preservation checked on every pair, reflexive ones included."""
    return all(p.leq(values[x], values[y])
               for x in range(p.n) for y in range(p.n) if p.leq(x, y))


def brute_lower_sets(p):
    """All lower sets, straight from the definition (2^n scan)."""
    out = []
    for mask in range(1 << p.n):
        if all(p.leq(y, x) <= bool((mask >> y) & 1)
               for x in elements_of(mask) for y in range(p.n)):
            out.append(mask)
    return out


def brute_down_beats(p):
    """Down beat points via an explicit maximum search."""
    out = set()
    for x in range(p.n):
        below = [y for y in range(p.n) if p.lt(y, x)]
        for m in below:
            if all(p.leq(y, m) for y in below):
                out.add(x)
                break
    return out


def brute_up_beats(p):
    out = set()
    for x in range(p.n):
        above = [y for y in range(p.n) if p.lt(x, y)]
        for m in above:
            if all(p.leq(m, y) for y in above):
                out.add(x)
                break
    return out


def disjoint_union(p, q):
    """Side-by-side union of two posets with prefixed labels."""
    from finflow.poset import Poset

    labels = [f"l_{lab}" for lab in p.labels] + [f"r_{lab}" for lab in q.labels]
    pairs = [(f"l_{p.labels[a]}", f"l_{p.labels[b]}") for a, b in p.covers]
    pairs += [(f"r_{q.labels[a]}", f"r_{q.labels[b]}") for a, b in q.covers]
    return Poset.from_relations(labels, pairs)
