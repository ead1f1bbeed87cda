"""Finite posets with bit-parallel subset operations.

Elements are dense integer indices ``0..n-1`` with a label table.  Subsets
are plain Python ints used as bitmasks (bit ``x`` set means element ``x``
is a member), so unions, intersections and containment tests are single
integer operations.  A poset doubles as a finite T0 topology: the open
sets are exactly the lower sets, and ``down_set(x)`` is the minimal open
set containing ``x``.
"""

from __future__ import annotations

from collections import Counter

from .errors import CycleError, SizeLimitError, UnknownLabelError

ISOMORPHISM_LIMIT = 16


def mask_of(indices):
    """Bitmask for an iterable of element indices."""
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def elements_of(mask):
    """Indices present in ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Poset:
    """Immutable finite poset over labelled elements.

    Construct with :meth:`from_relations`; the direct constructor expects
    prebuilt down-set rows and validates that they form a partial order.
    """

    __slots__ = ("n", "labels", "covers", "heights", "_down", "_up", "_index",
                 "_lower_covers", "_upper_covers")

    def __init__(self, labels, down_rows):
        labels = tuple(labels)
        down = tuple(down_rows)
        n = len(labels)
        if len(down) != n:
            raise ValueError("one relation row per label required")
        if len(set(labels)) != n:
            raise ValueError("labels must be distinct")
        full = (1 << n) - 1
        up = [0] * n
        for x in range(n):
            row = down[x]
            if row & ~full:
                raise ValueError("relation row references elements out of range")
            if not (row >> x) & 1:
                raise ValueError("order must be reflexive")
            for y in elements_of(row):
                up[y] |= 1 << x
        for x in range(n):
            if down[x] & up[x] != 1 << x:
                raise CycleError(f"antisymmetry violated at {labels[x]!r}")
            acc = 0
            for y in elements_of(down[x]):
                acc |= down[y]
            if acc != down[x]:
                raise ValueError("order must be transitive")
        self.n = n
        self.labels = labels
        self._down = down
        self._up = tuple(up)
        self._index = {lab: i for i, lab in enumerate(labels)}
        self.covers = self._transitive_reduction()
        self.heights = self._compute_heights()
        lower = [[] for _ in range(n)]
        upper = [[] for _ in range(n)]
        for a, b in self.covers:
            lower[b].append(a)
            upper[a].append(b)
        self._lower_covers = tuple(tuple(v) for v in lower)
        self._upper_covers = tuple(tuple(v) for v in upper)

    @classmethod
    def from_relations(cls, labels, pairs):
        """Build a poset from strict ``(lesser, greater)`` label pairs.

        Pairs may be arbitrary strict comparabilities, not just covers; the
        reflexive-transitive closure is applied.  Raises CycleError when the
        closure would violate antisymmetry and UnknownLabelError when a pair
        mentions an undeclared name.
        """
        labels = list(labels)
        index = {}
        for lab in labels:
            if lab in index:
                raise ValueError(f"duplicate label {lab!r}")
            index[lab] = len(index)
        n = len(labels)
        adj = [0] * n
        for a, b in pairs:
            if a not in index:
                raise UnknownLabelError(f"unknown label {a!r}")
            if b not in index:
                raise UnknownLabelError(f"unknown label {b!r}")
            ia, ib = index[a], index[b]
            if ia == ib:
                raise CycleError(f"{a!r} < {b!r} violates antisymmetry")
            adj[ia] |= 1 << ib
        up = list(adj)
        changed = True
        while changed:
            changed = False
            for x in range(n):
                acc = up[x]
                for y in elements_of(acc):
                    acc |= up[y]
                if acc != up[x]:
                    up[x] = acc
                    changed = True
        for x in range(n):
            if (up[x] >> x) & 1:
                for y in elements_of(up[x]):
                    if y != x and (up[y] >> x) & 1:
                        raise CycleError(
                            f"{labels[x]!r} < {labels[y]!r} and "
                            f"{labels[y]!r} < {labels[x]!r}")
                raise CycleError(f"cycle through {labels[x]!r}")
        down = [1 << x for x in range(n)]
        for x in range(n):
            for y in elements_of(up[x]):
                down[y] |= 1 << x
        return cls(labels, down)

    def _transitive_reduction(self):
        covers = []
        for b in range(self.n):
            below = self._down[b] & ~(1 << b)
            for a in elements_of(below):
                between = (self._up[a] & ~(1 << a)) & below
                if between == 0:
                    covers.append((a, b))
        covers.sort()
        return tuple(covers)

    def _compute_heights(self):
        # |down_set| grows strictly along <, so this order is topological
        order = sorted(range(self.n), key=lambda x: self._down[x].bit_count())
        ht = [0] * self.n
        for x in order:
            below = self._down[x] & ~(1 << x)
            if below:
                ht[x] = 1 + max(ht[y] for y in elements_of(below))
        return tuple(ht)

    # -- lookups ---------------------------------------------------------

    def index_of(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown label {label!r}") from None

    def labels_of(self, mask):
        return [self.labels[x] for x in elements_of(mask)]

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    # -- order queries ---------------------------------------------------

    def leq(self, x, y):
        return (self._down[y] >> x) & 1 == 1

    def lt(self, x, y):
        return x != y and self.leq(x, y)

    def comparable(self, x, y):
        return self.leq(x, y) or self.leq(y, x)

    def down_set(self, x):
        """Minimal open set containing x: everything at or below it."""
        return self._down[x]

    def up_set(self, x):
        """Closure of x: everything at or above it."""
        return self._up[x]

    def strict_down(self, x):
        return self._down[x] & ~(1 << x)

    def strict_up(self, x):
        return self._up[x] & ~(1 << x)

    def height_of(self, x):
        return self.heights[x]

    @property
    def height(self):
        """Longest chain length minus one; -1 for the empty poset."""
        return max(self.heights, default=-1)

    def lower_covers(self, x):
        return self._lower_covers[x]

    def upper_covers(self, x):
        return self._upper_covers[x]

    # -- subset operations -------------------------------------------------

    def maximal_elements(self, mask):
        out = 0
        for x in elements_of(mask):
            if self.strict_up(x) & mask == 0:
                out |= 1 << x
        return out

    def minimal_elements(self, mask):
        out = 0
        for x in elements_of(mask):
            if self.strict_down(x) & mask == 0:
                out |= 1 << x
        return out

    def maximum_of(self, mask):
        """Unique top of ``mask``, or None.

        In a finite poset a unique maximal element is automatically the
        maximum, so one uniqueness check suffices.
        """
        m = self.maximal_elements(mask)
        if m and m & (m - 1) == 0:
            return m.bit_length() - 1
        return None

    def minimum_of(self, mask):
        m = self.minimal_elements(mask)
        if m and m & (m - 1) == 0:
            return m.bit_length() - 1
        return None

    def is_lower_set(self, mask):
        for x in elements_of(mask):
            if self._down[x] & ~mask:
                return False
        return True

    def induced(self, mask):
        """Subposet on ``mask``.

        Returns ``(poset, old_indices)`` where ``old_indices[i]`` is the
        original index of the new element ``i``; labels are retained.
        """
        old = elements_of(mask)
        pos = {o: i for i, o in enumerate(old)}
        rows = []
        for o in old:
            row = 0
            for y in elements_of(self._down[o] & mask):
                row |= 1 << pos[y]
            rows.append(row)
        return Poset([self.labels[o] for o in old], rows), tuple(old)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self._down == other._down

    def __hash__(self):
        return hash((self.labels, self._down))

    def __repr__(self):
        return f"Poset({self.n} elements, {len(self.covers)} covers)"


def is_isomorphic(p, q, max_n=None):
    """Exact order-isomorphism test by backtracking.

    Candidates are pruned by per-element invariants (height, down/up set
    sizes, cover degrees).  Worst case exponential, hence the size guard;
    it is only meant for small cores.
    """
    limit = ISOMORPHISM_LIMIT if max_n is None else max_n
    if p.n > limit or q.n > limit:
        raise SizeLimitError(f"isomorphism test limited to {limit} elements")
    if p.n != q.n:
        return False

    def profile(r, x):
        return (r.heights[x], r.down_set(x).bit_count(), r.up_set(x).bit_count(),
                len(r.lower_covers(x)), len(r.upper_covers(x)))

    pprof = [profile(p, x) for x in range(p.n)]
    qprof = [profile(q, x) for x in range(q.n)]
    if sorted(pprof) != sorted(qprof):
        return False
    freq = Counter(pprof)
    order = sorted(range(p.n), key=lambda x: (freq[pprof[x]], x))
    cands = [[y for y in range(q.n) if qprof[y] == pprof[x]] for x in range(p.n)]
    mapped = [-1] * p.n
    used = [False] * q.n

    def extend(k):
        if k == p.n:
            return True
        x = order[k]
        for y in cands[x]:
            if used[y]:
                continue
            ok = True
            for j in range(k):
                u = order[j]
                if p.leq(u, x) != q.leq(mapped[u], y) or p.leq(x, u) != q.leq(y, mapped[u]):
                    ok = False
                    break
            if ok:
                mapped[x] = y
                used[y] = True
                if extend(k + 1):
                    return True
                used[y] = False
                mapped[x] = -1
        return False

    return extend(0)
