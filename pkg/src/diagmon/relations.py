"""Binary relations on {1..n} under composition and converse.

A relation is stored as one bitmask per source point, so composition is a
bitwise OR over the rows picked out by the left factor.  This keeps
exhaustive sweeps over all 2^(n*n) relations fast for n <= 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import Subset
from .errors import DegreeMismatchError, ValidationError


class BinaryRelation:
    """An n x n boolean incidence structure.  Immutable."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n, rows):
        self.n = n
        self.rows = rows
        self._hash = hash((n, rows))

    def __eq__(self, other):
        return (
            isinstance(other, BinaryRelation)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"BinaryRelation({self.n}, pairs={sorted(self.pairs())})"

    def __contains__(self, pair):
        x, y = pair
        return 1 <= x <= self.n and 1 <= y <= self.n and self.rows[x - 1] >> (y - 1) & 1

    def pairs(self):
        return frozenset(
            (x + 1, y + 1)
            for x in range(self.n)
            for y in range(self.n)
            if self.rows[x] >> y & 1
        )

    def to_json(self):
        return {"n": self.n, "pairs": sorted(map(list, self.pairs()))}

    @classmethod
    def from_json(cls, data):
        return from_pairs(data["n"], data["pairs"])


def from_pairs(n, pairs) -> BinaryRelation:
    rows = [0] * n
    for x, y in pairs:
        if not (1 <= x <= n and 1 <= y <= n):
            raise ValidationError(f"pair ({x},{y}) outside 1..{n}")
        rows[x - 1] |= 1 << (y - 1)
    return BinaryRelation(n, tuple(rows))


def identity_rel(n) -> BinaryRelation:
    return BinaryRelation(n, tuple(1 << i for i in range(n)))


def partial_identity(a: Subset) -> BinaryRelation:
    return from_pairs(a.n, [(x, x) for x in a.members])


def empty_rel(n) -> BinaryRelation:
    return BinaryRelation(n, (0,) * n)


def full_rel(n) -> BinaryRelation:
    return BinaryRelation(n, ((1 << n) - 1,) * n)


def compose(a: BinaryRelation, b: BinaryRelation) -> BinaryRelation:
    """(x,y) in ab iff (x,u) in a and (u,y) in b for some u."""
    if a.n != b.n:
        raise DegreeMismatchError(f"degree {a.n} != {b.n}")
    out = []
    for row in a.rows:
        acc = 0
        u = 0
        while row:
            if row & 1:
                acc |= b.rows[u]
            row >>= 1
            u += 1
        out.append(acc)
    return BinaryRelation(a.n, tuple(out))


def converse(a: BinaryRelation) -> BinaryRelation:
    out = [0] * a.n
    for x in range(a.n):
        row = a.rows[x]
        y = 0
        while row:
            if row & 1:
                out[y] |= 1 << x
            row >>= 1
            y += 1
    return BinaryRelation(a.n, tuple(out))


@dataclass(frozen=True)
class RelationParams:
    dom: Subset
    codom: Subset
    ker: frozenset  # pairs over dom; reflexive and symmetric, maybe not transitive
    coker: frozenset  # pairs over codom


def rel_params(a: BinaryRelation) -> RelationParams:
    n = a.n
    dom = frozenset(x + 1 for x in range(n) if a.rows[x])
    codom_mask = 0
    for row in a.rows:
        codom_mask |= row
    codom = frozenset(y + 1 for y in range(n) if codom_mask >> y & 1)
    ker = frozenset(
        (x + 1, y + 1)
        for x in range(n)
        for y in range(n)
        if a.rows[x] & a.rows[y]
    )
    conv = converse(a)
    coker = frozenset(
        (x + 1, y + 1)
        for x in range(n)
        for y in range(n)
        if conv.rows[x] & conv.rows[y]
    )
    return RelationParams(Subset(n, dom), Subset(n, codom), ker, coker)


@dataclass(frozen=True)
class RelationPredicates:
    injective: bool
    coinjective: bool
    surjective: bool
    cosurjective: bool


def predicates(a: BinaryRelation) -> RelationPredicates:
    p = rel_params(a)
    trivial_on = lambda rel, s: rel == frozenset((x, x) for x in s.members)
    return RelationPredicates(
        injective=trivial_on(p.ker, p.dom),
        coinjective=trivial_on(p.coker, p.codom),
        surjective=len(p.codom) == a.n,
        cosurjective=len(p.dom) == a.n,
    )


def is_partial_function(a: BinaryRelation) -> bool:
    """Membership in the partial transformation monoid (coinjective)."""
    return all(row == 0 or row & (row - 1) == 0 for row in a.rows)


def is_total_function(a: BinaryRelation) -> bool:
    return all(row != 0 and row & (row - 1) == 0 for row in a.rows)


def is_partial_bijection(a: BinaryRelation) -> bool:
    if not is_partial_function(a):
        return False
    seen = 0
    for row in a.rows:
        if row & seen:
            return False
        seen |= row
    return True
