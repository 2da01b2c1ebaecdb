"""Partition diagrams on two rows of n points, and their arithmetic.

A diagram of degree n is a set partition of the 2n vertices
{1..n} (upper row) and {1'..n'} (lower row).  Externally a vertex is a
signed integer: +i for upper, -i for lower.  Internally vertices are
0-based: i-1 for upper i, n+i-1 for lower i'.  Every diagram is stored in
canonical form: ``code[v]`` is the block id of vertex v, with ids assigned
in first-occurrence order scanning 1..n then 1'..n'.  Two equal set
partitions therefore have identical encodings, so hashing and equality
are O(n).

Multiplication stacks two diagrams, identifies the lower row of the first
with the upper row of the second, and reads off connected components on
the outer rows (a union-find over 3n nodes).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DegreeMismatchError, ValidationError


def _canonical(labels):
    """Relabel a block-id sequence in first-occurrence order."""
    relabel = {}
    out = []
    for x in labels:
        if x not in relabel:
            relabel[x] = len(relabel)
        out.append(relabel[x])
    return tuple(out)


@dataclass(frozen=True)
class Subset:
    """A subset of the points {1..n}."""

    n: int
    members: frozenset

    def __post_init__(self):
        bad = [x for x in self.members if not 1 <= x <= self.n]
        if bad:
            raise ValidationError(f"point {bad[0]} outside 1..{self.n}")

    @classmethod
    def of(cls, n, members):
        return cls(n, frozenset(members))

    @classmethod
    def full(cls, n):
        return cls(n, frozenset(range(1, n + 1)))

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class SetPartition:
    """A set partition of {1..n}, canonically labelled.

    ``code[i]`` is the block id of point i+1, in first-occurrence order.
    """

    n: int
    code: tuple

    @classmethod
    def from_blocks(cls, n, blocks):
        assign = {}
        for block in blocks:
            bid = len(assign)
            for x in block:
                if not 1 <= x <= n:
                    raise ValidationError(f"point {x} outside 1..{n}")
                if x in assign:
                    raise ValidationError(f"point {x} appears in two blocks")
                assign[x] = bid
        missing = [x for x in range(1, n + 1) if x not in assign]
        if missing:
            raise ValidationError(f"point {missing[0]} not covered")
        return cls(n, _canonical(assign[x] for x in range(1, n + 1)))

    @classmethod
    def discrete(cls, n):
        return cls(n, tuple(range(n)))

    @classmethod
    def universal(cls, n):
        return cls(n, (0,) * n)

    def classes(self):
        """Blocks as a tuple of frozensets of points, ordered by block id."""
        k = len(set(self.code))
        out = [[] for _ in range(k)]
        for i, b in enumerate(self.code):
            out[b].append(i + 1)
        return tuple(frozenset(c) for c in out)

    def num_classes(self):
        return len(set(self.code))

    def refines(self, other):
        """True iff every block of self lies inside a block of other."""
        if self.n != other.n:
            raise DegreeMismatchError(f"degree {self.n} != {other.n}")
        image = {}
        for a, b in zip(self.code, other.code):
            if image.setdefault(a, b) != b:
                return False
        return True

    def join(self, other):
        """Least common coarsening of two set partitions."""
        if self.n != other.n:
            raise DegreeMismatchError(f"degree {self.n} != {other.n}")
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for code in (self.code, other.code):
            first = {}
            for i, b in enumerate(code):
                if b in first:
                    parent[find(i)] = find(first[b])
                else:
                    first[b] = i
        return SetPartition(self.n, _canonical(find(i) for i in range(self.n)))


class Partition:
    """A partition diagram in canonical form.  Immutable."""

    __slots__ = ("n", "code", "_hash")

    def __init__(self, n, code):
        self.n = n
        self.code = code
        self._hash = hash((n, code))

    def __eq__(self, other):
        return (
            isinstance(other, Partition)
            and self.n == other.n
            and self.code == other.code
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Partition({self.n}, blocks={list(map(sorted, self.blocks()))})"

    def blocks(self):
        """Blocks as tuples of signed points, each block and the list of
        blocks ordered by minimal vertex (upper before lower, then index)."""
        n = self.n
        k = len(set(self.code))
        out = [[] for _ in range(k)]
        for v, b in enumerate(self.code):
            out[b].append(v + 1 if v < n else -(v - n + 1))
        key = lambda x: (x < 0, abs(x))
        return tuple(tuple(sorted(bl, key=key)) for bl in out)

    def to_json(self):
        key = lambda x: (x < 0, abs(x))
        blocks = sorted((list(b) for b in self.blocks()), key=lambda b: key(b[0]))
        return {"n": self.n, "blocks": blocks}

    @classmethod
    def from_json(cls, data):
        return from_blocks(data["blocks"], data["n"])


def from_blocks(blocks: Iterable[Iterable[int]], n: int) -> Partition:
    """Build a diagram from blocks of signed points (+i upper, -i lower)."""
    size = 2 * n
    assign = [None] * size
    for block in blocks:
        bid = object()
        for x in block:
            if x == 0 or abs(x) > n:
                raise ValidationError(f"vertex {x} outside range for degree {n}")
            v = x - 1 if x > 0 else n - x - 1
            if assign[v] is not None:
                raise ValidationError(f"vertex {x} appears in two blocks")
            assign[v] = bid
    for v, b in enumerate(assign):
        if b is None:
            x = v + 1 if v < n else -(v - n + 1)
            raise ValidationError(f"vertex {x} not covered by any block")
    return Partition(n, _canonical(assign))


def identity(n: int) -> Partition:
    return Partition(n, tuple(range(n)) * 2)


def zeta(n: int) -> Partition:
    """The diagram whose blocks are the whole upper and whole lower row."""
    if n == 0:
        return identity(0)
    return Partition(n, (0,) * n + (1,) * n)


def id_subset(a: Subset) -> Partition:
    """The partial-identity diagram: {x,x'} for x in a, singletons elsewhere."""
    blocks = [(x, -x) for x in a.members]
    blocks += [(x,) for x in range(1, a.n + 1) if x not in a.members]
    blocks += [(-x,) for x in range(1, a.n + 1) if x not in a.members]
    return from_blocks(blocks, a.n)


def id_equiv(e: SetPartition) -> Partition:
    """The block-identity diagram: A together with A' for each class A."""
    return Partition(e.n, e.code + e.code)


def multiply(a: Partition, b: Partition) -> Partition:
    """Product of diagrams: components of the stacked three-row graph."""
    if a.n != b.n:
        raise DegreeMismatchError(f"degree {a.n} != {b.n}")
    n = a.n
    parent = list(range(3 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # a occupies rows 0 and 1, b occupies rows 1 and 2
    for code, shift in ((a.code, 0), (b.code, n)):
        last = {}
        for v, blk in enumerate(code):
            node = v + shift
            if blk in last:
                ru, rv = find(last[blk]), find(node)
                if ru != rv:
                    parent[rv] = ru
            else:
                last[blk] = node
    outer = [find(v) for v in range(n)] + [find(v) for v in range(2 * n, 3 * n)]
    return Partition(n, _canonical(outer))


def involute(a: Partition) -> Partition:
    """Swap upper and lower rows (reflect the diagram)."""
    n = a.n
    return Partition(n, _canonical(a.code[n:] + a.code[:n]))


@dataclass(frozen=True)
class DiagramParams:
    dom: Subset
    codom: Subset
    ker: SetPartition
    coker: SetPartition
    rank: int
    supp: Subset
    cosupp: Subset


def params(a: Partition) -> DiagramParams:
    """Domain, codomain, kernel, cokernel, rank, support and cosupport."""
    n = a.n
    upper = a.code[:n]
    lower = a.code[n:]
    transversal = set(upper) & set(lower)
    counts = {}
    for b in a.code:
        counts[b] = counts.get(b, 0) + 1
    dom = frozenset(i + 1 for i in range(n) if upper[i] in transversal)
    codom = frozenset(i + 1 for i in range(n) if lower[i] in transversal)
    supp = frozenset(i + 1 for i in range(n) if counts[upper[i]] > 1)
    cosupp = frozenset(i + 1 for i in range(n) if counts[lower[i]] > 1)
    return DiagramParams(
        dom=Subset(n, dom),
        codom=Subset(n, codom),
        ker=SetPartition(n, _canonical(upper)),
        coker=SetPartition(n, _canonical(lower)),
        rank=len(transversal),
        supp=Subset(n, supp),
        cosupp=Subset(n, cosupp),
    )


def refines(a: Partition, b: Partition) -> bool:
    """True iff every block of a is contained in a block of b."""
    if a.n != b.n:
        raise DegreeMismatchError(f"degree {a.n} != {b.n}")
    image = {}
    for x, y in zip(a.code, b.code):
        if image.setdefault(x, y) != y:
            return False
    return True


def _block_sizes(a: Partition):
    counts = {}
    for b in a.code:
        counts[b] = counts.get(b, 0) + 1
    return counts.values()


def is_brauer(a: Partition) -> bool:
    """All blocks have size exactly 2."""
    return all(s == 2 for s in _block_sizes(a))


def is_partial_brauer(a: Partition) -> bool:
    """All blocks have size at most 2."""
    return all(s <= 2 for s in _block_sizes(a))


def upper_nontransversals(a: Partition):
    """Blocks contained in the upper row, as frozensets of signed points."""
    return tuple(
        frozenset(bl) for bl in a.blocks() if all(x > 0 for x in bl)
    )


def lower_nontransversals(a: Partition):
    """Blocks contained in the lower row, as frozensets of signed points."""
    return tuple(
        frozenset(bl) for bl in a.blocks() if all(x < 0 for x in bl)
    )


def transversals(a: Partition):
    """Blocks meeting both rows, as frozensets of signed points."""
    return tuple(
        frozenset(bl)
        for bl in a.blocks()
        if any(x > 0 for x in bl) and any(x < 0 for x in bl)
    )
