"""Generic finite-monoid engine.

Elements are indexed 0..m-1; a decoder maps indices back to the concrete
elements (diagrams or relations) they came from.  The Cayley table is
materialised when the monoid is small enough; above the cap, products are
computed on demand through the concrete operation.  Green's relations are
computed from principal ideals, with D as the join of R and L and the
J-order obtained from two-sided ideals of class representatives.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field

from .errors import ResourceCapError, StateError, ValidationError

TABLE_CAP = 1000


def _worker_count():
    try:
        return max(1, int(os.environ.get("DIAGMON_WORKERS", "1")))
    except ValueError:
        return 1


class FiniteMonoid:
    """A finite monoid (or semigroup) over an indexed element universe."""

    def __init__(self, elements, op, identity, table=None):
        self.elements = list(elements)
        self.size = len(self.elements)
        self.op = op
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != self.size:
            raise ValidationError("duplicate elements in universe")
        self.identity = identity  # index, or None for a semigroup
        self.table = table

    # -- construction -----------------------------------------------------

    @classmethod
    def from_elements(cls, elements, op, table_cap=TABLE_CAP, closure_samples=20000):
        """Index a multiplicatively closed set of elements.

        Closure is re-verified: exhaustively while building the Cayley
        table, or on random pairs when the table cap is exceeded.
        """
        m = cls(list(elements), op, identity=None)
        if m.size <= table_cap:
            m.table = m._build_table()
        else:
            rng = random.Random(0)
            for _ in range(min(closure_samples, m.size * m.size)):
                i = rng.randrange(m.size)
                j = rng.randrange(m.size)
                p = op(m.elements[i], m.elements[j])
                if p not in m.index:
                    raise ValidationError(f"universe not closed: product of {i},{j}")
        m.identity = m._find_identity()
        return m

    @classmethod
    def closure(cls, generators, op, identity_element, max_size=100000,
                table_cap=TABLE_CAP):
        """Breadth-first closure of a generating set under op."""
        elements = []
        index = {}

        def add(x):
            if x not in index:
                index[x] = len(elements)
                elements.append(x)
                if len(elements) > max_size:
                    raise ResourceCapError(
                        f"closure exceeded the element cap {max_size}", max_size
                    )

        add(identity_element)
        for g in generators:
            add(g)
        frontier = list(elements)
        while frontier:
            new = []
            for x in frontier:
                for g in list(index):
                    for p in (op(x, g), op(g, x)):
                        if p not in index:
                            add(p)
                            new.append(p)
            frontier = new
        m = cls(elements, op, identity=index[identity_element])
        if m.size <= table_cap:
            m.table = m._build_table()
        return m

    def _build_table(self):
        workers = _worker_count()
        if workers > 1 and self.size >= 200:
            return self._build_table_parallel(workers)
        op = self.op
        idx = self.index
        els = self.elements
        table = []
        for x in els:
            table.append([idx[op(x, y)] for y in els])
        return table

    def _build_table_parallel(self, workers):
        from concurrent.futures import ProcessPoolExecutor

        chunks = [
            range(lo, min(lo + 64, self.size)) for lo in range(0, self.size, 64)
        ]
        rows = [None] * self.size
        with ProcessPoolExecutor(
            max_workers=workers,
            initializer=_pool_init,
            initargs=(self.elements, self.op),
        ) as pool:
            for start, block in zip(
                (c[0] for c in chunks), pool.map(_pool_rows, chunks)
            ):
                for off, row in enumerate(block):
                    rows[start + off] = row
        return rows

    def _find_identity(self):
        probe = self.elements[0]
        for i, e in enumerate(self.elements):
            if self.op(e, probe) == probe and self.op(probe, e) == probe:
                if all(
                    self.op(e, x) == x and self.op(x, e) == x for x in self.elements
                ):
                    return i
        return None

    # -- products ----------------------------------------------------------

    def mul(self, i, j):
        if self.table is not None:
            return self.table[i][j]
        return self.index[self.op(self.elements[i], self.elements[j])]

    def decode(self, i):
        return self.elements[i]

    def is_monoid(self):
        return self.identity is not None

    def check_associativity(self, exhaustive_cap=250, samples=2000):
        """Exhaustive associativity check when small, sampled otherwise."""
        m = self.size
        if m <= exhaustive_cap:
            triples = (
                (i, j, k) for i in range(m) for j in range(m) for k in range(m)
            )
        else:
            rng = random.Random(1)
            triples = (
                (rng.randrange(m), rng.randrange(m), rng.randrange(m))
                for _ in range(samples)
            )
        for i, j, k in triples:
            if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)):
                return False
        return True

    def to_json(self):
        if self.table is None:
            raise StateError("monoid has no materialised Cayley table")
        return {
            "size": self.size,
            "identity": self.identity,
            "mul": [v for row in self.table for v in row],
            "elements": [x.to_json() for x in self.elements],
        }

    def submonoid(self, indices):
        """The sub-(semi)group on a closed index subset, reindexed."""
        return FiniteMonoid.from_elements(
            [self.elements[i] for i in sorted(indices)], self.op
        )


_POOL_ELEMENTS = None
_POOL_OP = None
_POOL_INDEX = None


def _pool_init(elements, op):
    global _POOL_ELEMENTS, _POOL_OP, _POOL_INDEX
    _POOL_ELEMENTS = elements
    _POOL_OP = op
    _POOL_INDEX = {x: i for i, x in enumerate(elements)}


def _pool_rows(rows):
    out = []
    for i in rows:
        x = _POOL_ELEMENTS[i]
        out.append([_POOL_INDEX[_POOL_OP(x, y)] for y in _POOL_ELEMENTS])
    return out


# -- Green's relations ------------------------------------------------------


@dataclass
class GreenStructure:
    r_class: list
    l_class: list
    h_class: list
    d_class: list
    j_class: list
    d_order: set = field(default_factory=set)  # pairs (a, b): D_a <= D_b
    d_equals_j: bool = True
    right_ideals: list = None  # per R-class rep, frozenset xS^1
    left_ideals: list = None

    def num(self, rel):
        return len(set(getattr(self, rel + "_class")))


def _classes_by_key(keys):
    """Class ids in order of minimal member index."""
    ids = {}
    out = []
    for k in keys:
        if k not in ids:
            ids[k] = len(ids)
        out.append(ids[k])
    return out


def green(m: FiniteMonoid) -> GreenStructure:
    """Green's relations from principal ideals (xS^1, S^1x, S^1xS^1)."""
    size = m.size
    rng = range(size)
    right = [frozenset({x} | {m.mul(x, j) for j in rng}) for x in rng]
    left = [frozenset({x} | {m.mul(i, x) for i in rng}) for x in rng]
    r_class = _classes_by_key(right)
    l_class = _classes_by_key(left)
    h_class = _classes_by_key(zip(r_class, l_class))

    # D = join of R and L via union-find over elements
    parent = list(rng)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for classes in (r_class, l_class):
        first = {}
        for x in rng:
            c = classes[x]
            if c in first:
                a, b = find(first[c]), find(x)
                if a != b:
                    parent[b] = a
            else:
                first[c] = x
    d_class = _classes_by_key(find(x) for x in rng)

    # J-order between D-classes, via two-sided ideals of representatives
    reps = {}
    for x in rng:
        reps.setdefault(d_class[x], x)
    two_sided = {}
    for d, x in reps.items():
        ideal = set(right[x])
        for i in rng:
            row = (
                m.table[i] if m.table is not None else None
            )
            if row is not None:
                ideal.update(row[k] for k in right[x])
            else:
                ideal.update(m.mul(i, k) for k in right[x])
        two_sided[d] = ideal
    d_order = set()
    for a, xa in reps.items():
        for b in reps:
            if xa in two_sided[b]:
                d_order.add((a, b))
    # J-equivalence on D-class ids; D = J iff it is the identity
    j_rep = {
        a: min(b for b in reps if (a, b) in d_order and (b, a) in d_order)
        for a in reps
    }
    d_equals_j = all(j_rep[a] == a for a in reps)
    j_class = _classes_by_key(j_rep[d_class[x]] for x in rng)
    return GreenStructure(
        r_class=r_class,
        l_class=l_class,
        h_class=h_class,
        d_class=d_class,
        j_class=j_class,
        d_order=d_order,
        d_equals_j=d_equals_j,
        right_ideals=right,
        left_ideals=left,
    )


@dataclass
class EggboxDClass:
    d_id: int
    rows: list  # R-class ids, in order of minimal element
    cols: list  # L-class ids
    cells: dict  # (r_id, l_id) -> tuple of element indices
    group_cells: set  # cells containing an idempotent


def eggbox(m: FiniteMonoid, gs: GreenStructure | None = None):
    """Per-D-class grids of H-classes, ordered top-down by the J-order."""
    gs = gs or green(m)
    ids = idempotents(m)
    by_d = {}
    for x in range(m.size):
        by_d.setdefault(gs.d_class[x], []).append(x)
    boxes = []
    for d, members in by_d.items():
        rows, cols, cells = [], [], {}
        for x in members:
            r, l = gs.r_class[x], gs.l_class[x]
            if r not in rows:
                rows.append(r)
            if l not in cols:
                cols.append(l)
            cells.setdefault((r, l), []).append(x)
        group_cells = {
            cell for cell, xs in cells.items() if any(x in ids for x in xs)
        }
        boxes.append(
            EggboxDClass(
                d_id=d,
                rows=rows,
                cols=cols,
                cells={k: tuple(v) for k, v in cells.items()},
                group_cells=group_cells,
            )
        )
    # higher J-classes first; ties broken by minimal element for determinism
    below = {b.d_id: sum(1 for (a, c) in gs.d_order if c == b.d_id) for b in boxes}
    boxes.sort(key=lambda b: (-below[b.d_id], b.d_id))
    return boxes


def idempotents(m: FiniteMonoid):
    return frozenset(x for x in range(m.size) if m.mul(x, x) == x)


def is_regular(m: FiniteMonoid) -> bool:
    for x in range(m.size):
        if not any(m.mul(m.mul(x, a), x) == x for a in range(m.size)):
            return False
    return True


def is_inverse(m: FiniteMonoid) -> bool:
    """Regular with commuting idempotents (equivalently unique inverses)."""
    if not is_regular(m):
        return False
    ids = sorted(idempotents(m))
    return all(
        m.mul(e, f) == m.mul(f, e) for e in ids for f in ids if e < f
    )


def right_zeros(m: FiniteMonoid):
    return frozenset(
        z
        for z in range(m.size)
        if all(m.mul(a, z) == z for a in range(m.size))
    )


def minimal_ideal(m: FiniteMonoid, gs: GreenStructure | None = None):
    """Elements of the minimal J-class (which is the minimal ideal)."""
    gs = gs or green(m)
    d_ids = set(gs.d_class)
    bottoms = [
        d for d in d_ids if not any((b, d) in gs.d_order and b != d for b in d_ids)
    ]
    if len(bottoms) != 1:
        raise StateError("no unique minimal J-class")
    return frozenset(x for x in range(m.size) if gs.d_class[x] == bottoms[0])


def check_embedding(f, s: FiniteMonoid, t: FiniteMonoid) -> bool:
    """True iff the index map f is injective, identity-preserving and
    multiplicative from s into t."""
    if len(set(f)) != s.size:
        return False
    if s.identity is not None and f[s.identity] != t.identity:
        return False
    for i in range(s.size):
        fi = f[i]
        for j in range(s.size):
            if f[s.mul(i, j)] != t.mul(fi, f[j]):
                return False
    return True
