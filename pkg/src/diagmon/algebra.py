"""Categories and exact-rational algebras attached to an Ehresmann monoid.

Given (S, E) satisfying the Ehresmann axioms, the category C(S, E) has the
members of E as objects and hom(e, f) = {x : x+ = e, x* = f}, with
composition the product of S (defined only when the middle objects agree).
The linear map sending a basis element x to the sum of all elements below
it in the natural partial order is an algebra isomorphism from the
semigroup algebra onto the category algebra; its matrix is the zeta matrix
of the order and its inverse the Mobius matrix.  All linear algebra is
exact over the rationals, so the trace-form criterion computes radical
dimensions with no rounding.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .ehresmann import (
    EhresmannReport,
    Semilattice,
    below_sets,
    check_axioms,
    reg_e,
)
from .errors import StateError, ValidationError
from .monoid import FiniteMonoid

BASIS_CAP = 250  # exhaustive pair/triple sweeps below this dimension


@dataclass
class EhresmannCategory:
    """The category C(S, E): objects E, morphisms the elements of S."""

    monoid: FiniteMonoid
    semilattice: Semilattice
    plus: list  # x -> x+, the source object
    star: list  # x -> x*, the target object
    hom: dict  # (e, f) -> tuple of element indices

    def objects(self):
        return self.semilattice.members

    def compose(self, x, y):
        """x then y; defined iff the target of x is the source of y."""
        if self.star[x] != self.plus[y]:
            return None
        return self.monoid.mul(x, y)

    def endomorphisms(self, e):
        return self.hom.get((e, e), ())


def build_category(s: FiniteMonoid, e: Semilattice,
                   report: EhresmannReport | None = None) -> EhresmannCategory:
    report = report or check_axioms(s, e)
    if not report.is_ehresmann():
        failed = [a for a in ("L1", "L2", "R1", "R2") if not report.axioms[a]]
        raise StateError(f"category needs the Ehresmann axioms; {failed} fail")
    plus, star = report.plus, report.star
    hom = {}
    for x in range(s.size):
        hom.setdefault((plus[x], star[x]), []).append(x)
    hom = {k: tuple(v) for k, v in hom.items()}
    return EhresmannCategory(s, e, plus, star, hom)


def is_ei(cat: EhresmannCategory):
    """True iff every endomorphism monoid is a group.

    Returns (flag, witness); the witness is a non-invertible endomorphism.
    """
    s = cat.monoid
    for e in cat.objects():
        endos = cat.endomorphisms(e)
        for x in endos:
            if not any(
                s.mul(x, y) == e and s.mul(y, x) == e for y in endos
            ):
                return False, x
    return True, None


# -- the order, its zeta matrix, and Mobius inversion ------------------------


def natural_order(s: FiniteMonoid, e: Semilattice, side: str):
    """below[y] = {x : x <= y} for the order matching the restriction side."""
    if side == "left":
        return below_sets(s, e, "r")  # x <= y iff x in Ey
    if side == "right":
        return below_sets(s, e, "l")  # x <= y iff x in yE
    raise ValidationError(f"side must be 'left' or 'right', got {side!r}")


def topological_order(below):
    """Element indices sorted so smaller-in-the-order comes first."""
    return sorted(range(len(below)), key=lambda y: (len(below[y]), y))


def zeta_matrix(below):
    """Z[x][y] = 1 iff x <= y; columns are the transformed basis vectors."""
    d = len(below)
    z = [[0] * d for _ in range(d)]
    for y, b in enumerate(below):
        for x in b:
            z[x][y] = 1
    return z


def is_unitriangular(matrix, order):
    """Upper unitriangular once rows and columns are permuted by order."""
    pos = {x: i for i, x in enumerate(order)}
    for x, row in enumerate(matrix):
        for y, v in enumerate(row):
            if x == y:
                if v != 1:
                    return False
            elif v and pos[x] > pos[y]:
                return False
    return True


def mobius_inverse(below):
    """The Mobius matrix of the order; integer, with zeta * mobius = 1."""
    d = len(below)
    order = topological_order(below)
    m = [[0] * d for _ in range(d)]
    for y in order:
        strictly = sorted(below[y] - {y}, key=lambda x: len(below[x]))
        for x in below[y]:
            if x == y:
                m[x][y] = 1
            else:
                m[x][y] = -sum(m[x][b] for b in strictly if x in below[b])
    z = zeta_matrix(below)
    for i in range(d):
        for j in range(d):
            v = sum(z[i][k] * m[k][j] for k in below[j])
            if v != (1 if i == j else 0):
                raise StateError("Mobius matrix failed the inversion check")
    return m


def matrix_to_json(matrix):
    """Row-major [numerator, denominator] pairs."""
    out = []
    for row in matrix:
        for v in row:
            f = Fraction(v)
            out.append([f.numerator, f.denominator])
    return out


# -- the transform onto the category algebra ---------------------------------


def stein_transform(s: FiniteMonoid, e: Semilattice, side: str,
                    report: EhresmannReport | None = None):
    """Matrix of the basis map x -> sum of all elements below x.

    Requires the Ehresmann axioms plus the restriction containment on the
    requested side (L3 for 'left', R3 for 'right').
    """
    report = report or check_axioms(s, e)
    needed = {"left": "L3", "right": "R3"}.get(side)
    if needed is None:
        raise ValidationError(f"side must be 'left' or 'right', got {side!r}")
    if not report.is_ehresmann() or not report.axioms[needed]:
        raise StateError(
            f"the transform needs the Ehresmann axioms and {needed}"
        )
    below = natural_order(s, e, side)
    z = zeta_matrix(below)
    if not is_unitriangular(z, topological_order(below)):
        raise StateError("zeta matrix is not unitriangular under the order")
    return z


def verify_stein(s: FiniteMonoid, e: Semilattice, side: str,
                 samples=100000) -> bool:
    """Multiplicativity of the transform into the category algebra.

    phi(x) * phi(y) is expanded with the category product (undefined
    compositions contribute zero) and compared with phi(xy), over all basis
    pairs when the monoid is small and over random pairs otherwise.
    Bijectivity holds structurally: the matrix is unitriangular.
    """
    report = check_axioms(s, e)
    stein_transform(s, e, side, report)  # validates axioms + triangularity
    cat = build_category(s, e, report)
    below = natural_order(s, e, side)
    phi = [sorted(b) for b in below]

    if s.size <= BASIS_CAP:
        pairs = ((x, y) for x in range(s.size) for y in range(s.size))
    else:
        rng = random.Random(2)
        pairs = (
            (rng.randrange(s.size), rng.randrange(s.size))
            for _ in range(samples)
        )
    for x, y in pairs:
        lhs = {}
        for a in phi[x]:
            for b in phi[y]:
                c = cat.compose(a, b)
                if c is not None:
                    lhs[c] = lhs.get(c, 0) + 1
        rhs = {c: 1 for c in phi[s.mul(x, y)]}
        if lhs != rhs:
            return False
    return True


# -- exact-rational algebras --------------------------------------------------


class RationalAlgebra:
    """An algebra whose basis products are single basis elements or zero.

    Vectors are dicts index -> Fraction.  Covers both the semigroup
    algebra (product always defined) and the category algebra (undefined
    compositions are zero).
    """

    def __init__(self, dimension, basis_mul):
        self.dimension = dimension
        self.basis_mul = basis_mul  # (i, j) -> index or None

    @classmethod
    def of_monoid(cls, s: FiniteMonoid):
        return cls(s.size, s.mul)

    @classmethod
    def of_category(cls, cat: EhresmannCategory):
        return cls(cat.monoid.size, cat.compose)

    def multiply(self, u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                k = self.basis_mul(i, j)
                if k is not None:
                    c = out.get(k, 0) + a * b
                    if c:
                        out[k] = c
                    else:
                        out.pop(k, None)
        return out

    def check_associativity(self, cap=100):
        if self.dimension > cap:
            raise StateError(
                f"associativity sweep capped at dimension {cap}"
            )
        rng = range(self.dimension)
        mul = self.basis_mul
        for i in rng:
            for j in rng:
                ij = mul(i, j)
                for k in rng:
                    jk = mul(j, k)
                    left = mul(ij, k) if ij is not None else None
                    right = mul(i, jk) if jk is not None else None
                    if left != right:
                        return False
        return True

    def trace_left(self, k):
        """Trace of left multiplication by basis element k."""
        if k is None:
            return 0
        mul = self.basis_mul
        return sum(1 for j in range(self.dimension) if mul(k, j) == j)


def radical_dim(a: RationalAlgebra) -> int:
    """Dimension of the radical, by the trace form of left multiplication.

    In characteristic zero the radical is the kernel of the bilinear form
    (x, y) -> trace(L_xy), so it is the nullity of the integer Gram matrix
    on the basis, computed by exact rational elimination.
    """
    d = a.dimension
    gram = [
        [Fraction(a.trace_left(a.basis_mul(i, j))) for j in range(d)]
        for i in range(d)
    ]
    return d - _rank(gram)


def _rank(rows):
    """Rank by Gaussian elimination over exact rationals (in place)."""
    if not rows:
        return 0
    d = len(rows[0])
    rank = 0
    for col in range(d):
        pivot = next(
            (r for r in range(rank, len(rows)) if rows[r][col]), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col] * inv
            if f:
                rows[r] = [x - f * p for x, p in zip(rows[r], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def check_semisimple_quotient(s: FiniteMonoid, e: Semilattice) -> bool:
    """Dimension check: dim K[S] - dim rad K[S] equals the count of
    E-regular elements.  Requires every endomorphism monoid of C(S, E)
    to be a group; otherwise raises a state error naming that hypothesis."""
    cat = build_category(s, e)
    flag, witness = is_ei(cat)
    if not flag:
        raise StateError(
            "semisimple-quotient check needs every endomorphism to be "
            f"invertible; element {witness} is a non-invertible endomorphism"
        )
    rad = radical_dim(RationalAlgebra.of_monoid(s))
    return s.size - rad == len(reg_e(s, e))
