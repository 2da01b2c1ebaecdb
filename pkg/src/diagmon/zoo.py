"""Named constructors for the diagram and relation monoids under study.

Families are built by filtering an exhaustive element enumeration, so
membership predicates are primary and closure under the product is a
checked fact rather than an assumption.  Rook diagrams of degree n are
represented by their image in the degree-(n+1) partition monoid, with the
extra point playing the role of the absorbing vertex; there is a single
multiplication code path.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import diagrams as dg
from . import relations as rel
from .diagrams import Partition, SetPartition, Subset
from .errors import ResourceCapError, ValidationError
from .ehresmann import Semilattice
from .monoid import FiniteMonoid

FAMILIES = (
    "P", "B", "PB", "RP", "I", "J", "T", "PT", "Pfd", "Pfcd", "Pfk",
    "RR", "LL", "RJ", "BX", "D0", "D1",
)

# full-table degree caps; enumeration above these would not fit desk scale
CAPS = {
    "P": 4, "B": 4, "PB": 3, "RP": 3, "I": 4, "J": 4, "T": 4, "PT": 4,
    "Pfd": 4, "Pfcd": 4, "Pfk": 4, "RR": 4, "LL": 4, "RJ": 3, "BX": 3,
    "D0": 4, "D1": 4,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int

    @classmethod
    def parse(cls, name: str) -> "FamilySpec":
        # longest family prefix wins (D0/D1 contain a digit themselves)
        for fam in sorted(FAMILIES, key=len, reverse=True):
            if name.startswith(fam) and re.fullmatch(r"\d+", name[len(fam):]):
                return cls(fam, int(name[len(fam):]))
        raise ValidationError(f"unknown family name {name!r}")

    def check_cap(self):
        cap = CAPS[self.family]
        if self.n > cap:
            raise ResourceCapError(
                f"{self.family}_{self.n} exceeds the degree cap {cap}", cap
            )

    def __str__(self):
        return f"{self.family}{self.n}"


# -- element universes -------------------------------------------------------


def set_partition_codes(size):
    """All canonical block-id sequences (restricted growth strings)."""
    out = []

    def extend(prefix, used):
        if len(prefix) == size:
            out.append(tuple(prefix))
            return
        for b in range(used + 1):
            prefix.append(b)
            extend(prefix, used + (1 if b == used else 0))
            prefix.pop()

    extend([], 0)
    return out


@lru_cache(maxsize=None)
def partition_universe(n):
    """All partition diagrams of degree n."""
    return tuple(Partition(n, code) for code in set_partition_codes(2 * n))


@lru_cache(maxsize=None)
def relation_universe(n):
    return tuple(
        rel.BinaryRelation(n, rows) for rows in _cartesian_rows(n, n)
    )


def _cartesian_rows(count, width):
    if count == 0:
        yield ()
        return
    for rest in _cartesian_rows(count - 1, width):
        for row in range(1 << width):
            yield rest + (row,)


@lru_cache(maxsize=None)
def equivalences(n):
    """All set partitions of {1..n}, i.e. all equivalences."""
    return tuple(SetPartition(n, code) for code in set_partition_codes(n))


# -- membership predicates ---------------------------------------------------


def _diagram_predicate(family, n):
    delta = SetPartition.discrete(n)
    nabla = SetPartition.universal(n)
    full = frozenset(range(1, n + 1))

    def p(a):
        q = dg.params(a)
        if family == "P":
            return True
        if family == "B":
            return dg.is_brauer(a)
        if family == "PB":
            return dg.is_partial_brauer(a)
        if family == "I":
            return q.ker == delta and q.coker == delta
        if family == "J":
            return q.dom.members == full and q.codom.members == full
        if family == "T":
            return q.dom.members == full and q.coker == delta
        if family == "Pfd":
            return q.dom.members == full
        if family == "Pfcd":
            return q.codom.members == full
        if family == "Pfk":
            return q.ker == nabla
        if family == "RR":
            return q.dom.members == full or q.ker == nabla
        if family == "LL":
            return q.codom.members == full or q.coker == nabla
        if family == "D0":
            return not q.dom.members and q.ker == nabla
        if family == "D1":
            return q.dom.members == full and q.ker == nabla
        raise ValidationError(f"no diagram predicate for {family}")

    return p


def has_absorbing_block(a: Partition):
    """True iff the extra point and its primed copy share a block (the
    rook-diagram condition inside the degree-(n+1) partition monoid)."""
    n = a.n
    return a.code[n - 1] == a.code[2 * n - 1]


# -- builders ----------------------------------------------------------------


@lru_cache(maxsize=None)
def build(name) -> FiniteMonoid:
    """Build a named monoid, e.g. 'P3', 'RR4', 'BX2', 'RJ2'."""
    spec = FamilySpec.parse(str(name))
    spec.check_cap()
    fam, n = spec.family, spec.n
    if fam == "BX":
        return FiniteMonoid.from_elements(relation_universe(n), rel.compose)
    if fam == "PT":
        elems = [a for a in relation_universe(n) if rel.is_partial_function(a)]
        return FiniteMonoid.from_elements(elems, rel.compose)
    if fam == "RP":
        elems = [a for a in partition_universe(n + 1) if has_absorbing_block(a)]
        return FiniteMonoid.from_elements(elems, dg.multiply)
    if fam == "RJ":
        full = frozenset(range(1, n + 2))
        elems = [
            a
            for a in partition_universe(n + 1)
            if has_absorbing_block(a)
            and dg.params(a).dom.members == full
            and dg.params(a).codom.members == full
        ]
        return FiniteMonoid.from_elements(elems, dg.multiply)
    pred = _diagram_predicate(fam, n)
    elems = [a for a in partition_universe(n) if pred(a)]
    return FiniteMonoid.from_elements(elems, dg.multiply)


SEMILATTICE_KINDS = ("E", "F", "G")


def semilattice(kind: str, parent: FiniteMonoid, base_degree=None) -> Semilattice:
    """The semilattice of partial identities (E), block identities (F), or
    block identities over the enlarged base set of a rook monoid (G).

    For a rook-monoid parent, pass the underlying degree as base_degree to
    get the lifted copy of E or F (the elements of degree n acquire the
    separate absorbing block).
    """
    if kind not in SEMILATTICE_KINDS:
        raise ValidationError(f"unknown semilattice kind {kind!r}")
    sample = parent.elements[0]
    if isinstance(sample, rel.BinaryRelation):
        if kind != "E":
            raise ValidationError(f"semilattice {kind} undefined for relations")
        n = sample.n
        members = [
            rel.partial_identity(Subset.of(n, c))
            for k in range(n + 1)
            for c in combinations(range(1, n + 1), k)
        ]
    else:
        n = sample.n
        lift = False
        if base_degree is not None:
            if base_degree == n - 1:
                lift = True
                n = base_degree
            elif base_degree != n:
                raise ValidationError(
                    f"base degree {base_degree} incompatible with degree {n}"
                )
        if kind == "E":
            members = [
                dg.id_subset(Subset.of(n, c))
                for k in range(n + 1)
                for c in combinations(range(1, n + 1), k)
            ]
        elif kind == "F":
            members = [dg.id_equiv(e) for e in equivalences(n)]
        else:  # G: block identities over every point incl. the absorbing one
            members = [dg.id_equiv(e) for e in equivalences(sample.n)]
            lift = False
        if lift:
            members = [lift_to_rook(x) for x in members]
    try:
        idx = [parent.index[x] for x in members]
    except KeyError:
        raise ValidationError(
            f"semilattice {kind} is not contained in the given monoid"
        ) from None
    return Semilattice.create(parent, idx)


def semilattice_for(kind: str, name: str) -> Semilattice:
    """Semilattice by family name, lifting E/F into rook monoids."""
    spec = FamilySpec.parse(str(name))
    parent = build(str(name))
    base = spec.n if spec.family in ("RP", "RJ") and kind in ("E", "F") else None
    return semilattice(kind, parent, base_degree=base)


def partition_generators(n):
    """A standard generating set of the degree-n partition monoid:
    adjacent transpositions, one partial identity, one block identity."""
    gens = []
    for i in range(1, n):
        blocks = [(x, -x) for x in range(1, n + 1) if x not in (i, i + 1)]
        blocks += [(i, -(i + 1)), (i + 1, -i)]
        gens.append(dg.from_blocks(blocks, n))
    if n >= 1:
        gens.append(dg.id_subset(Subset.of(n, range(1, n))))
    if n >= 2:
        e = SetPartition.from_blocks(
            n, [[n - 1, n]] + [[x] for x in range(1, n - 1)]
        )
        gens.append(dg.id_equiv(e))
    return gens


# -- rook-diagram plumbing ---------------------------------------------------


def rook_embed(blocks, n, rook_dots=()) -> Partition:
    """Encode a degree-n rook diagram as a degree-(n+1) partition.

    ``blocks`` partitions the retained signed vertices; ``rook_dots`` are
    the signed vertices absorbed by the extra point and its primed copy.
    """
    inf = n + 1
    absorbed = [inf, -inf]
    for x in rook_dots:
        if x == 0 or abs(x) > n:
            raise ValidationError(f"rook dot {x} outside range for degree {n}")
        absorbed.append(x)
    return dg.from_blocks(list(blocks) + [absorbed], inf)


def lift_to_rook(a: Partition) -> Partition:
    """The copy of a degree-n diagram inside the rook monoid (no rook dots)."""
    n = a.n
    return dg.from_blocks(list(a.blocks()) + [(n + 1, -(n + 1))], n + 1)


def tower_maps(n):
    """Index maps for the embeddings P_n -> RP_n -> P_{n+1}."""
    pn = build(f"P{n}")
    rp = build(f"RP{n}")
    pn1 = build(f"P{n + 1}")
    first = [rp.index[lift_to_rook(a)] for a in pn.elements]
    second = [pn1.index[a] for a in rp.elements]
    return first, second


# -- fixed witness elements --------------------------------------------------


def witness_sets():
    """Concrete named elements used across the verification suites."""
    alpha6 = dg.from_blocks(
        [[1, 4], [2, 3, -4, -5], [5, 6], [-1, -2, -6], [-3]], 6
    )
    beta6 = dg.from_blocks(
        [[1, 2], [3, 4, -1], [5, -4, -5, -6], [6], [-2], [-3]], 6
    )
    alpha_beta6 = dg.from_blocks(
        [[1, 4], [2, 3, -1, -4, -5, -6], [5, 6], [-2], [-3]], 6
    )
    # left-congruence failure for the partial-identity semilattice, degree 2
    not_e = {
        "alpha": dg.from_blocks([[1, 2], [-1, -2]], 2),
        "beta": dg.identity(2),
        "theta": dg.from_blocks([[1, -1], [2], [-2]], 2),
    }
    # product escaping the tilde-H class of the identity, degree 3
    h_escape = {
        "alpha": dg.from_blocks([[1, -1, -2], [2, 3, -3]], 3),
        "beta": dg.from_blocks([[1, 2], [-1, -2], [3, -3]], 3),
    }
    # left-congruence failure for block identities in the degree-2 rook monoid
    rook = {
        "alpha": rook_embed([[1, -1]], 2, rook_dots=[2, -2]),
        "beta": dg.identity(3),
        "theta": rook_embed([[2, -2]], 2, rook_dots=[1, -1]),
    }
    return {
        "alpha6": alpha6,
        "beta6": beta6,
        "alpha_beta6": alpha_beta6,
        "not_e": not_e,
        "h_escape": h_escape,
        "rook": rook,
    }


# -- structural characterisations of the natural orders ----------------------


def leq_r_structural(a: Partition, b: Partition) -> bool:
    """a <= b in the block-identity order: b refines a and every lower
    non-transversal of b is a block of a."""
    if not dg.refines(b, a):
        return False
    blocks_a = set(map(frozenset, a.blocks()))
    return all(t in blocks_a for t in dg.lower_nontransversals(b))


def leq_l_structural(a: Partition, b: Partition) -> bool:
    if not dg.refines(b, a):
        return False
    blocks_a = set(map(frozenset, a.blocks()))
    return all(t in blocks_a for t in dg.upper_nontransversals(b))


def leq_r_prime_structural(a: Partition, b: Partition) -> bool:
    """a <= b in the partial-identity order: a arises from b by removing a
    set of upper vertices from their blocks and leaving them as upper
    singletons.  Checked block by block:

    1. every lower non-transversal of b is a block of a;
    2. for each upper non-transversal C of b, the members of C that are not
       upper singletons of a either vanish or form a block of a;
    3. for each transversal A u B' of b, the non-singleton part of A
       together with B' is a block of a (just B' when all of A is removed).
    """
    if a.n != b.n:
        return False
    singles = {
        next(iter(bl)) for bl in map(frozenset, a.blocks()) if len(bl) == 1
    }
    expected = set()
    for bl in map(frozenset, b.blocks()):
        upper = frozenset(x for x in bl if x > 0)
        lower = frozenset(x for x in bl if x < 0)
        kept = frozenset(x for x in upper if x not in singles)
        for x in upper - kept:
            expected.add(frozenset([x]))
        if not upper:
            expected.add(lower)  # rule 1
        elif not lower:
            if kept:
                expected.add(kept)  # rule 2
        else:
            expected.add(kept | lower)  # rule 3
    return expected == set(map(frozenset, a.blocks()))
