"""Ehresmann analysis of a finite monoid relative to a chosen semilattice.

Given a monoid S and a semilattice E inside it, this module computes the
left/right identity sets E_L(x), E_R(x), the induced tilde-equivalences,
the one-sided congruence axioms with reproducible failure witnesses, the
+/* representative maps, the natural partial orders x <= y iff x in Ey
(resp. yE), the largest restriction subsemigroups, the E-regular inverse
subsemigroup, and the monoid classes of idempotents under the tilde-H
relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import StateError, ValidationError
from .monoid import FiniteMonoid, GreenStructure, _classes_by_key, green

FULL_SWEEP_CAP = 1000


@dataclass(frozen=True)
class Semilattice:
    """A validated commuting-idempotent subset of a parent monoid."""

    parent: FiniteMonoid
    members: tuple

    @classmethod
    def create(cls, parent, members):
        members = tuple(sorted(set(members)))
        for e in members:
            if parent.mul(e, e) != e:
                raise ValidationError(f"element {e} is not idempotent")
        for e in members:
            for f in members:
                p = parent.mul(e, f)
                if p != parent.mul(f, e):
                    raise ValidationError(f"elements {e},{f} do not commute")
                if p not in members:
                    raise ValidationError(
                        f"not closed: product of {e},{f} escapes the set"
                    )
        return cls(parent, members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x):
        return x in self.members


def e_left(x, e: Semilattice):
    """Members of E that are left identities for x."""
    s = e.parent
    return frozenset(f for f in e.members if s.mul(f, x) == x)


def e_right(x, e: Semilattice):
    s = e.parent
    return frozenset(f for f in e.members if s.mul(x, f) == x)


def tilde_classes(s: FiniteMonoid, e: Semilattice, side: str):
    """Class ids of the tilde-R ('left' identity sets) or tilde-L relation."""
    if side == "r":
        keys = [e_left(x, e) for x in range(s.size)]
    elif side == "l":
        keys = [e_right(x, e) for x in range(s.size)]
    else:
        raise ValidationError(f"side must be 'r' or 'l', got {side!r}")
    return _classes_by_key(keys)


@dataclass
class EhresmannReport:
    axioms: dict  # name -> bool for L1, L2, R1, R2, L3, R3
    witnesses: dict  # name -> minimal witness tuple for each failed axiom
    r_tilde: list  # class id per element
    l_tilde: list
    plus: list | None = None  # x -> x+, present iff L1 holds
    star: list | None = None  # x -> x*, present iff R1 holds
    theta_sweep: str = "full"  # 'full' or 'generators'

    def is_ehresmann(self):
        return all(self.axioms[a] for a in ("L1", "L2", "R1", "R2"))

    def to_json(self):
        return {
            "axioms": dict(sorted(self.axioms.items())),
            "witnesses": {k: list(v) for k, v in sorted(self.witnesses.items())},
            "tilde_class_counts": {
                "r": len(set(self.r_tilde)),
                "l": len(set(self.l_tilde)),
            },
            "plus": self.plus,
            "star": self.star,
            "theta_sweep": self.theta_sweep,
        }


def _unique_member_check(classes, members):
    """L1/R1: each class holds exactly one semilattice member."""
    per_class = {}
    for x in members:
        per_class.setdefault(classes[x], []).append(x)
    all_ids = set(classes)
    for c in sorted(all_ids):
        got = per_class.get(c, [])
        if len(got) != 1:
            rep = min(x for x in range(len(classes)) if classes[x] == c)
            return False, (rep, tuple(got))
    return True, None


def _congruence_check(s, classes, thetas, left):
    """One-sided congruence sweep; returns (ok, witness (theta, x, y))."""
    for th in thetas:
        seen = {}
        for x in range(s.size):
            img = s.mul(th, x) if left else s.mul(x, th)
            c, d = classes[x], classes[img]
            if c in seen:
                x0, d0 = seen[c]
                if d0 != d:
                    return False, (th, x0, x)
            else:
                seen[c] = (x, d)
    return True, None


def check_axioms(s: FiniteMonoid, e: Semilattice, generators=None) -> EhresmannReport:
    """Check L1, L2, R1, R2 and, when the Ehresmann halves hold, L3, R3.

    The congruence sweep ranges over all elements when the monoid is small
    enough, otherwise over the supplied generating set (sufficient for
    one-sided congruences).
    """
    r_tilde = tilde_classes(s, e, "r")
    l_tilde = tilde_classes(s, e, "l")
    if s.size <= FULL_SWEEP_CAP:
        thetas, sweep = range(s.size), "full"
    else:
        if generators is None:
            raise StateError(
                f"monoid of size {s.size} needs a generating set for the sweep"
            )
        thetas, sweep = sorted(set(generators)), "generators"

    axioms, witnesses = {}, {}
    axioms["L1"], w = _unique_member_check(r_tilde, e.members)
    if w:
        witnesses["L1"] = w
    axioms["R1"], w = _unique_member_check(l_tilde, e.members)
    if w:
        witnesses["R1"] = w
    axioms["L2"], w = _congruence_check(s, r_tilde, thetas, left=True)
    if w:
        witnesses["L2"] = w
    axioms["R2"], w = _congruence_check(s, l_tilde, thetas, left=False)
    if w:
        witnesses["R2"] = w

    report = EhresmannReport(
        axioms=axioms,
        witnesses=witnesses,
        r_tilde=r_tilde,
        l_tilde=l_tilde,
        theta_sweep=sweep,
    )
    if axioms["L1"]:
        report.plus = _representatives(r_tilde, e)
    if axioms["R1"]:
        report.star = _representatives(l_tilde, e)

    # restriction containments (checked definitionally, witnesses minimal)
    axioms["L3"], w = _containment_check(s, e, left=True)
    if w:
        witnesses["L3"] = w
    axioms["R3"], w = _containment_check(s, e, left=False)
    if w:
        witnesses["R3"] = w
    return report


def _representatives(classes, e: Semilattice):
    rep = {}
    for x in e.members:
        rep[classes[x]] = x
    return [rep[c] for c in classes]


def _containment_check(s, e, left):
    """L3 (xE in Ex) or R3 (Ex in xE) for every x; witness (x, e)."""
    for x in range(s.size):
        if left:
            other = {s.mul(f, x) for f in e.members}
            for f in sorted(e.members):
                if s.mul(x, f) not in other:
                    return False, (x, f)
        else:
            other = {s.mul(x, f) for f in e.members}
            for f in sorted(e.members):
                if s.mul(f, x) not in other:
                    return False, (x, f)
    return True, None


def plus_star(s: FiniteMonoid, e: Semilattice, report: EhresmannReport | None = None):
    """The maps x -> x+ and x -> x*; requires L1 and R1."""
    report = report or check_axioms(s, e)
    if report.plus is None or report.star is None:
        raise StateError("plus/star need L1 and R1 to hold")
    return report.plus, report.star


def rest_subsemigroups(s: FiniteMonoid, e: Semilattice):
    """Largest left-, right- and two-sided restriction subsemigroups.

    Each returned index set is verified closed under the product and to
    contain the semilattice.
    """
    rest_l, rest_r = [], []
    for x in range(s.size):
        xe = {s.mul(x, f) for f in e.members}
        ex = {s.mul(f, x) for f in e.members}
        if xe <= ex:
            rest_l.append(x)
        if ex <= xe:
            rest_r.append(x)
    rest = sorted(set(rest_l) & set(rest_r))
    for name, sub in (("left", rest_l), ("right", rest_r), ("two-sided", rest)):
        subset = set(sub)
        if not set(e.members) <= subset:
            raise StateError(f"{name} restriction set does not contain E")
        for x in sub:
            for y in sub:
                if s.mul(x, y) not in subset:
                    raise StateError(f"{name} restriction set not closed")
    return tuple(rest_l), tuple(rest_r), tuple(rest)


def reg_e(s: FiniteMonoid, e: Semilattice, gs: GreenStructure | None = None):
    """E-regular elements: Green-R-related and L-related to members of E."""
    gs = gs or green(s)
    r_of_e = {gs.r_class[x] for x in e.members}
    l_of_e = {gs.l_class[x] for x in e.members}
    return tuple(
        x
        for x in range(s.size)
        if gs.r_class[x] in r_of_e and gs.l_class[x] in l_of_e
    )


def tilde_h_class(idem, s: FiniteMonoid, e: Semilattice):
    """The tilde-H class of a semilattice member, with a closure flag.

    Returns (members, closed, witness) where witness is a product pair
    escaping the class when it is not closed.
    """
    if idem not in e.members:
        raise ValidationError(f"element {idem} is not in the semilattice")
    r_tilde = tilde_classes(s, e, "r")
    l_tilde = tilde_classes(s, e, "l")
    cls = tuple(
        x
        for x in range(s.size)
        if r_tilde[x] == r_tilde[idem] and l_tilde[x] == l_tilde[idem]
    )
    inside = set(cls)
    for x in cls:
        for y in cls:
            if s.mul(x, y) not in inside:
                return cls, False, (x, y)
    return cls, True, None


def below_sets(s: FiniteMonoid, e: Semilattice, side: str):
    """below[y] = {x : x <= y}, where <= is x in Ey ('r') or x in yE ('l')."""
    if side == "r":
        return [
            frozenset(s.mul(f, y) for f in e.members) for y in range(s.size)
        ]
    if side == "l":
        return [
            frozenset(s.mul(y, f) for f in e.members) for y in range(s.size)
        ]
    raise ValidationError(f"side must be 'r' or 'l', got {side!r}")


def leq_r(s: FiniteMonoid, e: Semilattice):
    """The partial order x <= y iff x in Ey, as per-element below sets."""
    return below_sets(s, e, "r")


def leq_l(s: FiniteMonoid, e: Semilattice):
    return below_sets(s, e, "l")


def is_partial_order(below):
    """Reflexivity, antisymmetry and transitivity of a below-set family."""
    for y, b in enumerate(below):
        if y not in b:
            return False
        for x in b:
            if x != y and y in below[x]:
                return False
            if not below[x] <= b:
                return False
    return True
