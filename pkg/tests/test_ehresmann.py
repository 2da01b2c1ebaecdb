"""Axiom checks, tilde classes, orders and substructures."""

import pytest

from diagmon import diagrams as dg
from diagmon import ehresmann as eh
from diagmon import zoo
from diagmon.errors import StateError, ValidationError
from diagmon.monoid import FiniteMonoid, green


def test_semilattice_validation():
    p2 = zoo.build("P2")
    swap = p2.index[dg.from_blocks([[1, -2], [2, -1]], 2)]
    with pytest.raises(ValidationError):
        eh.Semilattice.create(p2, [swap])  # not idempotent
    zeta = p2.index[dg.zeta(2)]
    e1 = p2.index[dg.id_subset(dg.Subset.of(2, [1]))]
    with pytest.raises(ValidationError):
        eh.Semilattice.create(p2, [zeta, e1])  # product escapes the set


def test_block_identities_give_ehresmann_structure():
    s = zoo.build("P2")
    f = zoo.semilattice_for("F", "P2")
    rep = eh.check_axioms(s, f)
    assert rep.is_ehresmann()
    assert rep.axioms == {
        "L1": True, "L2": True, "R1": True, "R2": True,
        "L3": False, "R3": False,
    }
    plus, star = eh.plus_star(s, f, rep)
    for x in range(s.size):
        assert plus[x] in f.members and star[x] in f.members
        assert s.mul(plus[x], x) == x
        assert s.mul(x, star[x]) == x
        # x+ is the block identity of the kernel
        assert s.decode(plus[x]) == dg.id_equiv(dg.params(s.decode(x)).ker)


def test_partial_identities_fail_congruence_with_reverifiable_witness():
    s = zoo.build("P2")
    e = zoo.semilattice_for("E", "P2")
    rep = eh.check_axioms(s, e)
    assert not rep.axioms["L2"] and not rep.axioms["R2"]
    th, x, y = rep.witnesses["L2"]
    assert eh.e_left(x, e) == eh.e_left(y, e)
    assert eh.e_left(s.mul(th, x), e) != eh.e_left(s.mul(th, y), e)
    # L1 and R1 still hold here, so the representative maps exist
    plus, star = eh.plus_star(s, e, rep)
    for z in range(s.size):
        assert s.mul(plus[z], z) == z and s.mul(z, star[z]) == z


def test_green_relations_refine_tilde_relations():
    s = zoo.build("P3")
    f = zoo.semilattice_for("F", "P3")
    rep = eh.check_axioms(s, f)
    gs = green(s)
    for x in range(s.size):
        for y in range(x + 1, s.size):
            if gs.r_class[x] == gs.r_class[y]:
                assert rep.r_tilde[x] == rep.r_tilde[y]
            if gs.l_class[x] == gs.l_class[y]:
                assert rep.l_tilde[x] == rep.l_tilde[y]


def test_generator_sweep_agrees_with_full_sweep():
    s = zoo.build("P3")
    f = zoo.semilattice_for("F", "P3")
    full = eh.check_axioms(s, f)
    gens = [s.index[g] for g in zoo.partition_generators(3)]
    swept = eh.check_axioms(s, f, gens)
    assert full.axioms["L2"] == swept.axioms["L2"]
    assert full.axioms["R2"] == swept.axioms["R2"]
    assert swept.theta_sweep == "full"  # small monoid still sweeps fully


def test_large_monoid_requires_generators():
    s = zoo.build("P4")
    f = zoo.semilattice_for("F", "P4")
    with pytest.raises(StateError):
        eh.check_axioms(s, f)


def test_rest_subsemigroups_of_relations_are_partial_maps():
    s = zoo.build("BX2")
    e = zoo.semilattice_for("E", "BX2")
    rest_l, rest_r, rest = eh.rest_subsemigroups(s, e)
    assert frozenset(s.decode(x) for x in rest_l) == frozenset(
        zoo.build("PT2").elements
    )
    assert len(rest) == 7  # the partial bijections
    # each one-sided set passes its own containment axiom
    sub = s.submonoid(rest_l)
    e_sub = eh.Semilattice.create(
        sub, [sub.index[s.decode(i)] for i in e.members]
    )
    rep = eh.check_axioms(sub, e_sub)
    assert rep.axioms["L3"] and rep.is_ehresmann()


def test_reg_e_of_partition_monoid():
    s = zoo.build("P2")
    f = zoo.semilattice_for("F", "P2")
    e = zoo.semilattice_for("E", "P2")
    assert frozenset(s.decode(x) for x in eh.reg_e(s, f)) == frozenset(
        zoo.build("J2").elements
    )
    assert frozenset(s.decode(x) for x in eh.reg_e(s, e)) == frozenset(
        zoo.build("I2").elements
    )


def test_tilde_h_class_closure_flag():
    s = zoo.build("P3")
    f = zoo.semilattice_for("F", "P3")
    e = zoo.semilattice_for("E", "P3")
    ident = s.identity
    members, closed, witness = eh.tilde_h_class(ident, s, f)
    assert closed and witness is None
    assert len(members) == 34  # partial bijections on three points
    members_e, closed_e, witness_e = eh.tilde_h_class(ident, s, e)
    assert not closed_e and witness_e is not None
    x, y = witness_e
    assert x in members_e and y in members_e
    assert s.mul(x, y) not in set(members_e)
    swap = s.index[dg.from_blocks([[1, -2], [2, -1], [3, -3]], 3)]
    with pytest.raises(ValidationError):
        eh.tilde_h_class(swap, s, f)


def test_below_sets_are_partial_orders():
    s = zoo.build("P2")
    f = zoo.semilattice_for("F", "P2")
    e = zoo.semilattice_for("E", "P2")
    for sl in (f, e):
        for side in ("r", "l"):
            assert eh.is_partial_order(eh.below_sets(s, sl, side))
    # a non-order: x below y and y below x for distinct x, y
    assert not eh.is_partial_order([frozenset({0, 1}), frozenset({0, 1})])
