"""Family constructors: sizes, predicates, rook plumbing, fixed witnesses."""

import random

import pytest

from diagmon import diagrams as dg
from diagmon import zoo
from diagmon.errors import ResourceCapError, ValidationError

from oracles import (
    bell_numbers,
    block_bijection_count,
    full_domain_count,
    odd_double_factorial,
    partial_bijection_count,
    rook_multiply,
)

BELL = bell_numbers(10)

# sizes frozen after cross-checking against the combinatorial formulas
FROZEN_SIZES = {
    "P": [1, 2, 15, 203, 4140],
    "B": [1, 1, 3, 15, 105],
    "PB": [1, 2, 10, 76],
    "I": [1, 2, 7, 34, 209],
    "J": [1, 1, 3, 25, 339],
    "T": [1, 1, 4, 27, 256],
    "PT": [1, 2, 9, 64, 625],
    "Pfd": [1, 1, 5, 52, 855],
    "Pfcd": [1, 1, 5, 52, 855],
    "Pfk": [1, 2, 5, 15, 52],
    "RR": [1, 2, 7, 57, 870],
    "LL": [1, 2, 7, 57, 870],
    "RJ": [1, 2, 12, 128],
    "RP": [1, 5, 52, 877],
    "BX": [1, 2, 16, 512],
    "D0": [1, 1, 2, 5, 15],
    "D1": [1, 1, 3, 10, 37],
}


@pytest.mark.parametrize("family", sorted(FROZEN_SIZES))
def test_frozen_family_sizes(family):
    for n, want in enumerate(FROZEN_SIZES[family]):
        assert len(zoo.build(f"{family}{n}").elements) == want


def test_sizes_match_formulas():
    for n in range(0, 5):
        assert len(zoo.build(f"P{n}").elements) == BELL[2 * n]
        assert len(zoo.build(f"I{n}").elements) == partial_bijection_count(n)
        assert len(zoo.build(f"J{n}").elements) == block_bijection_count(n)
        assert len(zoo.build(f"Pfd{n}").elements) == full_domain_count(n)
        assert len(zoo.build(f"D0{n}").elements) == BELL[n]
        if n <= 4:
            assert len(zoo.build(f"B{n}").elements) == odd_double_factorial(n)
    for n in range(1, 4):
        assert len(zoo.build(f"BX{n}").elements) == 2 ** (n * n)
        assert len(zoo.build(f"PT{n}").elements) == (n + 1) ** n
        assert len(zoo.build(f"T{n}").elements) == n**n


def test_family_spec_parsing():
    assert zoo.FamilySpec.parse("P3") == zoo.FamilySpec("P", 3)
    assert zoo.FamilySpec.parse("D02") == zoo.FamilySpec("D0", 2)
    assert zoo.FamilySpec.parse("D13") == zoo.FamilySpec("D1", 3)
    assert str(zoo.FamilySpec.parse("RR4")) == "RR4"
    for bad in ("Q3", "P", "3", "Px3", "p2"):
        with pytest.raises(ValidationError):
            zoo.FamilySpec.parse(bad)
    with pytest.raises(ResourceCapError):
        zoo.build("P5")


def test_semilattice_sizes():
    assert len(zoo.semilattice_for("E", "P3")) == 8
    assert len(zoo.semilattice_for("F", "P3")) == BELL[3]
    assert len(zoo.semilattice_for("E", "BX2")) == 4
    assert len(zoo.semilattice_for("G", "RP2")) == BELL[3]
    assert len(zoo.semilattice_for("F", "RP2")) == BELL[2]
    with pytest.raises(ValidationError):
        zoo.semilattice_for("F", "BX2")
    with pytest.raises(ValidationError):
        zoo.semilattice_for("Q", "P2")


def test_brauer_submonoid_closed():
    b3 = zoo.build("B3")
    for a in b3.elements:
        assert dg.is_brauer(a)
    assert b3.table is not None  # closure was verified exhaustively


def test_partial_function_diagrams_not_closed_in_partition_monoid():
    # the diagram analogue of a non-injective map times a partial identity
    # acquires an upper non-transversal, so no diagram family mirrors PT
    f = dg.from_blocks([[1, 2, -1], [-2]], 2)
    g = dg.id_subset(dg.Subset.of(2, [2]))
    prod = dg.multiply(f, g)
    assert frozenset((1, 2)) in set(map(frozenset, prod.blocks()))


def test_rook_product_matches_reference():
    rng = random.Random(13)
    rp2 = zoo.build("RP2")
    pool = list(rp2.elements)
    for _ in range(200):
        a, b = rng.choice(pool), rng.choice(pool)
        got = dg.multiply(a, b)
        ga = split_rook(a)
        gb = split_rook(b)
        blocks, dots = rook_multiply(ga, gb, 2)
        want_blocks, want_dots = split_rook(got)
        assert frozenset(map(frozenset, want_blocks)) == blocks
        assert tuple(want_dots) == dots


def split_rook(a):
    """Split a degree-(n+1) rook representative into (blocks, dots)."""
    n = a.n - 1
    blocks, dots = [], []
    for block in a.blocks():
        if any(abs(x) == n + 1 for x in block):
            dots = [x for x in block if abs(x) != n + 1]
        else:
            blocks.append(block)
    return blocks, dots


def test_rook_embed_and_lift():
    a = zoo.rook_embed([[1, -1]], 2, rook_dots=[2, -2])
    assert set(map(frozenset, a.blocks())) == {
        frozenset({1, -1}),
        frozenset({2, -2, 3, -3}),
    }
    b = dg.from_blocks([[1, 2, -1], [-2]], 2)
    lifted = zoo.lift_to_rook(b)
    assert zoo.has_absorbing_block(lifted)
    assert frozenset({3, -3}) in set(map(frozenset, lifted.blocks()))
    with pytest.raises(ValidationError):
        zoo.rook_embed([[1, -1]], 2, rook_dots=[5])


def test_no_rook_dots_is_the_partition_copy():
    for a in zoo.build("P2").elements:
        image = zoo.rook_embed(a.blocks(), 2)
        assert image == zoo.lift_to_rook(a)


def test_fixed_witnesses_have_expected_parameters():
    w = zoo.witness_sets()
    assert dg.multiply(w["alpha6"], w["beta6"]) == w["alpha_beta6"]
    ne = w["not_e"]
    assert dg.params(ne["alpha"]).supp == dg.params(ne["beta"]).supp
    he = w["h_escape"]
    assert dg.params(he["alpha"]).rank == 2
    rook = w["rook"]
    assert all(zoo.has_absorbing_block(x) for x in rook.values())


def test_order_characterizations_spot_checks():
    # fusing blocks of b while keeping its lower non-transversals
    b = dg.from_blocks([[1, -1], [2], [-2]], 2)
    a = dg.from_blocks([[1, 2, -1], [-2]], 2)
    assert zoo.leq_r_structural(a, b)
    assert not zoo.leq_r_structural(b, a)
    # removing upper points from blocks of b
    c = dg.from_blocks([[1], [2], [-1], [-2]], 2)
    d = dg.from_blocks([[1, -1], [2, -2]], 2)
    assert zoo.leq_r_prime_structural(c, d)
    assert not zoo.leq_r_prime_structural(d, c)
    assert zoo.leq_r_prime_structural(d, d)
