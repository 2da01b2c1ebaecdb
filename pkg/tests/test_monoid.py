"""Generic monoid engine: closure, tables, Green's relations, egg-boxes."""

import pytest

from diagmon import diagrams as dg
from diagmon import monoid as mon
from diagmon import zoo
from diagmon.errors import ResourceCapError, StateError, ValidationError


def test_from_elements_builds_identity_and_table():
    m = zoo.build("P2")
    assert m.size == 15
    assert m.identity is not None
    assert m.decode(m.identity) == dg.identity(2)
    assert m.table is not None
    assert m.check_associativity()


def test_closure_from_generators_recovers_partition_monoids():
    for n, size in ((2, 15), (3, 203)):
        m = mon.FiniteMonoid.closure(
            zoo.partition_generators(n), dg.multiply, dg.identity(n)
        )
        assert m.size == size


def test_closure_respects_element_cap():
    with pytest.raises(ResourceCapError):
        mon.FiniteMonoid.closure(
            zoo.partition_generators(3), dg.multiply, dg.identity(3),
            max_size=50,
        )


def test_duplicate_elements_rejected():
    e = dg.identity(2)
    with pytest.raises(ValidationError):
        mon.FiniteMonoid([e, e], dg.multiply, identity=0)


def brute_force_j_classes(m):
    """J-classes via full two-sided principal ideals, element by element."""
    rng = range(m.size)
    ideals = []
    for x in rng:
        ideal = {x}
        ideal |= {m.mul(x, j) for j in rng}
        ideal |= {m.mul(i, x) for i in rng}
        ideal |= {m.mul(m.mul(i, x), j) for i in rng for j in rng}
        ideals.append(frozenset(ideal))
    return mon._classes_by_key(ideals)


def same_partition(xs, ys):
    by_x, by_y = {}, {}
    for i, (x, y) in enumerate(zip(xs, ys)):
        by_x.setdefault(x, set()).add(i)
        by_y.setdefault(y, set()).add(i)
    return sorted(map(sorted, by_x.values())) == sorted(
        map(sorted, by_y.values())
    )


@pytest.mark.parametrize("name", ["P2", "B3", "PT2", "RR2"])
def test_green_j_matches_brute_force(name):
    m = zoo.build(name)
    gs = mon.green(m)
    assert same_partition(gs.j_class, brute_force_j_classes(m))
    assert gs.d_equals_j == same_partition(gs.d_class, gs.j_class)


def test_green_class_counts_partition_monoid_degree_3():
    m = zoo.build("P3")
    gs = mon.green(m)
    # R-classes are (dom, ker) pairs, L-classes (codom, coker) pairs,
    # D-classes the four ranks
    pars = [dg.params(a) for a in m.elements]
    assert gs.num("r") == len({(p.dom, p.ker) for p in pars})
    assert gs.num("l") == len({(p.codom, p.coker) for p in pars})
    assert gs.num("d") == len({p.rank for p in pars}) == 4
    assert gs.d_equals_j


def test_eggbox_grids_cover_each_d_class():
    m = zoo.build("B3")
    gs = mon.green(m)
    boxes = mon.eggbox(m, gs)
    seen = set()
    for box in boxes:
        for (r, l), cell in box.cells.items():
            for x in cell:
                assert gs.r_class[x] == r and gs.l_class[x] == l
                seen.add(x)
        for cell in box.group_cells:
            assert any(m.mul(x, x) == x for x in box.cells[cell])
    assert seen == set(range(m.size))


def test_regular_and_inverse_classification():
    assert mon.is_inverse(zoo.build("I2"))
    assert mon.is_inverse(zoo.build("J3"))
    assert mon.is_regular(zoo.build("PT2"))
    assert not mon.is_inverse(zoo.build("PT2"))
    assert mon.is_regular(zoo.build("P2"))  # a = a a° a
    assert not mon.is_inverse(zoo.build("P2"))


def test_right_zeros_and_minimal_ideal():
    pfd = zoo.build("Pfd2")
    d1 = frozenset(
        i for i, a in enumerate(pfd.elements)
        if dg.params(a).rank == 1
        and dg.params(a).ker == dg.SetPartition.universal(2)
    )
    assert mon.right_zeros(pfd) == d1
    assert mon.minimal_ideal(pfd) == d1


def test_check_embedding_positive_and_negative():
    first, second = zoo.tower_maps(2)
    p2, rp2, p3 = zoo.build("P2"), zoo.build("RP2"), zoo.build("P3")
    assert mon.check_embedding(first, p2, rp2)
    assert mon.check_embedding(second, rp2, p3)
    broken = list(first)
    broken[0], broken[1] = broken[1], broken[0]
    assert not mon.check_embedding(broken, p2, rp2)


def test_to_json_requires_table():
    m = mon.FiniteMonoid.from_elements(
        zoo.build("P2").elements, dg.multiply, table_cap=5
    )
    with pytest.raises(StateError):
        m.to_json()


def test_submonoid_reindexes_closed_subsets():
    m = zoo.build("P2")
    idx = [i for i, a in enumerate(m.elements) if dg.params(a).rank == 2]
    sub = m.submonoid(idx)  # the symmetric group inside P_2
    assert sub.size == 2 and sub.identity is not None
