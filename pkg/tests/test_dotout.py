"""DOT emitter: determinism, structure, shading."""

from diagmon import dotout, relations as rel, zoo
from diagmon.diagrams import from_blocks

GOLDEN_B2 = """digraph "B2" {
  rankdir=TB;
  node [shape=plaintext, fontname="monospace"];
  subgraph "cluster_D_p2_0_1_0_1" {
    label="2 elements";
    "D_p2_0_1_0_1" [label=<<TABLE BORDER="0" CELLBORDER="1" CELLSPACING="0"><TR><TD BGCOLOR="#d3d3d3">1 -1 | 2 -2<BR/>1 -2 | 2 -1</TD></TR></TABLE>>];
  }
  subgraph "cluster_D_p2_0_0_1_1" {
    label="1 elements";
    "D_p2_0_0_1_1" [label=<<TABLE BORDER="0" CELLBORDER="1" CELLSPACING="0"><TR><TD BGCOLOR="#d3d3d3">1 2 | -1 -2</TD></TR></TABLE>>];
  }
  "D_p2_0_1_0_1" -> "D_p2_0_0_1_1";
}
"""


def test_golden_brauer_degree_2():
    assert dotout.emit_eggbox(zoo.build("B2"), title="B2") == GOLDEN_B2


def test_emission_is_deterministic():
    m = zoo.build("PT2")
    assert dotout.emit_eggbox(m) == dotout.emit_eggbox(m)


def test_cluster_count_equals_d_class_count():
    for name, want in (("RR2", 3), ("RR4", 5), ("Pfd4", 4), ("P0", 1)):
        dot = dotout.emit_eggbox(zoo.build(name), title=name)
        assert dot.count("subgraph") == want


def test_shading_marks_requested_cells():
    m = zoo.build("P2")
    shaded = dotout.emit_eggbox(m, shade={m.identity})
    plain = dotout.emit_eggbox(m)
    assert dotout.SHADE_GROUP_COLOR in shaded  # the identity cell is a group
    assert dotout.SHADE_GROUP_COLOR not in plain


def test_element_text_and_slug():
    a = from_blocks([[1, -1], [2], [-2]], 2)
    assert dotout.element_text(a) == "1 -1 | 2 | -2"
    assert dotout.element_slug(a) == "p2_0_1_0_2"
    r = rel.from_pairs(2, [(1, 2)])
    assert dotout.element_text(r) == "1>2"
    assert dotout.element_text(rel.empty_rel(2)) == "(empty)"
    assert dotout.element_slug(r) == "r2_2_0"
