import re

from treerooted.catalan import B1, NonCrossingPartition, PlaneTree, word_to_binary
from treerooted.planar_map import LOOP, TreeRootedMap
from treerooted.render import binary_to_dot, map_to_dot, ncp_to_dot, tree_to_dot
from treerooted.walsh_lehman import xi_inv


def test_loop_map():
    dot = map_to_dot(TreeRootedMap(LOOP, frozenset()))
    assert dot.startswith("digraph map {")
    assert len(re.findall(r"^\s*v\d+ \[", dot, re.M)) == 1
    assert len(re.findall(r"^\s*v\d+ -> v\d+", dot, re.M)) == 1
    assert "root -> v0" in dot


def test_tree_edges_are_bold():
    mt = xi_inv("baAaBA")
    dot = map_to_dot(mt)
    assert dot.count("penwidth=3") == 2
    assert "dir=none" not in dot


def test_binary_tree_shapes():
    dot = binary_to_dot(word_to_binary("NLaNLiRa"))
    assert dot.count("shape=circle") == 2
    assert dot.count("shape=square") == 1


def test_tree_and_ncp():
    assert tree_to_dot(PlaneTree("aAaA")).count("->") == 2
    dot = ncp_to_dot(NonCrossingPartition(3, ((1, 3), (2,))))
    assert "e1 -> e3 [dir=none" in dot


def test_output_is_stable():
    mt = xi_inv("abBA")
    assert map_to_dot(mt) == map_to_dot(xi_inv("abBA"))
    assert binary_to_dot(B1) == binary_to_dot(B1)
