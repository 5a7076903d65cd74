import pytest

from treerooted.orientation import (
    NonTreeOrientation,
    delta,
    gamma,
    is_tree_orientation,
    is_tree_orientation_oracle,
    positive_cycles,
    tree_orientations,
)
from treerooted.planar_map import LINK, LOOP, SINGLE_VERTEX, OrientedMap, TreeRootedMap, all_orientations, spanning_trees
from treerooted.walsh_lehman import xi_inv


def test_link_and_loop():
    assert delta(TreeRootedMap(LINK, frozenset({1, 2}))).heads == {0, 2}
    assert delta(TreeRootedMap(LOOP, frozenset())).heads == {0, 1}


def test_reversed_loop_has_a_positive_cycle():
    om = OrientedMap(LOOP, frozenset({0, 2}))
    assert len(positive_cycles(om)) == 1
    assert not is_tree_orientation(om)
    with pytest.raises(NonTreeOrientation):
        gamma(om)


def test_single_vertex():
    assert gamma(OrientedMap(SINGLE_VERTEX, frozenset({0}))).tree == frozenset()


def test_unreachable_vertex_is_rejected():
    om = OrientedMap(LINK, frozenset({0, 1}))
    assert not is_tree_orientation(om)
    with pytest.raises(NonTreeOrientation):
        gamma(om)


@pytest.mark.parametrize("n", range(6))
def test_gamma_inverts_delta(n, shuffles):
    for w in shuffles(n):
        mt = xi_inv(w)
        om = delta(mt)
        assert not positive_cycles(om)
        assert gamma(om).canonical_form() == mt.canonical_form()


@pytest.mark.parametrize("n", range(5))
def test_tree_orientations_biject_with_spanning_trees(n, maps):
    for m in maps(n):
        trees = list(spanning_trees(m))
        tos = tree_orientations(m)
        assert len(tos) == len(trees)
        assert {delta(TreeRootedMap(m, t)).heads for t in trees} == {om.heads for om in tos}
        for om in tos:
            assert delta(gamma(om)).heads == om.heads


@pytest.mark.parametrize("n", range(5))
def test_agrees_with_spanning_tree_oracle(n, maps):
    for m in maps(n):
        for om in all_orientations(m):
            assert is_tree_orientation(om) == is_tree_orientation_oracle(om)
