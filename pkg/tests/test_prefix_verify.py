import pytest

from treerooted.catalan import upsilon
from treerooted.cdv import lambda0, lambda0_prime
from treerooted.explosion import phi
from treerooted.orientation import delta
from treerooted.planar_map import cycles
from treerooted.prefix_verify import (
    build_prefix_map,
    check_prop_lambda0,
    check_prop_lambda1,
    evolution_check,
    evolve_prefix_map,
    extensions,
    partition_tree,
    partition_tree_evolution_check,
    prefix_forest,
    root_face_dangling_order,
    theta_lambda1_evolution_check,
    theta_lambda1_tagged,
    tour_dangling_order,
)
from treerooted.walsh_lehman import xi_inv
from treerooted.words import enumerate_prefix_shuffles


def faces(pm):
    return cycles([pm.alpha[pm.sigma[c]] for c in range(len(pm.sigma))])


def test_empty_word():
    pm = build_prefix_map("")
    assert pm.sigma == (0,) and pm.dangling == () and pm.active == ()
    forest = prefix_forest(pm)
    assert forest.dangling_trees == () and [t.word for t in forest.rooting_trees] == [""]
    pt = partition_tree("")
    assert pt.tree.word == "aA" and pt.colors == "WB"
    assert pt.white_order == (0,) and pt.black_order == (1,)
    assert pt == theta_lambda1_tagged("")


def test_mixed_prefix_example():
    w = "babAaBaBAab"
    pm = build_prefix_map(w)
    assert len(pm.dangling) == 1
    assert len(pm.active) == 2
    forest = prefix_forest(pm)
    assert len(forest.dangling_trees) + len(forest.rooting_trees) == 4
    assert check_prop_lambda0(w) and check_prop_lambda1(w)


def test_bicoloured_face_counts():
    w = "baaBbbAa"
    pm = build_prefix_map(w)
    assert len(cycles(pm.sigma)) == 4  # black faces: one per vertex
    assert len(faces(pm)) == 2  # white faces
    pt = partition_tree(w)
    assert pt.colors.count("B") == 4
    assert pt.colors.count("W") == 1 + len(pm.dangling) + 1  # inner face, v0, one per dangling head
    assert check_prop_lambda1(w)


def test_single_letter_evolutions():
    pm = evolve_prefix_map(build_prefix_map(""), "a")
    assert len(cycles(pm.sigma)) == 2 and len(pm.active) == 1
    assert evolution_check("", "a")
    closed = evolve_prefix_map(build_prefix_map("b"), "B")
    assert len(cycles(closed.sigma)) == 1 and closed.dangling == ()
    assert evolution_check("b", "B")


@pytest.mark.parametrize("n", range(5))
def test_complete_words(n, shuffles):
    for w in shuffles(n):
        pm = build_prefix_map(w)
        om = delta(xi_inv(w))
        assert pm.oriented_map().canonical_form() == om.canonical_form()
        forest = prefix_forest(pm)
        t, p = phi(om)
        assert forest.dangling_trees == () and forest.rooting_trees == (t,)
        pt = partition_tree(w)
        assert pt.tree == upsilon(p)
        assert len(pt.white_order) == 1 and len(pt.black_order) == 1


def test_running_example():
    w = "baAaBA"
    assert check_prop_lambda0(w)
    assert prefix_forest(build_prefix_map(w)).as_sequence() == lambda0(w)
    assert prefix_forest(build_prefix_map(w)).rooting_trees == (lambda0_prime(w),)


def test_evolution_along_a_path():
    w = "baaBbbAaB"
    for i in range(5, len(w)):
        assert partition_tree_evolution_check(w[:i], w[i])
        assert theta_lambda1_evolution_check(w[:i], w[i])


@pytest.mark.parametrize("length", range(7))
def test_propositions_and_lemmas(length):
    for w in enumerate_prefix_shuffles(length):
        assert check_prop_lambda0(w), w
        assert check_prop_lambda1(w), w
        assert root_face_dangling_order(w) == tour_dangling_order(w)
        for c in extensions(w):
            assert evolution_check(w, c), w + c
            assert partition_tree_evolution_check(w, c), w + c
            assert theta_lambda1_evolution_check(w, c), w + c


def test_colours_alternate():
    for w in enumerate_prefix_shuffles(6):
        pt = partition_tree(w)
        for v, p in enumerate(pt.tree.parents()):
            if p >= 0:
                assert pt.colors[v] != pt.colors[p]
