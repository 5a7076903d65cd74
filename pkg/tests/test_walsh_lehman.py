import pytest

from treerooted.planar_map import LINK, LOOP, TreeRootedMap, canonical_form, enumerate_tree_rooted_maps, violations
from treerooted.walsh_lehman import xi, xi_inv
from treerooted.words import InvalidShuffle, count_paren_shuffles


def test_single_edge_maps():
    assert xi(TreeRootedMap(LINK, frozenset({1, 2}))) == "aA"
    assert xi(TreeRootedMap(LOOP, frozenset())) == "bB"
    assert canonical_form(xi_inv("aA").map) == canonical_form(LINK)
    assert canonical_form(xi_inv("bB").map) == canonical_form(LOOP)


def test_three_edge_example():
    mt = xi_inv("baAaBA")
    assert not violations(mt.map)
    assert mt.size == 3
    assert len(mt.tree_edges()) == 2


def test_rejects_non_shuffles():
    for bad in ["a", "Ab", "abA", "x"]:
        with pytest.raises(ValueError):
            xi_inv(bad)
    with pytest.raises(InvalidShuffle):
        xi_inv("aAb")


@pytest.mark.parametrize("n", range(6))
def test_word_round_trip(n, shuffles):
    for w in shuffles(n):
        mt = xi_inv(w)
        assert mt.size == n
        assert xi(mt) == w


@pytest.mark.parametrize("n", range(5))
def test_map_round_trip_on_independent_enumeration(n):
    for mt in enumerate_tree_rooted_maps(n):
        assert xi_inv(xi(mt)).canonical_form() == mt.canonical_form()


@pytest.mark.parametrize("n", range(6))
def test_decoded_maps_are_valid_and_distinct(n, shuffles):
    forms = set()
    for w in shuffles(n):
        mt = xi_inv(w)
        assert not violations(mt.map)
        forms.add(mt.canonical_form())
    assert len(forms) == count_paren_shuffles(n)
