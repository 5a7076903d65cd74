import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treerooted.catalan import (
    B1,
    TAU,
    InvalidPartition,
    InvalidTree,
    Leaf,
    Node,
    NonCrossingPartition,
    PlaneTree,
    big_theta,
    binary_to_word,
    branching_edges,
    enumerate_binary_trees,
    enumerate_ncps,
    enumerate_trees,
    is_branching_edge,
    is_noncrossing_bruteforce,
    leaves,
    num_nodes,
    theta,
    theta_with_leaves,
    upsilon,
    upsilon_inv,
    word_to_binary,
    word_to_tree,
)
from treerooted.words import catalan


def set_partitions(n):
    """Every set partition of 1..n as a block label list, by brute force over label tuples."""
    seen = set()
    for labels in itertools.product(range(n), repeat=n):
        canon, relabel = [], {}
        for x in labels:
            canon.append(relabel.setdefault(x, len(relabel)))
        seen.add(tuple(canon))
    return sorted(seen)


def test_tree_basics():
    assert TAU.size == 0 and TAU.num_vertices == 1
    assert word_to_tree("aA").size == 1
    with pytest.raises(InvalidTree):
        PlaneTree("Aa")


@pytest.mark.parametrize("n", range(7))
def test_tree_counts(n):
    trees = list(enumerate_trees(n))
    assert len(trees) == catalan(n) == len(set(trees))
    for t in trees:
        assert PlaneTree.from_children(t.children()) == t
        assert len(t.parents()) == t.num_vertices


@pytest.mark.parametrize("n", range(7))
def test_ncp_enumeration_against_brute_force(n):
    expected = {tuple(b) for b in set_partitions(n) if is_noncrossing_bruteforce(list(b))}
    got = [tuple(p.block_index()) for p in enumerate_ncps(n)]
    assert len(got) == catalan(n)
    assert set(got) == expected


def test_crossing_partition_rejected():
    with pytest.raises(InvalidPartition):
        NonCrossingPartition(4, ((1, 3), (2, 4)))
    with pytest.raises(InvalidPartition):
        NonCrossingPartition(3, ((1, 2),))


def test_upsilon_small_examples():
    assert upsilon_inv(TAU) == NonCrossingPartition(0, ())
    assert upsilon_inv(PlaneTree("aA")) == NonCrossingPartition(1, ((1,),))
    assert upsilon_inv(PlaneTree("aaAA")) == NonCrossingPartition(2, ((1, 2),))
    assert upsilon_inv(PlaneTree("aAaA")) == NonCrossingPartition(2, ((1,), (2,)))


def test_upsilon_on_a_size_eight_partition():
    p = NonCrossingPartition(8, ((1, 4, 5), (2,), (3,), (6, 8), (7,)))
    t = upsilon(p)
    assert t.size == 8
    assert upsilon_inv(t) == p


@pytest.mark.parametrize("n", range(7))
def test_upsilon_is_a_bijection(n):
    for t in enumerate_trees(n):
        assert upsilon(upsilon_inv(t)) == t
    images = set()
    for p in enumerate_ncps(n):
        assert upsilon_inv(upsilon(p)) == p
        images.add(upsilon(p))
    assert len(images) == catalan(n)


def test_upsilon_parts_follow_odd_depth_vertices():
    # every part has as many elements as its odd-depth vertex has incident edges
    for n in range(1, 7):
        for t in enumerate_trees(n):
            depth = t.depths()
            par = t.parents()
            degs = sorted(
                sum(1 for u, q in enumerate(par) if q == v) + (1 if par[v] >= 0 else 0)
                for v in range(t.num_vertices)
                if depth[v] % 2 == 1
            )
            assert degs == sorted(len(p) for p in upsilon_inv(t).parts)


@pytest.mark.parametrize("n", range(1, 7))
def test_binary_trees(n):
    bs = list(enumerate_binary_trees(n))
    assert len(bs) == catalan(n)
    for b in bs:
        assert num_nodes(b) == n
        assert len(leaves(b)) == n + 1
        assert word_to_binary(binary_to_word(b)) == b


def test_binary_word_rejects_garbage():
    for bad in ["", "La", "NLa", "NLaRaX", "NRaLa"]:
        with pytest.raises(InvalidTree):
            word_to_binary(bad)


def test_branching_edges_of_b1():
    assert is_branching_edge(B1, (1,))
    assert not is_branching_edge(B1, (0,))


def test_branching_definition_brute_force():
    for n in range(1, 6):
        for b in enumerate_binary_trees(n):
            kinds = {(): "root"}
            edges = []

            def walk(x, path):
                if isinstance(x, Node):
                    for bit, c in ((0, x.left), (1, x.right)):
                        kinds[path + (bit,)] = "L" if bit == 0 else "R"
                        edges.append((path, path + (bit,)))
                        walk(c, path + (bit,))

            walk(b, ())
            expected = {
                c for p, c in edges
                if {kinds[p], kinds[c]} in ({"R", "L"}, {"R", "root"})
            }
            assert branching_edges(b) == expected


def test_theta_examples():
    assert theta(B1) == PlaneTree("aA")
    two = word_to_binary("NNLiRiRi")
    assert theta(two) == PlaneTree("aAaA")
    assert big_theta(B1) == NonCrossingPartition(1, ((1,),))
    assert big_theta(two) == NonCrossingPartition(2, ((1,), (2,)))
    assert big_theta(word_to_binary("NLiNLiRi")) == NonCrossingPartition(2, ((1, 2),))


@pytest.mark.parametrize("n", range(1, 7))
def test_theta_sizes_and_big_theta_bijection(n):
    images = set()
    for b in enumerate_binary_trees(n):
        t, leaf_vertex = theta_with_leaves(b)
        assert t.size == n
        assert sorted(leaf_vertex) == list(range(n + 1))
        images.add(big_theta(b))
    assert len(images) == catalan(n)


@given(st.lists(st.integers(0, 3), min_size=0, max_size=9))
def test_from_blocks_accepts_exactly_noncrossing(labels):
    if is_noncrossing_bruteforce(labels):
        p = NonCrossingPartition.from_blocks(labels)
        assert sorted(x for part in p.parts for x in part) == list(range(1, len(labels) + 1))
    else:
        with pytest.raises(InvalidPartition):
            NonCrossingPartition.from_blocks(labels)
