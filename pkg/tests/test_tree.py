# pylint: disable=C,R
import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from casson import tree
from casson.errors import TreeError


@st.composite
def signed_trees(draw, max_edges=5):
    n = draw(st.integers(0, max_edges))
    edges = []
    for c in range(1, n + 1):
        parent = draw(st.integers(0, c - 1))
        sign = draw(st.sampled_from([1, -1]))
        edges.append((parent, c, sign))
    return tree.SignedTree(0, edges)


def test_ch_plus_expands_to_a_path():
    t = tree.make_ch_plus(1).expand(4)
    assert t.depth() == 4
    assert [len(t.vertices_at(l)) for l in range(5)] == [1, 1, 1, 1, 1]
    assert all(s == 1 for _, _, s in t.edges)


def test_ch_mn_rejects_zero():
    with pytest.raises(TreeError):
        tree.make_ch_mn(0, 0, 2)


def test_bad_sign_is_refused():
    with pytest.raises(TreeError):
        tree.SignedTree(0, [(0, 1, 2)])


def test_kinkiness_of_ch_mn():
    for m, n in itertools.product(range(4), repeat=2):
        if (m, n) == (0, 0):
            continue
        t = tree.make_ch_mn(m, n, 2)
        assert tree.first_stage_kinkiness(t) == (m, n)
        assert tree.genus_bound(t) == max(m, n)
        assert tree.core_framing(t) == 2 * (m - n)
        assert tree.is_exact_kinkiness(t)


def test_kinkiness_swap_under_mirror():
    t = tree.make_ch_mn(3, 1, 1)
    assert tree.first_stage_kinkiness(t.mirror()) == tree.first_stage_kinkiness(t).swap()


def test_sigma_counts_signed_children():
    t = tree.make_ch_mn(2, 1, 0)
    assert t.sigma(t.root) == 1


def test_ch_mn_refines_its_positive_part():
    assert tree.refines(tree.make_ch_mn(2, 1, 2), tree.make_ch_mn(2, 0, 2))
    assert not tree.refines(tree.make_ch_mn(2, 0, 2), tree.make_ch_mn(2, 1, 2))


def test_json_round_trip():
    t = tree.make_ch_mn(2, 1, 2)
    assert tree.loads(t.dumps()) == t
    assert tree.loads(t.dumps()).dumps() == t.dumps()


def test_enumeration_is_canonical():
    trees = tree.enumerate_trees(3)
    assert len(set(trees)) == len(trees)
    assert [len(tree.enumerate_trees(k)) for k in range(3)] == [1, 3, 10]


@given(signed_trees())
def test_refines_is_reflexive(t):
    assert tree.refines(t, t)


@given(signed_trees(), signed_trees())
@settings(max_examples=50, deadline=None)
def test_common_refinement_refines_both(a, b):
    c = tree.common_refinement(a, b)
    assert tree.refines(c, a)
    assert tree.refines(c, b)


@given(signed_trees(3), signed_trees(3), signed_trees(3))
@settings(max_examples=50, deadline=None)
def test_refines_is_transitive(a, b, c):
    if tree.refines(a, b) and tree.refines(b, c):
        assert tree.refines(a, c)


@given(signed_trees())
def test_canonical_is_idempotent(t):
    c = t.canonical()
    assert c == t
    assert c.canonical().edges == c.edges


@given(signed_trees())
def test_mirror_is_an_involution(t):
    assert t.mirror().mirror() == t


@st.composite
def continued_trees(draw, max_edges=4):
    t = draw(signed_trees(max_edges))
    inner = sorted(p for p, _, _ in t.edges)
    choices = [tree.STOP, tree.REPEAT_PLUS, tree.REPEAT_MINUS]
    choices += ["{}:{}".format(tree.SUBTREE, v) for v in inner]
    rules = {v: draw(st.sampled_from(choices)) for v in t.leaves()}
    return tree.SignedTree(t.root, t.edges, rules)


def test_common_refinement_of_opposite_repeats():
    a = tree.SignedTree(0, [(0, 1, 1)], {1: tree.REPEAT_PLUS})
    b = tree.SignedTree(0, [(0, 1, 1)], {1: tree.REPEAT_MINUS})
    c = tree.common_refinement(a, b)
    for depth in range(1, 6):
        assert tree.refines(c, a, depth)
        assert tree.refines(c, b, depth)
    assert c == tree.common_refinement(b, a)
    assert not tree.refines(a, b, 3)


def test_common_refinement_keeps_the_repeating_side():
    a = tree.make_ch_plus(1)
    b = tree.SignedTree(0, [(0, 1, 1)])
    c = tree.common_refinement(a, b)
    assert c == a
    assert tree.refines(c, a, 6)


def test_common_refinement_follows_subtree_rules():
    # the leaf repeats the whole tree: a binary tree of positive edges
    a = tree.SignedTree(0, [(0, 1, 1), (0, 2, 1)], {1: "{}:0".format(tree.SUBTREE)})
    b = tree.make_ch_mn(0, 1, 1)
    c = tree.common_refinement(a, b)
    for depth in range(1, 6):
        assert tree.refines(c, a, depth)
        assert tree.refines(c, b, depth)


def test_common_refinement_is_idempotent():
    for t in [tree.make_ch_mn(2, 1, 1), tree.make_ch_plus(2)] + tree.enumerate_trees(3):
        assert tree.common_refinement(t, t) == t


@given(continued_trees(), continued_trees())
@settings(max_examples=100, deadline=None)
def test_common_refinement_refines_continued_trees(a, b):
    c = tree.common_refinement(a, b)
    depth = max(a.depth(), b.depth()) + 3
    assert tree.refines(c, a, depth)
    assert tree.refines(c, b, depth)


def test_refinement_order_on_small_trees():
    trees = tree.enumerate_trees(4)
    order = np.array([[tree.refines(a, b) for b in trees] for a in trees])
    assert order.diagonal().all()
    # antisymmetric: distinct canonical trees never refine each other both ways
    assert not (order & order.T & ~np.eye(len(trees), dtype=bool)).any()
    # transitive: a two step chain is always a direct refinement
    assert not ((order.astype(int) @ order.astype(int) > 0) & ~order).any()
