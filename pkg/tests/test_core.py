from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st
from support import random_tree, scramble

from stt_forest.core import InvalidOperation, SttForest

# STAR4: star with center s and leaves x, y, z; search tree chain x -> y -> s -> z
X, Y, S, Z = 0, 1, 2, 3
STAR_EDGES = [(S, X), (S, Y), (S, Z)]


@pytest.fixture
def star4() -> SttForest:
    return SttForest.from_structure(4, [None, X, Y, S], STAR_EDGES)


@pytest.fixture
def path5() -> SttForest:
    # path 1-2-3-4-5 (node 0 unused); search tree 1 -> 4 -> {3 -> 2, 5}
    edges = [(1, 2), (2, 3), (3, 4), (4, 5)]
    return SttForest.from_structure(6, [None, None, 3, 4, 1, 4], edges)


def build_random(seed: int, n: int, rotations: int = 200) -> SttForest:
    """A random tree under a random 2-cut search tree."""
    rng = random.Random(seed)
    f = SttForest(n, instrumented=True)
    for a, b in random_tree(rng, n):
        # attach needs roots: bring both endpoints up by rotations
        for v in (a, b):
            while f.parent[v] is not None:
                p = f.parent[v]
                if f.can_rotate(v):
                    f.rotate(v)
                else:
                    f.rotate(p)
        f.attach(a, b)
    scramble(f, rng, rotations)
    return f


# ---------------------------------------------------------------------------
# construction


def test_empty_and_singletons():
    assert SttForest(0).n == 0
    f = SttForest(1)
    assert f.parent == [None] and f.dsep == [None] and f.isep == [None]
    assert SttForest(3).underlying_edges() == set()
    assert SttForest(3).validate()


def test_negative_size_rejected():
    with pytest.raises(ValueError):
        SttForest(-1)


def test_from_structure_rejects_three_cut():
    # star with the center at the bottom of a chain of three leaves is 3-cut
    edges = [(0, 1), (0, 2), (0, 3)]
    with pytest.raises(ValueError):
        SttForest.from_structure(4, [3, 2, 3, None], edges)


def test_from_structure_rejects_non_search_tree():
    with pytest.raises(ValueError):
        # path 0-1-2 with 2 hanging under 0: the subtree {2} is not adjacent to 0
        SttForest.from_structure(3, [None, 0, 0], [(0, 1), (1, 2)])


# ---------------------------------------------------------------------------
# separator predicates


def test_star4_separators(star4):
    assert star4.is_separator(S)
    assert not star4.is_separator(Z)
    assert not star4.is_separator(X)
    assert star4.is_direct_separator(S)
    assert not star4.is_indirect_separator(S)
    assert star4.compute_boundary(S) == {X, Y}
    assert star4.compute_boundary(Y) == {X}
    assert star4.compute_boundary(Z) == {S}


def test_path5_indirect_separator(path5):
    assert path5.compute_boundary(2) == {1, 3}
    assert path5.is_indirect_separator(2)
    assert not path5.is_direct_separator(2)
    assert path5.is_direct_separator(3)  # boundary {4, 1}
    assert not path5.is_separator(5)


def test_roots_are_never_separators(star4):
    assert not star4.is_direct_separator(X)
    assert not star4.is_indirect_separator(X)
    assert star4.compute_boundary(X) == set()


def test_can_rotate_star4(star4):
    assert not star4.can_rotate(Z)  # 1-cut under a separator
    assert star4.can_rotate(S)
    assert star4.can_rotate(Y)
    with pytest.raises(InvalidOperation):
        star4.can_rotate(X)


# ---------------------------------------------------------------------------
# rotations


def test_rotate_two_nodes():
    f = SttForest.from_structure(2, [None, 0], [(0, 1)])
    f.rotate(1)
    assert f.parent == [1, None]
    assert f.dsep == [None, None] and f.isep == [None, None]
    assert f.counter.rotations == 1


def test_rotate_star4_matches_brute_force(star4):
    star4.rotate(S)
    assert star4.parent == [None, S, X, S]
    assert star4.validate()
    # y's subtree is just {y}, with boundary {s}
    assert star4.compute_boundary(Y) == {S}
    assert not star4.is_separator(Z)


def test_illegal_rotation_raises(star4):
    with pytest.raises(InvalidOperation):
        star4.rotate(Z)
    with pytest.raises(InvalidOperation):
        star4.rotate(X)


def test_rotation_with_transferred_child():
    # path 0-1-2-3, search tree 3 -> 1 -> {0, 2}; rotating 1 moves 2 under 3
    f = SttForest.from_structure(4, [1, 3, 1, None], [(0, 1), (1, 2), (2, 3)])
    assert f.is_direct_separator(2) and f.dsep[1] == 2
    f.rotate(1)
    assert f.parent == [1, None, 3, 1]
    assert f.validate()


def test_rotation_moves_direct_separator_child():
    # path 0-1-2-3-4, tree 0 -> 4 -> 2 -> {1, 3}: 3 is the direct, 1 the indirect separator
    f = SttForest.from_structure(5, [None, 2, 4, 2, 0], [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert f.dsep[2] == 3 and f.isep[2] == 1
    before = f.underlying_edges()
    for v in (2, 1, 3, 4, 2):
        if f.parent[v] is not None and f.can_rotate(v):
            f.rotate(v)
            assert f.validate()
    assert f.underlying_edges() == before


# ---------------------------------------------------------------------------
# attach / detach


def test_attach_and_detach():
    f = SttForest(3, instrumented=True)
    f.attach(1, 2)
    with pytest.raises(InvalidOperation):
        f.attach(0, 1)  # 1 is not a root
    f.attach(0, 2)
    assert f.underlying_edges() == {(1, 2), (0, 2)}
    assert f.validate()
    f.detach(1)
    assert f.underlying_edges() == {(0, 2)}
    with pytest.raises(InvalidOperation):
        f.detach(1)


def test_attach_requires_distinct_roots():
    f = SttForest(2)
    with pytest.raises(InvalidOperation):
        f.attach(0, 0)


# ---------------------------------------------------------------------------
# reconstruction and validation


def test_underlying_edges_small_chain():
    f = SttForest(4, instrumented=True)
    f.attach(1, 2)
    f.rotate(1)  # 1 becomes root
    f.attach(3, 1)
    assert f.underlying_edges() == {(1, 2), (1, 3)}


def test_validate_detects_corrupted_designator(path5):
    assert path5.validate()
    assert path5.isep[3] == 2
    path5.isep[3] = None
    report = path5.validate()
    assert not report
    assert "designator" in report.message or "differ" in report.message


def test_validate_detects_cycle():
    f = SttForest(2)
    f.parent = [1, 0]
    assert not f.validate()


def test_copy_is_independent(star4):
    g = star4.copy()
    g.rotate(S)
    assert star4.parent == [None, X, Y, S]
    assert g.validate() and star4.validate()


# ---------------------------------------------------------------------------
# properties


@given(st.integers(0, 10**6), st.integers(2, 14))
def test_random_rotations_preserve_edges_and_validity(seed, n):
    f = build_random(seed, n, rotations=0)
    edges = f.underlying_edges()
    rng = random.Random(seed)
    for _ in range(60):
        v = rng.randrange(n)
        if f.parent[v] is not None and f.can_rotate(v):
            f.rotate(v)
            assert f.underlying_edges() == edges
    assert f.validate()


@given(st.integers(0, 10**6), st.integers(3, 12))
def test_can_rotate_agrees_with_brute_force(seed, n):
    f = build_random(seed, n)
    for v in range(n):
        if f.parent[v] is None:
            continue
        trial = f.copy()
        trial.checked = False
        trial.rotate(v)
        assert bool(trial.validate()) == f.can_rotate(v), v


@given(st.integers(0, 10**6), st.integers(2, 12))
def test_boundaries_nest_and_are_ancestors(seed, n):
    f = build_random(seed, n)
    for v in range(n):
        bnd = f.compute_boundary(v)
        assert len(bnd) <= 2
        anc = set()
        x = f.parent[v]
        while x is not None:
            anc.add(x)
            x = f.parent[x]
        assert bnd <= anc
        p = f.parent[v]
        if p is not None:
            assert bnd <= f.compute_boundary(p) | {p}
        assert tuple(sorted(bnd)) == tuple(sorted(f.designated_boundaries()[v]))
