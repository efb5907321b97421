from __future__ import annotations

from itertools import combinations

import pytest
from helpers import literal_doubly, literal_resolving, literal_strong
from hypothesis import given, settings
from hypothesis import strategies as st

from metricdim.constructors import build_cycle, build_h, build_l, build_layered, build_path
from metricdim.errors import EmptySet, SetTooSmall, VertexIndexError
from metricdim.graph import Graph, all_pairs_distances
from metricdim.kernel import (
    doubly_violation,
    is_doubly_resolving,
    is_resolving,
    is_strong_resolving,
    maximally_distant_from,
    mmd_pairs,
    representation,
    representations,
    resolving_violation,
    strong_cover_matrix,
    strong_violation,
    strongly_resolves,
)
from metricdim.namedsets import build_named_set

C4 = build_cycle(4)
D4 = all_pairs_distances(C4)
P3 = build_path(3)
D3 = all_pairs_distances(P3)


def test_representation_of_member():
    assert representation(2, [2], D4) == (0,)


def test_representation_table_rows():
    lp = build_layered(4, 3, 4)
    d = all_pairs_distances(lp.graph)
    e = build_named_set("E", {}, lp)
    assert representation(lp.vertex(5, 1), e, d) == (1, 2, 3, 1, 4)
    lp5 = build_layered(5, 4, 4)
    d5 = all_pairs_distances(lp5.graph)
    assert representation(lp5.vertex(20, 4), build_named_set("D1", {}, lp5), d5) == (7, 8, 4, 1)


def test_representations_matrix():
    assert representations([0, 1], D4).tolist() == [[0, 1], [1, 0], [2, 1], [1, 2]]


def test_input_validation():
    with pytest.raises(EmptySet):
        representation(0, [], D4)
    with pytest.raises(EmptySet):
        is_resolving([], D4)
    with pytest.raises(EmptySet):
        is_strong_resolving([], D4)
    with pytest.raises(ValueError):
        is_resolving([0, 0], D4)
    with pytest.raises(VertexIndexError):
        is_resolving([4], D4)
    with pytest.raises(SetTooSmall):
        is_doubly_resolving([0], D4)


def test_resolving_examples():
    assert not is_resolving([0], D4)
    assert resolving_violation([0], D4) == (1, 3)
    assert is_resolving([0, 1], D4)
    hg = build_h(12)
    assert is_resolving(build_named_set("P", {}, hg), all_pairs_distances(hg.graph))


def test_doubly_examples():
    assert not is_doubly_resolving([0, 2], D4)
    assert is_doubly_resolving([0, 1, 2], D4)
    lp = build_layered(5, 4, 4)
    assert is_doubly_resolving(build_named_set("D1", {}, lp), all_pairs_distances(lp.graph))


def test_doubly_violation_lambda():
    x, y, lam = doubly_violation([0, 2], D4)
    rx, ry = representation(x, [0, 2], D4), representation(y, [0, 2], D4)
    assert all(a - b == lam for a, b in zip(rx, ry))


def test_strongly_resolves_examples():
    p2 = all_pairs_distances(build_path(2))
    assert strongly_resolves(0, 0, 1, p2)
    assert strongly_resolves(0, 2, 3, D4)
    assert not strongly_resolves(1, 0, 2, D4)
    with pytest.raises(ValueError):
        strongly_resolves(0, 1, 1, D4)


def test_strong_examples():
    assert is_strong_resolving([0], all_pairs_distances(build_path(2)))
    assert is_strong_resolving([0, 1], D4)
    assert strong_violation([0], D4) is not None
    lp = build_layered(3, 3, 2)
    assert is_strong_resolving(build_named_set("T", {}, lp), all_pairs_distances(lp.graph))


def test_maximally_distant():
    assert maximally_distant_from(0, 2, P3, D3) and maximally_distant_from(2, 0, P3, D3)
    assert not maximally_distant_from(1, 0, P3, D3)
    assert maximally_distant_from(2, 0, C4, D4)
    with pytest.raises(ValueError):
        maximally_distant_from(0, 0, P3, D3)


def test_mmd_pairs_small():
    assert mmd_pairs(C4, D4) == {(0, 2), (1, 3)}
    assert mmd_pairs(P3, D3) == {(0, 2)}


def test_mmd_first_layer_meets_last_layer():
    lp = build_layered(4, 3, 2)
    pairs = mmd_pairs(lp.graph, all_pairs_distances(lp.graph))
    first = lp.layer(1, 1)
    last = set(lp.layer(lp.k, lp.m))
    for u in first:
        assert any((min(u, v), max(u, v)) in pairs for v in last)


def test_mmd_matches_definition():
    g = build_l(5).graph
    d = all_pairs_distances(g)
    want = {
        (u, v)
        for u, v in combinations(range(g.n_vertices), 2)
        if maximally_distant_from(u, v, g, d) and maximally_distant_from(v, u, g, d)
    }
    assert mmd_pairs(g, d) == want


def test_strong_cover_matrix_agrees_with_triples():
    d = all_pairs_distances(build_layered(3, 3).graph)
    pairs, cover = strong_cover_matrix(d)
    for p, (u, v) in enumerate(pairs):
        for w in range(d.n):
            assert cover[p, w] == strongly_resolves(w, int(u), int(v), d)


# ---- property tests ----------------------------------------------------------


@st.composite
def connected_graphs(draw, max_n=10):
    n = draw(st.integers(2, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    edges = {(p, i) for i, p in zip(range(1, n), parents)}
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    return Graph.from_edges(n, sorted(edges))


@st.composite
def graph_and_set(draw, min_size=1):
    g = draw(connected_graphs())
    n = g.n_vertices
    size = draw(st.integers(min(min_size, n), n))
    q = draw(st.permutations(range(n)))[:size]
    return g, list(q)


@settings(max_examples=150, deadline=None)
@given(graph_and_set())
def test_resolving_matches_literal(gq):
    g, q = gq
    d = all_pairs_distances(g)
    assert is_resolving(q, d) == literal_resolving(q, d.d.astype(int).tolist())


@settings(max_examples=150, deadline=None)
@given(graph_and_set(min_size=2))
def test_doubly_reformulation_matches_literal(gq):
    g, q = gq
    if len(q) < 2:
        return
    d = all_pairs_distances(g)
    assert is_doubly_resolving(q, d) == literal_doubly(q, d.d.astype(int).tolist())


@settings(max_examples=150, deadline=None)
@given(graph_and_set())
def test_strong_matches_literal(gq):
    g, q = gq
    d = all_pairs_distances(g)
    assert is_strong_resolving(q, d) == literal_strong(q, d.d.astype(int).tolist())


@settings(max_examples=150, deadline=None)
@given(graph_and_set(min_size=2))
def test_implications(gq):
    g, q = gq
    d = all_pairs_distances(g)
    if len(q) >= 2 and is_doubly_resolving(q, d):
        assert is_resolving(q, d)
    if is_strong_resolving(q, d):
        assert is_resolving(q, d)


@settings(max_examples=150, deadline=None)
@given(graph_and_set(), st.data())
def test_monotone_under_supersets(gq, data):
    g, q = gq
    d = all_pairs_distances(g)
    rest = [v for v in range(g.n_vertices) if v not in q]
    extra = data.draw(st.lists(st.sampled_from(rest), unique=True)) if rest else []
    sup = q + extra
    if is_resolving(q, d):
        assert is_resolving(sup, d)
    if is_strong_resolving(q, d):
        assert is_strong_resolving(sup, d)
    if len(q) >= 2 and is_doubly_resolving(q, d):
        assert is_doubly_resolving(sup, d)


@settings(max_examples=150, deadline=None)
@given(graph_and_set())
def test_strong_sets_cover_mmd_pairs(gq):
    g, q = gq
    d = all_pairs_distances(g)
    if is_strong_resolving(q, d):
        s = set(q)
        assert all(u in s or v in s for u, v in mmd_pairs(g, d))


@settings(max_examples=150, deadline=None)
@given(graph_and_set())
def test_order_of_set_does_not_matter(gq):
    g, q = gq
    d = all_pairs_distances(g)
    r = list(reversed(q))
    assert is_resolving(q, d) == is_resolving(r, d)
    assert is_strong_resolving(q, d) == is_strong_resolving(r, d)
    if len(q) >= 2:
        assert is_doubly_resolving(q, d) == is_doubly_resolving(r, d)


# the same properties on every family instance the claims touch

FAMILY_GRAPHS = [
    build_cycle(4), build_cycle(5), build_path(4),
    build_layered(3, 3).graph, build_layered(4, 3).graph, build_layered(5, 3).graph,
    build_layered(3, 3, 2).graph, build_h(5).graph, build_l(5).graph,
]


@pytest.mark.parametrize("g", FAMILY_GRAPHS, ids=lambda g: f"n{g.n_vertices}m{g.n_edges}")
def test_family_properties(g):
    import random

    rng = random.Random(g.n_vertices)
    d = all_pairs_distances(g)
    dl = d.d.astype(int).tolist()
    mmd = mmd_pairs(g, d)
    n = g.n_vertices
    for _ in range(40):
        q = rng.sample(range(n), rng.randint(2, min(n, 8)))
        res, dbl, strong = is_resolving(q, d), is_doubly_resolving(q, d), is_strong_resolving(q, d)
        assert dbl == literal_doubly(q, dl)
        assert strong == literal_strong(q, dl)
        assert not dbl or res
        assert not strong or res
        if strong:
            assert all(u in q or v in q for u, v in mmd)
        sup = q + [v for v in rng.sample(range(n), min(3, n)) if v not in q]
        assert not res or is_resolving(sup, d)
        assert not dbl or is_doubly_resolving(sup, d)
        assert not strong or is_strong_resolving(sup, d)
