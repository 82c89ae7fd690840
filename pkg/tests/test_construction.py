import pytest
from hypothesis import given, settings, strategies as st

from ckfree import (
    DomainError,
    ResourceError,
    block_plan,
    build_construction,
    choose_level,
    choose_level_float,
    complete_to_triangulation,
    completion_edges,
    is_triangulation,
    moon_moser,
    moon_moser_order,
    truncated_moon_moser,
    verify_completion,
)


def doubling_level_oracle(k):
    """Largest i with 3 * 2**i < k, found by explicit doubling."""
    i, best = 0, None
    while 3 * 2**i < k:
        best = i
        i += 1
    return best


@pytest.mark.parametrize(
    "k,expected", [(7, 1), (12, 1), (13, 2), (24, 2), (25, 3), (48, 3), (49, 4)]
)
def test_choose_level_examples(k, expected):
    assert choose_level(k) == expected
    assert doubling_level_oracle(k) == expected


def test_choose_level_matches_oracle_on_range():
    for k in range(7, 3000):
        assert choose_level(k) == doubling_level_oracle(k)


def test_choose_level_matches_float_form():
    for k in list(range(7, 5000)) + [3 * 2**m for m in range(2, 19)]:
        if k < 7:
            continue
        assert choose_level(k) == choose_level_float(k), k


def test_choose_level_domain_error():
    with pytest.raises(DomainError):
        choose_level(6)


def test_moon_moser_counts():
    for i in range(1, 8):
        t = moon_moser(i)
        assert t.graph.n == (3**i + 5) // 2
        assert t.graph.edge_count == 3 * t.graph.n - 6
        assert is_triangulation(t.graph)
        assert set(t.graph.outer_face().boundary) == {t.x, t.y, t.z}


def test_moon_moser_level_one_is_k4():
    t = moon_moser(1)
    assert t.graph.n == 4 and t.graph.edge_count == 6
    assert t.insertion_log == ()


def test_moon_moser_level_two_inserts_three_vertices():
    t = moon_moser(2)
    assert len(t.insertion_log) == 3
    assert t.graph.n == 7 and t.graph.edge_count == 15


def test_moon_moser_resource_limit():
    with pytest.raises(ResourceError):
        moon_moser(5, max_vertices=100)


def test_truncation_full_is_identity():
    for i in (2, 3):
        assert truncated_moon_moser(i, moon_moser_order(i)).graph == moon_moser(i).graph


def test_truncation_minimal_is_k4():
    assert truncated_moon_moser(3, 4).graph == moon_moser(1).graph


def test_truncation_intermediate():
    t = truncated_moon_moser(2, 5)
    assert t.graph.n == 5 and t.graph.edge_count == 9
    assert is_triangulation(t.graph)


def test_truncation_every_prefix_is_triangulation_and_subgraph():
    full = moon_moser(3).graph
    full_edges = set(full.edges())
    for v in range(4, moon_moser_order(3) + 1):
        g = truncated_moon_moser(3, v).graph
        assert g.n == v
        assert is_triangulation(g)
        assert set(g.edges()) <= full_edges


def test_truncation_domain_errors():
    with pytest.raises(DomainError):
        truncated_moon_moser(2, 3)
    with pytest.raises(DomainError):
        truncated_moon_moser(2, 8)


@pytest.mark.parametrize(
    "n,k,i,s,v_s",
    [(20, 13, 2, 4, 5), (7, 7, 1, 3, 3), (4, 7, 1, 1, 4), (7, 13, 2, 1, 7),
     (20, 7, 1, 9, 4), (100, 13, 2, 20, 5)],
)
def test_block_plan_examples(n, k, i, s, v_s):
    plan = block_plan(n, k)
    assert (plan.i, plan.s, plan.v_s) == (i, s, v_s)


def test_block_plan_rejects_small_n():
    with pytest.raises(DomainError):
        block_plan(6, 13)  # level 2 needs at least 7 vertices
    with pytest.raises(DomainError):
        block_plan(3, 7)


def test_block_plan_single_block_at_minimum():
    for k, i in ((7, 1), (13, 2), (25, 3)):
        n = moon_moser_order(i)
        plan = block_plan(n, k)
        assert plan.s == 1 and plan.v_s == n


@pytest.mark.parametrize("n,k,edges", [(7, 7, 13), (20, 13, 51), (6, 7, 11), (20, 7, 46)])
def test_build_construction_edge_counts(n, k, edges):
    h = build_construction(n, k)
    assert h.graph.n == n
    assert h.graph.edge_count == edges == 3 * n - 6 - (h.plan.s - 1)


def test_single_block_equals_block_with_edge_restored():
    h = build_construction(7, 13)  # s = 1, full T_2 block
    t = moon_moser(2).graph
    assert h.graph.n == t.n
    assert set(h.graph.edges()) == set(t.edges())


def test_face_structure():
    h = build_construction(20, 13)
    quads = [f for f in h.graph.face_walks() if len(f) == 4]
    others = [f for f in h.graph.face_walks() if len(f) != 4]
    assert len(quads) == h.plan.s - 1
    assert all(len(f) == 3 for f in others)
    for q in quads:
        assert h.x in q.boundary and h.y in q.boundary
    expected = {
        frozenset((h.w[j], h.z[j + 1])) for j in range(h.plan.s - 1)
    }
    assert {frozenset(q.boundary) - {h.x, h.y} for q in quads} == expected


def test_degenerate_last_block():
    h = build_construction(7, 7)
    assert h.plan.v_s == 3
    assert h.w[-1] is None
    assert h.z[-1] is not None
    assert h.graph.degree(h.z[-1]) == 2
    assert verify_completion(h)


def test_completion_examples():
    h = build_construction(20, 13)
    assert len(completion_edges(h).edges) == 3
    g = complete_to_triangulation(h)
    assert g.edge_count == 54
    assert is_triangulation(g)

    h = build_construction(7, 7)
    assert len(completion_edges(h).edges) == 2
    assert complete_to_triangulation(h).edge_count == 15

    h = build_construction(4, 7)  # s=1: no chords, already a triangulation
    assert completion_edges(h).edges == ()
    assert is_triangulation(h.graph)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(4, 60), k=st.integers(7, 20))
def test_construction_properties(n, k):
    i = choose_level(k)
    if n < moon_moser_order(i):
        with pytest.raises(DomainError):
            block_plan(n, k)
        return
    h = build_construction(n, k)
    plan = h.plan
    assert h.graph.edge_count == 3 * n - 6 - (plan.s - 1)
    assert 3 <= plan.v_s <= plan.block_size
    half = (3**plan.i + 1) // 2
    assert (plan.v_s == 3) == ((n - 2) % half == 1)
    assert verify_completion(h)


def test_labels_are_block_local_outer_vertices():
    h = build_construction(20, 13)
    # each z_j is the degree-4 outer vertex of its block inside H
    for j, zj in enumerate(h.z):
        assert h.graph.has_edge(h.x, zj) and h.graph.has_edge(h.y, zj)
    for wj in h.w:
        assert wj is not None
        assert h.graph.has_edge(h.x, wj) and h.graph.has_edge(h.y, wj)
