import json
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from graphpower.errors import (
    IndexOutOfRange,
    InvalidParameter,
    LimitExceeded,
    MalformedGraph6,
    SelfLoopRejected,
    SpecParseError,
)
from graphpower.graphs import (
    Graph,
    build_graph,
    canonical_certificate,
    canonical_form,
    classify,
    closed_neighborhood,
    complete,
    complete_bipartite,
    cycle,
    delete_vertex,
    disjoint_union,
    enumerate_connected_graphs,
    folded_cube,
    from_json,
    graph6_decode,
    graph6_encode,
    grid,
    hypercube,
    is_isomorphic,
    make_family,
    parse_graph_spec,
    path,
    petersen,
    reduce_indistinguishable,
    relabel,
    star,
    tadpole,
    to_dot,
    to_json,
    triangle_strip,
    wheel,
)

from oracles import connected_classes_bruteforce, connected_counts_by_euler_transform


def random_graph(draw):
    n = draw(st.integers(1, 6))
    nbits = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << nbits) - 1))
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> bit & 1:
                edges.append((i, j))
            bit += 1
    return Graph(n, edges)


graphs = st.composite(random_graph)()


def test_build_graph_fixtures():
    p3 = build_graph(3, [(0, 1), (1, 2)])
    assert p3 == path(3)
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4 == cycle(4)
    k1 = build_graph(1, [])
    assert k1.n == 1 and not k1.edges


def test_build_graph_errors():
    with pytest.raises(IndexOutOfRange):
        build_graph(3, [(0, 3)])
    with pytest.raises(SelfLoopRejected):
        build_graph(3, [(1, 1)])
    # duplicates collapse silently
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert len(g.edges) == 1


def test_family_fixtures():
    st3 = star(3)
    assert st3.n == 4 and st3.degree(0) == 3
    assert make_family("star", 3) == st3
    assert folded_cube(2) == complete(2)
    assert is_isomorphic(folded_cube(3), complete(4))
    assert tadpole(4, 1).n == 5
    assert grid(2, 3).n == 6
    assert petersen().n == 10 and all(petersen().degree(v) == 3 for v in range(10))
    w = wheel(6)
    assert w.degree(5) == 5 and all(w.degree(v) == 3 for v in range(5))
    ts = triangle_strip(5)
    assert classify(ts).girth == 3
    with pytest.raises(InvalidParameter):
        cycle(2)
    with pytest.raises(InvalidParameter):
        make_family("wheel", 3)
    with pytest.raises(InvalidParameter):
        make_family("nonsense", 1)


def test_hypercube_matches_two_squares_plus_matching():
    adjacency_lists = [[2, 4, 5], [1, 3, 6], [2, 4, 7], [1, 3, 8],
                       [1, 6, 8], [2, 5, 7], [3, 6, 8], [4, 5, 7]]
    edges = [(i, j - 1) for i, nbrs in enumerate(adjacency_lists) for j in nbrs]
    assert is_isomorphic(hypercube(3), build_graph(8, edges))
    q3 = hypercube(3)
    assert closed_neighborhood(q3, 0) == {0, 1, 2, 4}


def test_closed_neighborhood_fixtures():
    c4 = cycle(4)
    assert closed_neighborhood(c4, 0) == {0, 1, 3}
    k4 = complete(4)
    for v in range(4):
        assert closed_neighborhood(k4, v) == {0, 1, 2, 3}
    assert closed_neighborhood(complete(1), 0) == {0}
    with pytest.raises(IndexOutOfRange):
        closed_neighborhood(c4, 7)


@settings(max_examples=50, deadline=None)
@given(graphs)
def test_vertex_in_own_neighborhood(g):
    for v in range(g.n):
        assert v in closed_neighborhood(g, v)


def test_classify_fixtures():
    q3 = classify(hypercube(3))
    assert q3.girth == 4 and q3.square_completion
    g23 = classify(grid(2, 3))
    assert g23.girth == 4 and not g23.square_completion
    p5 = classify(path(5))
    assert p5.connected and math.isinf(p5.girth)
    assert classify(complete_bipartite(3, 4)).square_completion
    assert classify(complete(4)).girth == 3
    assert not classify(complete(4)).nbhd_distinguishable
    assert classify(cycle(5)).nbhd_distinguishable
    two_parts = classify(disjoint_union(path(2), path(3)))
    assert not two_parts.connected and len(two_parts.components) == 2


@settings(max_examples=50, deadline=None)
@given(graphs)
def test_girth5_blocks_square_completion(g):
    cls = classify(g)
    has_3path = any(g.degree(v) >= 2 for v in range(g.n))
    if cls.girth >= 5 and has_3path:
        assert not cls.square_completion


def test_reduce_indistinguishable():
    assert reduce_indistinguishable(complete(4)).n == 1
    assert reduce_indistinguishable(cycle(5)) == cycle(5)
    assert reduce_indistinguishable(cycle(4)) == cycle(4)  # K_{2,2}


@settings(max_examples=50, deadline=None)
@given(graphs)
def test_reduce_indistinguishable_idempotent(g):
    reduced = reduce_indistinguishable(g)
    assert reduce_indistinguishable(reduced) == reduced
    from graphpower.graphs import is_neighborhood_distinguishable
    assert is_neighborhood_distinguishable(reduced)


def test_reduce_order_invariance():
    # delete in scrambled orders by relabeling first; certificates must agree
    g = complete(5)
    base = canonical_certificate(reduce_indistinguishable(g))
    rng = random.Random(3)
    for _ in range(6):
        perm = list(range(g.n))
        rng.shuffle(perm)
        alt = reduce_indistinguishable(relabel(g, perm))
        assert canonical_certificate(alt) == base


def test_delete_vertex():
    g = delete_vertex(cycle(4), 2)
    assert g.n == 3 and len(g.edges) == 2
    with pytest.raises(InvalidParameter):
        delete_vertex(complete(1), 0)


def test_enumerate_counts_match_frozen_and_oracles():
    frozen = (1, 1, 2, 6, 21, 112)
    for n, want in enumerate(frozen, start=1):
        got = sum(1 for _ in enumerate_connected_graphs(n))
        assert got == want
    for n in range(1, 6):
        assert connected_classes_bruteforce(n) == frozen[n - 1]
    assert connected_counts_by_euler_transform(7) == [1, 1, 2, 6, 21, 112, 853]


@pytest.mark.slow
def test_enumerate_eight_vertices():
    assert sum(1 for _ in enumerate_connected_graphs(8)) == 11117


def test_enumerate_yields_connected_nonisomorphic_canonical():
    seen = set()
    for g in enumerate_connected_graphs(5):
        assert classify(g).connected
        cert = canonical_certificate(g)
        assert cert not in seen
        seen.add(cert)
        # representatives are already canonically labeled
        assert canonical_form(g)[1] == list(range(g.n))
    with pytest.raises(LimitExceeded):
        next(enumerate_connected_graphs(9))
    with pytest.raises(InvalidParameter):
        next(enumerate_connected_graphs(0))


@settings(max_examples=40, deadline=None)
@given(graphs, st.randoms(use_true_random=False))
def test_certificate_invariant_under_relabeling(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    assert canonical_certificate(relabel(g, perm)) == canonical_certificate(g)


def test_graph6_fixtures():
    assert graph6_encode(complete(1)) == "@"
    assert graph6_encode(complete(2)) == "A_"
    c4 = cycle(4)
    assert graph6_decode(graph6_encode(c4)) == c4
    assert graph6_decode(">>graph6<<A_") == complete(2)


def test_graph6_roundtrip_over_enumeration():
    for g in enumerate_connected_graphs(5):
        s = graph6_encode(g)
        assert s[0] == "D"
        back = graph6_decode(s)
        assert back == g
        assert graph6_encode(back) == s


def test_graph6_large_n_form():
    g = path(63)
    s = graph6_encode(g)
    assert s.startswith("~")
    assert graph6_decode(s) == g


def test_graph6_malformed():
    with pytest.raises(MalformedGraph6):
        graph6_decode("")
    with pytest.raises(MalformedGraph6):
        graph6_decode("C")  # truncated data
    with pytest.raises(MalformedGraph6):
        graph6_decode("C~~~")  # too much data
    with pytest.raises(MalformedGraph6):
        graph6_decode("B\x19")  # byte below offset
    with pytest.raises(MalformedGraph6):
        graph6_decode("A" + chr(63 + 16))  # nonzero padding for n=2


def test_dot_and_json():
    c4 = cycle(4)
    dot = to_dot(c4)
    assert "0 -- 1" in dot and dot.startswith("graph G {")
    obj = to_json(c4)
    assert from_json(json.loads(json.dumps(obj))) == c4


def test_parse_graph_spec(tmp_path):
    assert parse_graph_spec("P5") == path(5)
    assert parse_graph_spec("C4") == cycle(4)
    assert parse_graph_spec("K5") == complete(5)
    assert parse_graph_spec("K2,3") == complete_bipartite(2, 3)
    assert parse_graph_spec("St3") == star(3)
    assert parse_graph_spec("Q3") == hypercube(3)
    assert parse_graph_spec("FQ5") == folded_cube(5)
    assert parse_graph_spec("W6") == wheel(6)
    assert parse_graph_spec("T4,1") == tadpole(4, 1)
    assert parse_graph_spec("TS6") == triangle_strip(6)
    assert parse_graph_spec("grid5x5") == grid(5, 5)
    assert parse_graph_spec("petersen") == petersen()
    assert parse_graph_spec("g6:" + graph6_encode(cycle(4))) == cycle(4)
    target = tmp_path / "g.json"
    target.write_text(json.dumps(to_json(cycle(5))))
    assert parse_graph_spec("@" + str(target)) == cycle(5)
    with pytest.raises(SpecParseError) as exc:
        parse_graph_spec("X9")
    assert "X9" in str(exc.value)
    with pytest.raises(SpecParseError):
        parse_graph_spec("C2")  # below family minimum
