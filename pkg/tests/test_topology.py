import pytest
from hypothesis import given, strategies as st

from enhcube.errors import DecompositionUnavailableError, NotAnEdgeError, ParameterError
from enhcube.oracle import adjacency
from enhcube.topology import (
    SKIP,
    Params,
    classify_edge,
    decompose,
    dimension,
    edge_count,
    edges,
    is_bipartite,
    is_edge,
    make_edge,
    neighbors,
    skip_of,
)


def b(s):
    return int(s, 2)


@st.composite
def params_and_vertex(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, n))
    u = draw(st.integers(0, (1 << n) - 1))
    return Params(n, k), u


# --- examples ---------------------------------------------------------------


def test_neighbors_examples():
    p = Params(3, 2)
    assert neighbors(p, 0) == [b("001"), b("010"), b("011"), b("100")]
    # independent check against the oracle's definition-level adjacency
    assert neighbors(p, 0) == adjacency(p)[0]
    assert neighbors(Params(3, 3), 0) == [b("001"), b("010"), b("100"), b("111")]
    assert neighbors(Params(3, 1), 0) == [b("001"), b("010"), b("100")]


def test_skip_of_examples():
    assert skip_of(Params(4, 3), 0) == b("0111")
    assert skip_of(Params(3, 3), b("001")) == b("110")
    p = Params(3, 2)
    assert all(skip_of(p, skip_of(p, u)) == u for u in range(8))


def test_classify_examples():
    p = Params(4, 3)
    assert classify_edge(p, b("0000"), b("1000")) == dimension(4)
    assert classify_edge(p, b("0001"), b("0110")) == SKIP
    with pytest.raises(NotAnEdgeError):
        classify_edge(Params(3, 2), b("000"), b("101"))
    assert b("101") not in adjacency(Params(3, 2))[0]
    with pytest.raises(NotAnEdgeError):
        classify_edge(p, 3, 3)


def test_k1_skip_is_dimension_one():
    p = Params(3, 1)
    assert classify_edge(p, 0, 1) == dimension(1)
    assert len(neighbors(p, 5)) == 3


@pytest.mark.parametrize(
    "n,k,expected",
    [(4, 3, True), (6, 2, False), (2, 2, False), (4, 4, False), (6, 6, False), (5, 5, True)],
)
def test_is_bipartite(n, k, expected):
    assert is_bipartite(Params(n, k)) is expected


def test_decompose_examples():
    p = Params(4, 3)
    assert decompose(p, b("1010")) == (1, b("010"))
    assert decompose(p, b("0111")) == (0, b("111"))
    with pytest.raises(DecompositionUnavailableError):
        decompose(Params(3, 3), 0)


@pytest.mark.parametrize("n,k", [(0, 1), (3, 0), (3, 4), (31, 2)])
def test_invalid_params(n, k):
    with pytest.raises(ParameterError):
        Params(n, k)


def test_vertex_range_checked():
    with pytest.raises(ParameterError):
        neighbors(Params(3, 2), 8)
    with pytest.raises(ParameterError):
        skip_of(Params(3, 2), -1)


def test_env_cap_lowers_limit(monkeypatch):
    monkeypatch.setenv("ENHCUBE_MAX_N", "5")
    with pytest.raises(ParameterError):
        Params(6, 2)
    monkeypatch.setenv("ENHCUBE_MAX_N", "99")
    Params(30, 2)
    with pytest.raises(ParameterError):
        Params(31, 2)


def test_labels_round_trip():
    p = Params(4, 2)
    assert p.label(5) == "0101"
    assert p.parse("0101") == 5
    with pytest.raises(ParameterError):
        p.parse("10101")


# --- properties ---------------------------------------------------------------


@given(params_and_vertex())
def test_degree(pu):
    p, u = pu
    assert len(neighbors(p, u)) == (p.n if p.k == 1 else p.n + 1)


@given(params_and_vertex())
def test_skip_involution_and_displacement(pu):
    p, u = pu
    s = skip_of(p, u)
    assert s != u
    assert skip_of(p, s) == u
    assert bin(u ^ s).count("1") == p.k


@given(params_and_vertex())
def test_adjacency_symmetric_and_classifiable(pu):
    p, u = pu
    nbrs = neighbors(p, u)
    assert nbrs == sorted(nbrs)
    for v in nbrs:
        assert u in neighbors(p, v)
        classify_edge(p, u, v)
    for v in range(min(p.order, 64)):
        assert is_edge(p, u, v) == (v in nbrs)


@given(params_and_vertex(), st.integers(0, 255))
def test_decomposition_soundness(pu, other):
    p, u = pu
    if p.k == p.n:
        return
    v = other % p.order
    su, pu_ = decompose(p, u)
    sv, pv = decompose(p, v)
    sub = p.sub()
    if su == sv:
        assert is_edge(p, u, v) == (pu_ != pv and is_edge(sub, pu_, pv))
    else:
        assert is_edge(p, u, v) == (pu_ == pv)
    if is_edge(p, u, v) and su != sv:
        assert classify_edge(p, u, v) == dimension(p.n)


@pytest.mark.parametrize("n", range(2, 9))
def test_edge_counts(n):
    for k in range(1, n + 1):
        p = Params(n, k)
        es = list(edges(p))
        assert len(es) == edge_count(p)
        counts = {}
        for e in es:
            assert e.u < e.v
            counts[e.cls] = counts.get(e.cls, 0) + 1
        for i in range(1, n + 1):
            assert counts[dimension(i)] == 2 ** (n - 1)
        assert counts.get(SKIP, 0) == (2 ** (n - 1) if k >= 2 else 0)


def test_make_edge_canonical():
    p = Params(4, 3)
    assert make_edge(p, 7, 0) == make_edge(p, 0, 7)
    assert make_edge(p, 7, 0).u == 0
