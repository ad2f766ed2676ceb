import pytest
from hypothesis import given, settings, strategies as st

import enhcube.embedder as emb
from enhcube.cycle import Cycle, open_at
from enhcube.embedder import (
    admissible_lengths,
    base_cycle_folded,
    embed_cycle,
    lift,
    product_extend_two,
    product_join,
    recursion_depth,
    split_odd_length,
)
from enhcube.errors import (
    ConstructionError,
    InadmissibleLengthError,
    ParameterError,
    ResourceError,
)
from enhcube.oracle import validate_cycle
from enhcube.topology import Params, classify_edge, dimension, edges


def b(s):
    return int(s, 2)


def same_cycle(xs, ys):
    """Equal up to rotation and reflection."""
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys) or set(xs) != set(ys):
        return False
    n = len(xs)
    i = ys.index(xs[0])
    fwd = [ys[(i + j) % n] for j in range(n)]
    bwd = [ys[(i - j) % n] for j in range(n)]
    return xs in (fwd, bwd)


def crossing_count(c: Cycle) -> int:
    p = c.params
    return sum(1 for a, x in c.pairs() if classify_edge(p, a, x) == dimension(p.n))


# --- admissible lengths ----------------------------------------------------------


def test_admissible_examples():
    p = Params(3, 2)
    low = admissible_lengths(p, (0, 1))
    assert low.evens == [4, 6, 8] and low.odds == [3, 5, 7]
    high = admissible_lengths(p, (0, 4))
    assert high.evens == [4, 6, 8] and high.odds == [5, 7]
    q = Params(4, 3)
    for e in edges(q):
        spec = admissible_lengths(q, e)
        assert spec.evens == list(range(4, 17, 2)) and spec.odds == []


def test_admissible_rejects_non_edge():
    with pytest.raises(Exception):
        admissible_lengths(Params(3, 2), (0, 5))


# --- split ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "n,k,l,floor1,expected",
    [(4, 2, 15, 3, (7, 8)), (4, 2, 7, 3, (3, 4)), (5, 2, 31, 5, (15, 16))],
)
def test_split_examples(n, k, l, floor1, expected):
    assert split_odd_length(Params(n, k), l, floor1) == expected


def test_split_totality():
    for n in range(3, 12):
        for k in range(2, n, 2):
            p = Params(n, k)
            half = 1 << (n - 1)
            floors = [k + 1] + ([k + 3] if n - 1 >= k + 1 else [])
            for floor1 in floors:
                for l in range(floor1 + 4, p.order, 2):
                    l1, l2 = split_odd_length(p, l, floor1)
                    assert l1 + l2 == l
                    assert l1 % 2 == 1 and floor1 <= l1 <= half - 1
                    assert l2 % 2 == 0 and 4 <= l2 <= half


def test_split_rejects():
    p = Params(4, 2)
    with pytest.raises(InadmissibleLengthError):
        split_odd_length(p, 5, 3)
    with pytest.raises(InadmissibleLengthError):
        split_odd_length(p, 17, 3)
    with pytest.raises(InadmissibleLengthError):
        split_odd_length(Params(4, 3), 9, 3)


# --- folded base ---------------------------------------------------------------------


def test_folded_triangle_on_k4():
    p = Params(2, 2)
    c = base_cycle_folded(p, (0, 3), 3)
    assert validate_cycle(p, c, require_edge=(0, 3), require_length=3) == []


def test_folded_bipartite_rejects_odd():
    with pytest.raises(InadmissibleLengthError):
        base_cycle_folded(Params(3, 3), (0, 1), 5)


def test_folded_five_cycle():
    p = Params(4, 4)
    c = base_cycle_folded(p, (b("0000"), b("0001")), 5)
    assert validate_cycle(p, c, require_edge=(0, 1), require_length=5) == []


def test_folded_needs_k_equal_n():
    with pytest.raises(ParameterError):
        base_cycle_folded(Params(4, 3), (0, 1), 4)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_folded_all_edges_all_lengths(k):
    p = Params(k, k)
    for e in edges(p):
        for l in admissible_lengths(p, e).lengths():
            base_cycle_folded(p, e, l)  # raises if invalid


def test_generator_swap_is_automorphism():
    for k in range(2, 7):
        mask = (1 << k) - 1
        gens = {1 << i for i in range(k)} | {mask}
        for g in gens:
            f = emb._generator_swap(k, g)
            assert sorted(f(x) for x in range(1 << k)) == list(range(1 << k))
            assert {f(h) for h in gens} == gens
            assert f(1) == g
            for x in range(1 << k):
                for h in gens:
                    assert f(x) ^ f(x ^ h) in gens


# --- product constructions -------------------------------------------------------------


def test_extend_two_example():
    p = Params(3, 2)
    base = Cycle((b("000"), b("001"), b("011")), p)
    c = product_extend_two(p, base, (b("000"), b("001")))
    # e' is (001, 011), the edge after e; the detour runs through 101, 111
    assert list(c.vertices) == [b("000"), b("001"), b("101"), b("111"), b("011")]
    assert validate_cycle(p, c, require_edge=(0, 1), require_length=5) == []
    assert crossing_count(c) == crossing_count(base) + 2


def test_extend_two_from_four():
    p = Params(4, 2)
    base = Cycle((0, 1, 3, 2), p)
    c = product_extend_two(p, base, (1, 3))
    assert c.length == 6
    assert validate_cycle(p, c, require_edge=(1, 3)) == []


def test_extend_two_preconditions():
    p = Params(3, 2)
    with pytest.raises(ConstructionError):
        product_extend_two(p, Cycle((0, 1, 5, 4), p), (0, 1))  # spans both halves
    with pytest.raises(ConstructionError):
        product_extend_two(p, Cycle((0, 1, 3), p), (0, 2))  # e not on base


def test_join_in_half():
    p = Params(3, 2)
    base = Cycle((b("000"), b("001"), b("011"), b("010")), p)
    c = product_join(p, base, (0, 1), 4)
    assert validate_cycle(p, c, require_edge=(0, 1), require_length=8) == []
    assert crossing_count(c) == 2


def test_join_crossing_edge():
    p = Params(3, 2)
    base = Cycle((b("000"), b("001"), b("011"), b("010")), p)
    c = product_join(p, base, (b("000"), b("100")), 4)
    assert validate_cycle(p, c, require_edge=(0, 4), require_length=8) == []
    assert crossing_count(c) == 2


def test_join_rejects_bad_l2():
    p = Params(4, 2)
    base = Cycle((0, 1, 3, 2), p)
    with pytest.raises(InadmissibleLengthError):
        product_join(p, base, (0, 1), 10)
    with pytest.raises(InadmissibleLengthError):
        product_join(p, base, (0, 1), 5)


def test_degenerate_quad_on_crossing_edge():
    p = Params(3, 2)
    c = embed_cycle(p, (b("000"), b("100")), 4)
    assert list(c.vertices) == [b("000"), b("100"), b("101"), b("001")]


def test_lift_uses_no_crossing_edges():
    p = Params(5, 2)
    sub = p.sub()
    for l in admissible_lengths(sub, (0, 1)).lengths():
        c = lift(p, embed_cycle(sub, (0, 1), l), 1)
        assert validate_cycle(p, c, require_edge=(16, 17), require_length=l) == []
        assert crossing_count(c) == 0


def test_open_at():
    p = Params(3, 2)
    c = Cycle((0, 1, 3), p)
    assert open_at(c, 0, 1).vertices == (0, 3, 1)
    assert open_at(c, 1, 0).vertices == (1, 3, 0)


# --- embed_cycle ---------------------------------------------------------------


def test_embed_crossing_example():
    p = Params(4, 2)
    c = embed_cycle(p, (b("0000"), b("1000")), 5)
    expected = [b(s) for s in ("0000", "0011", "0001", "1001", "1000")]
    assert same_cycle(c.vertices, expected)
    classes = sorted(str(classify_edge(p, x, y)) for x, y in Cycle(tuple(expected), p).pairs())
    assert classes == sorted(["skip", "E2", "E4", "E1", "E4"])


def test_embed_triangle_example():
    p = Params(3, 2)
    c = embed_cycle(p, (0, 1), 3)
    assert list(c.vertices) == [b("000"), b("001"), b("011")]


def test_embed_inadmissible_carries_spec():
    p = Params(4, 3)
    with pytest.raises(InadmissibleLengthError) as info:
        embed_cycle(p, (b("0000"), b("0111")), 5)
    assert info.value.spec.odd_floor is None
    assert "bipartite" in info.value.reason


def test_embed_high_dimension_edge_has_no_k_plus_1():
    with pytest.raises(InadmissibleLengthError):
        embed_cycle(Params(5, 2), (0, 4), 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_embed_complete(n):
    for k in range(1, n + 1):
        p = Params(n, k)
        for e in edges(p):
            for l in admissible_lengths(p, e).lengths():
                for u, v in ((e.u, e.v), (e.v, e.u)):
                    c = embed_cycle(p, (u, v), l)
                    assert c.vertices[:2] == (u, v)
                    assert validate_cycle(p, c, require_edge=(u, v), require_length=l) == []


def test_embed_deterministic():
    p = Params(5, 4)
    jobs = [(e, l) for e in edges(p) for l in (5, 9, 17, 31, 32) if l in admissible_lengths(p, e)]
    first = [embed_cycle(p, e, l).vertices for e, l in jobs]
    emb._folded_cache.clear()
    second = [embed_cycle(p, e, l).vertices for e, l in jobs]
    assert first == second


@pytest.mark.parametrize("n,k", [(6, 2), (6, 4), (5, 1), (4, 1), (7, 3), (6, 6)])
def test_recursion_depth(monkeypatch, n, k):
    seen = set()
    real = emb._embed

    def spy(p, a, c, l):
        seen.add(p.n)
        return real(p, a, c, l)

    monkeypatch.setattr(emb, "_embed", spy)
    p = Params(n, k)
    embed_cycle(p, (0, 1), p.order)
    base_n = 2 if k == 1 else k
    assert seen == set(range(base_n, n + 1))
    assert len(seen) - 1 == recursion_depth(p)


def test_large_k_guard():
    with pytest.raises(ResourceError):
        embed_cycle(Params(9, 8), (0, 1), 4)


@st.composite
def requests(draw):
    n = draw(st.integers(3, 12))
    k = draw(st.integers(1, min(n, 7)))
    p = Params(n, k)
    u = draw(st.integers(0, p.order - 1))
    g = draw(st.sampled_from(p.generators()))
    spec = admissible_lengths(p, (u, u ^ g))
    l = draw(st.sampled_from(spec.lengths()[:40] + spec.lengths()[-20:]))
    return p, (u, u ^ g), l


@settings(max_examples=150, deadline=None)
@given(requests())
def test_embed_sound_random(req):
    p, e, l = req
    c = embed_cycle(p, e, l)
    assert validate_cycle(p, c, require_edge=e, require_length=l) == []
