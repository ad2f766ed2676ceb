"""Explicit cycles of every guaranteed length through any edge of Q_{n,k}.

The recursion follows Q_{n,k} = K2 x Q_{n-1,k} down to one of two bases:
the 4-cycle Q_{2,1} (when k = 1) or the folded hypercube FQ_k (when n = k).
A cycle of a half is lifted by OR-ing in the side bit; cycles that are too
long for a half are assembled from pieces in both halves joined by two
crossing (dimension-n) edges.

Internally cycles are lists of ints that start with the requested edge
``[a, b, ...]``; the public functions wrap them in :class:`Cycle`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional

from .cycle import Cycle, open_at
from .errors import ConstructionError, InadmissibleLengthError, ParameterError, ResourceError
from .oracle import validate_cycle
from .topology import Edge, Params, classify_edge, is_bipartite

FOLDED_SEARCH_MAX_K = 7


@dataclass(frozen=True)
class LengthSpec:
    """Lengths of cycles guaranteed through one edge.

    Even lengths run over [4, even_max]; odd lengths over
    [odd_floor, odd_max] when ``odd_floor`` is set.
    """

    even_max: int
    odd_floor: Optional[int]
    odd_max: int
    even_min: int = 4

    @property
    def evens(self) -> list[int]:
        return list(range(self.even_min, self.even_max + 1, 2))

    @property
    def odds(self) -> list[int]:
        if self.odd_floor is None:
            return []
        return list(range(self.odd_floor, self.odd_max + 1, 2))

    def lengths(self) -> list[int]:
        return sorted(self.evens + self.odds)

    def __contains__(self, length: int) -> bool:
        if length % 2 == 0:
            return self.even_min <= length <= self.even_max
        return self.odd_floor is not None and self.odd_floor <= length <= self.odd_max

    def describe(self) -> str:
        odd = "none" if self.odd_floor is None else f"{self.odd_floor}..{self.odd_max}"
        return f"even {self.even_min}..{self.even_max}, odd {odd}"


def _endpoints(p: Params, e) -> tuple[int, int]:
    u, v = (e.u, e.v) if isinstance(e, Edge) else e
    classify_edge(p, u, v)
    return u, v


def _odd_floor(p: Params, u: int, v: int) -> Optional[int]:
    if is_bipartite(p):
        return None
    cls = classify_edge(p, u, v)
    if cls.dimension is not None and cls.dimension > p.k:
        return p.k + 3
    return p.k + 1


def admissible_lengths(p: Params, e) -> LengthSpec:
    if p.n < 2:
        raise ParameterError("Q_{1,1} has no cycles")
    u, v = _endpoints(p, e)
    return LengthSpec(even_max=p.order, odd_floor=_odd_floor(p, u, v), odd_max=p.order - 1)


def split_odd_length(p: Params, l: int, floor1: int) -> tuple[int, int]:
    """Split odd ``l`` into (odd l1 >= floor1, even l2 in [4, 2^(n-1)]), smallest l1 first."""
    half = p.top_bit
    if p.k % 2 or l % 2 == 0 or floor1 % 2 == 0:
        raise InadmissibleLengthError(f"cannot split l={l} with floor {floor1} for k={p.k}")
    if not floor1 + 4 <= l <= p.order - 1:
        raise InadmissibleLengthError(
            f"l={l} outside [{floor1 + 4}, {p.order - 1}]; no split for n={p.n}"
        )
    l2 = min(half, l - floor1)
    l1 = l - l2
    if not (floor1 <= l1 <= half - 1 and 4 <= l2 <= half):
        raise InadmissibleLengthError(f"no split of {l} into halves of Q_{{{p.n},{p.k}}}")
    return l1, l2


def _orient(cycle: list[int], a: int, b: int) -> list[int]:
    """Rotate/reflect so the cycle reads [a, b, ...]."""
    i = cycle.index(a)
    n = len(cycle)
    if cycle[(i + 1) % n] == b:
        return cycle[i:] + cycle[:i]
    if cycle[(i - 1) % n] == b:
        return [cycle[(i - j) % n] for j in range(n)]
    raise ConstructionError("edge not on cycle")


# --- folded hypercube base -------------------------------------------------

_folded_cache: dict[tuple[int, int], tuple[int, ...]] = {}
_folded_lock = threading.Lock()


def _folded_search(k: int, l: int) -> tuple[int, ...]:
    """Bounded DFS for an l-cycle through (0, 1) in FQ_k, starting [0, 1, ...]."""
    size = 1 << k
    gens = sorted({1 << i for i in range(k)} | {size - 1})
    adj = [[u ^ g for g in gens] for u in range(size)]
    # parity distances to vertex 0 for remaining-length pruning
    dist = [[None, None] for _ in range(size)]
    dist[0][0] = 0
    frontier = [(0, 0)]
    while frontier:
        nxt = []
        for u, par in frontier:
            for w in adj[u]:
                if dist[w][par ^ 1] is None:
                    dist[w][par ^ 1] = dist[u][par] + 1
                    nxt.append((w, par ^ 1))
        frontier = nxt

    visited = [False] * size
    visited[0] = visited[1] = True
    path = [0, 1]
    free_deg = [len(adj[u]) for u in range(size)]
    for w in adj[0] + adj[1]:
        free_deg[w] -= 1

    def extend(cur, left):
        # left = edges still to walk, the last one being the return to 0
        if left == 1:
            return 0 in adj[cur]
        options = []
        for idx, w in enumerate(adj[cur]):
            if visited[w]:
                continue
            d = dist[w][(left - 1) % 2]
            if d is None or d > left - 1:
                continue
            options.append((free_deg[w], idx, w))
        # fewest onward options first; generator order breaks ties
        options.sort()
        for _, _, w in options:
            visited[w] = True
            path.append(w)
            for x in adj[w]:
                free_deg[x] -= 1
            if extend(w, left - 1):
                return True
            for x in adj[w]:
                free_deg[x] += 1
            path.pop()
            visited[w] = False
        return False

    if not extend(1, l - 1):
        raise ConstructionError(f"no {l}-cycle found through (0,1) in FQ_{k}")
    return tuple(path)


def _grow_by_two(k: int, cycle: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """Swap some cycle edge (x, y) other than (0, 1) for the detour x, x^g, y^g, y.

    In a Cayley graph of an abelian group x^g and y^g are always adjacent, so
    the only requirement is that both are off the cycle. Candidates are
    scored by how many free neighbours the two new vertices keep, most
    constrained first, to avoid stranding vertices near Hamiltonian lengths.
    """
    size = 1 << k
    gens = sorted({1 << i for i in range(k)} | {size - 1})
    on = set(cycle)
    best = None
    for i in range(1, len(cycle)):
        x, y = cycle[i], cycle[(i + 1) % len(cycle)]
        for g in gens:
            xg, yg = x ^ g, y ^ g
            if xg in on or yg in on:
                continue
            score = sum(1 for h in gens if xg ^ h not in on) + sum(
                1 for h in gens if yg ^ h not in on
            )
            if best is None or score < best[0]:
                best = (score, i, g)
    if best is None:
        return None
    _, i, g = best
    x, y = cycle[i], cycle[(i + 1) % len(cycle)]
    return cycle[: i + 1] + (x ^ g, y ^ g) + cycle[i + 1 :]


def _folded_template(k: int, l: int) -> tuple[int, ...]:
    key = (k, l)
    found = _folded_cache.get(key)
    if found is None:
        shorter = l - 2
        if shorter >= 3 and (shorter % 2 == 0 or shorter >= k + 1) and (shorter >= 4 or k == 2):
            found = _grow_by_two(k, _folded_template(k, shorter))
        if found is None:
            found = _folded_search(k, l)
        with _folded_lock:
            _folded_cache.setdefault(key, found)
    return found


def _generator_swap(k: int, g: int):
    """Linear automorphism of FQ_k exchanging generators 1 and g.

    The k+1 generators (unit vectors and the all-ones word) sum to zero and
    any k of them are a basis, so every permutation of them is linear.
    """
    mask = (1 << k) - 1
    if g == 1:
        return lambda x: x
    if g == mask:
        return lambda x: (x & ~1) ^ (mask if x & 1 else 0)
    j = g.bit_length() - 1

    def swap(x):
        lo, hi = x & 1, (x >> j) & 1
        if lo == hi:
            return x
        return x ^ 1 ^ g

    return swap


def _folded(p: Params, a: int, b: int, l: int) -> list[int]:
    k = p.k
    if k > FOLDED_SEARCH_MAX_K:
        raise ResourceError(f"folded base search is limited to k <= {FOLDED_SEARCH_MAX_K}")
    spec = admissible_lengths(p, (a, b))
    if l not in spec:
        raise InadmissibleLengthError(
            f"FQ_{k}: length {l} not admissible ({spec.describe()})", spec, _reason(p, a, b, l)
        )
    template = _folded_template(k, l)
    swap = _generator_swap(k, a ^ b)
    return [a ^ swap(x) for x in template]


def base_cycle_folded(p: Params, e, l: int) -> Cycle:
    """Cycle of length l through e in the folded hypercube FQ_k (requires k = n)."""
    if p.k != p.n or p.k < 2:
        raise ParameterError(f"folded base needs 2 <= k = n, got n={p.n}, k={p.k}")
    a, b = _endpoints(p, e)
    return _checked(p, _folded(p, a, b, l), (a, b), l)


# --- product constructions -------------------------------------------------


def _lift(cycle, side_bit):
    return [w | side_bit for w in cycle]


def _join(p: Params, c0: list[int], side: int, l2: int) -> list[int]:
    """Splice a second-half piece into c0 = [a, b, c, ...] in place of edge (b, c).

    c0 lives in the half selected by ``side`` (0 or the top bit). With l2 = 2
    the detour is the quad b, b', c', c; otherwise it is an l2-cycle through
    (b', c') in the other half with that edge deleted.
    """
    sub = p.sub()
    mask = p.top_bit - 1
    other = side ^ p.top_bit
    b0, c0_ = c0[1] & mask, c0[2] & mask
    if l2 == 2:
        detour = [b0, c0_]
    else:
        c1 = _embed(sub, b0, c0_, l2)
        detour = [c1[0]] + c1[:0:-1]
    return c0[:2] + _lift(detour, other) + c0[2:]


def _crossing(p: Params, x0: int, l1: int, l2: int) -> list[int]:
    """Cycle [x, x|T, ..., v|T, v, ...] through the crossing edge at x0 (side 0)."""
    sub = p.sub()
    top = p.top_bit
    v0 = x0 ^ 1
    c0 = [x0, v0] if l1 == 2 else _embed(sub, x0, v0, l1)
    if l2 == 2:
        p1 = [x0, v0]
    else:
        c1 = _embed(sub, x0, v0, l2)
        p1 = [c1[0]] + c1[:0:-1]
    return [x0] + _lift(p1, top) + c0[1:]


def _embed(p: Params, a: int, b: int, l: int) -> list[int]:
    if p.k == p.n:
        return _folded(p, a, b, l)
    if p.n == 2:
        # Q_{2,1} is the 4-cycle
        if l != 4:
            raise InadmissibleLengthError(f"Q_{{2,1}} only has a 4-cycle, asked for {l}")
        h = 3 ^ (a ^ b)
        return [a, b, b ^ h, a ^ h]
    top = p.top_bit
    half = top
    sub = p.sub()
    if a ^ b == top:
        x0 = a & (top - 1)
        if l % 2 == 0:
            if l == 4:
                l1, l2 = 2, 2
            elif l <= half + 2:
                l1, l2 = l - 2, 2
            else:
                l1, l2 = l - half, half
        elif l == p.k + 3:
            l1, l2 = p.k + 1, 2
        else:
            l1, l2 = split_odd_length(p, l, p.k + 1)
        return _orient(_crossing(p, x0, l1, l2), a, b)

    side = a & top
    a0, b0 = a & (top - 1), b & (top - 1)
    sub_spec = admissible_lengths(sub, (a0, b0))
    if l in sub_spec:
        return _lift(_embed(sub, a0, b0, l), side)
    if l % 2 == 0:
        if l == half + 2:
            l1, l2 = half, 2
        else:
            l1, l2 = l - half, half
    else:
        floor1 = sub_spec.odd_floor
        if l - floor1 == 2:
            l1, l2 = floor1, 2
        else:
            l1, l2 = split_odd_length(p, l, floor1)
    c0 = _lift(_embed(sub, a0, b0, l1), side)
    return _join(p, c0, side, l2)


def _reason(p: Params, a: int, b: int, l: int) -> str:
    if l % 2 and is_bipartite(p):
        return f"Q_{{{p.n},{p.k}}} is bipartite since k={p.k} is odd; it has no odd cycles"
    cls = classify_edge(p, a, b)
    if l % 2 and cls.dimension is not None and cls.dimension > p.k and l < p.k + 3:
        return (
            f"edge class {cls} (dimension > k) lies on no odd cycle shorter than k+3={p.k + 3}"
        )
    return f"length {l} outside the guaranteed range"


def _checked(p: Params, vs: list[int], edge: tuple[int, int], l: int) -> Cycle:
    problems = validate_cycle(p, vs, require_edge=edge, require_length=l)
    if problems:
        raise ConstructionError(f"internal construction failure: {'; '.join(problems)}")
    return Cycle(tuple(vs), p)


def embed_cycle(p: Params, e, l: int) -> Cycle:
    """Cycle of length ``l`` through edge ``e`` of Q_{n,k}, starting at e's endpoints.

    Raises InadmissibleLengthError (carrying the LengthSpec) when ``l`` is not
    guaranteed for ``e``. Every returned cycle has passed ``validate_cycle``.
    """
    a, b = _endpoints(p, e)
    if p.n < 2:
        raise ParameterError("Q_{1,1} has no cycles")
    spec = admissible_lengths(p, (a, b))
    if l not in spec:
        raise InadmissibleLengthError(
            f"length {l} not admissible for edge ({p.label(a)},{p.label(b)}) "
            f"of Q_{{{p.n},{p.k}}}: {spec.describe()}; {_reason(p, a, b, l)}",
            spec,
            _reason(p, a, b, l),
        )
    return _checked(p, _embed(p, a, b, l), (a, b), l)


def recursion_depth(p: Params) -> int:
    """Product levels above the base: n - k, or n - 2 for k = 1 (base Q_{2,1})."""
    return p.n - 2 if p.k == 1 else p.n - p.k


# --- public forms of the product lemma ---------------------------------------


def _side_of(p: Params, vs) -> int:
    sides = {w & p.top_bit for w in vs}
    if len(sides) != 1:
        raise ConstructionError("base cycle is not confined to one half")
    return sides.pop()


def _base_for(p: Params, base: Cycle, e) -> tuple[list[int], int, int, int]:
    """Check preconditions; return (oriented base, side, a, b)."""
    p.sub()
    if base.params != p:
        raise ConstructionError(f"base cycle belongs to {base.params}, not {p}")
    if validate_cycle(p, base):
        raise ConstructionError("base is not a valid cycle")
    a, b = _endpoints(p, e)
    side = _side_of(p, base.vertices)
    return list(base.vertices), side, a, b


def product_extend_two(p: Params, base: Cycle, e) -> Cycle:
    """Replace the edge following e on ``base`` by a quad through the other half (+2)."""
    vs, side, a, b = _base_for(p, base, e)
    if not base.has_edge(a, b):
        raise ConstructionError("edge e is not on the base cycle")
    # keep the base's own traversal direction
    i = vs.index(a)
    if vs[(i + 1) % len(vs)] != b:
        a, b = b, a
    oriented = _orient(vs, a, b)
    return _checked(p, _join(p, oriented, side, 2), (a, b), len(vs) + 2)


def product_join(p: Params, base: Cycle, e, l2: int) -> Cycle:
    """Join ``base`` with an l2-cycle of the other half through two crossing edges.

    For e inside ``base``'s half, the mirrored edge is the one after e on the
    base. For a crossing e = (x, x'), the base must pass through x and the
    edge leaving x along the base is the one replaced.
    """
    vs, side, a, b = _base_for(p, base, e)
    if l2 % 2 or not 4 <= l2 <= p.top_bit:
        raise InadmissibleLengthError(f"l2={l2} must be even in [4, {p.top_bit}]")
    top = p.top_bit
    if a ^ b == top:
        x = a if a & top == side else b
        if x not in vs:
            raise ConstructionError("base cycle does not pass the crossing edge's endpoint")
        i = vs.index(x)
        v = vs[(i + 1) % len(vs)]
        oriented = _orient(vs, x, v)
        sub = p.sub()
        mask = top - 1
        c1 = _embed(sub, x & mask, v & mask, l2)
        p1 = _lift([c1[0]] + c1[:0:-1], side ^ top)
        out = [x] + p1 + oriented[1:]
        return _checked(p, _orient(out, a, b), (a, b), len(vs) + l2)
    if not base.has_edge(a, b):
        raise ConstructionError("edge e is not on the base cycle")
    i = vs.index(a)
    if vs[(i + 1) % len(vs)] != b:
        a, b = b, a
    oriented = _orient(vs, a, b)
    return _checked(p, _join(p, oriented, side, l2), (a, b), len(vs) + l2)


def lift(p: Params, c: Cycle, side: int) -> Cycle:
    """Embed a cycle of Q_{n-1,k} into the given half (0 or 1) of Q_{n,k}."""
    sub = p.sub()
    if c.params != sub:
        raise ConstructionError(f"cycle belongs to {c.params}, expected {sub}")
    return Cycle(tuple(_lift(list(c.vertices), p.top_bit if side else 0)), p)


__all__ = [
    "LengthSpec",
    "admissible_lengths",
    "base_cycle_folded",
    "embed_cycle",
    "lift",
    "open_at",
    "product_extend_two",
    "product_join",
    "recursion_depth",
    "split_odd_length",
]
