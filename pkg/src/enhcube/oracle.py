"""Brute-force ground truth for Q_{n,k}.

Nothing in here calls the embedder. Adjacency is rebuilt from the raw
definition (one-bit flips plus the complemented low-k suffix) rather than
through :func:`enhcube.topology.neighbors`, so a mistake in the topology
module shows up as a disagreement instead of being inherited.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .cycle import Cycle
from .errors import NotAnEdgeError, ResourceError
from .topology import Edge, Params, classify_edge

BFS_MAX_N = 8
EXACT_MAX_N = 5
EXHAUSTIVE_MAX_N = 4

INF = float("inf")


def adjacency(p: Params) -> list[list[int]]:
    """Materialized adjacency from the definition, for desk-scale n only."""
    if p.n > BFS_MAX_N + 2:
        raise ResourceError(f"refusing to materialize Q_{{{p.n},{p.k}}}")
    size = 1 << p.n
    suffix = (1 << p.k) - 1
    adj = []
    for u in range(size):
        nbrs = set()
        for bit in range(p.n):
            nbrs.add(u ^ (1 << bit))
        nbrs.add(u ^ suffix)
        adj.append(sorted(nbrs))
    return adj


def _guard(p: Params, limit: int, what: str) -> None:
    if p.n > limit:
        raise ResourceError(f"{what} is limited to n <= {limit}, got n={p.n}")


# --- cycle validation ------------------------------------------------------


def validate_cycle(
    p: Params,
    c: Cycle | Sequence[int],
    require_edge: Optional[Edge | tuple[int, int]] = None,
    require_length: Optional[int] = None,
) -> list[str]:
    """Return every violation found; an empty list means the cycle is valid."""
    vs = list(c.vertices if isinstance(c, Cycle) else c)
    problems = []
    if isinstance(c, Cycle) and c.params != p:
        problems.append(f"cycle built for {c.params}, validated against {p}")
    distinct = len(set(vs))
    if distinct < 3:
        problems.append(f"length {distinct} < 3 (distinct vertices)")
    out_of_range = [u for u in vs if not (isinstance(u, int) and 0 <= u < p.order)]
    for u in out_of_range:
        problems.append(f"vertex {u!r} out of range")
    seen = set()
    for u in vs:
        if u in seen:
            problems.append(f"repeated vertex {p.label(u) if u in range(p.order) else u}")
        seen.add(u)
    if not out_of_range and len(vs) >= 2:
        for i in range(len(vs)):
            a, b = vs[i], vs[(i + 1) % len(vs)]
            try:
                classify_edge(p, a, b)
            except NotAnEdgeError:
                problems.append(f"({p.label(a)},{p.label(b)}) is not an edge")
    if require_edge is not None:
        u, v = (require_edge.u, require_edge.v) if isinstance(require_edge, Edge) else require_edge
        n = len(vs)
        if not any({vs[i], vs[(i + 1) % n]} == {u, v} for i in range(n)) or n < 2:
            problems.append(f"required edge ({_lbl(p, u)},{_lbl(p, v)}) not on cycle")
    if require_length is not None and len(vs) != require_length:
        problems.append(f"length {len(vs)} != required {require_length}")
    return problems


def _lbl(p, u):
    return p.label(u) if isinstance(u, int) and 0 <= u < p.order else repr(u)


# --- parity BFS ------------------------------------------------------------


def parity_distances(
    adj: list[list[int]], source: int, banned: Optional[tuple[int, int]] = None
) -> list[list[float]]:
    """Shortest even/odd walk lengths from ``source``: ``dist[v][parity]``.

    BFS over (vertex, parity) states, i.e. over the bipartite double cover.
    ``banned`` removes one undirected edge.
    """
    dist = [[INF, INF] for _ in adj]
    dist[source][0] = 0
    queue = deque([(source, 0)])
    while queue:
        u, par = queue.popleft()
        d = dist[u][par]
        for w in adj[u]:
            if banned is not None and {u, w} == set(banned):
                continue
            q = par ^ 1
            if dist[w][q] == INF:
                dist[w][q] = d + 1
                queue.append((w, q))
    return dist


def odd_girth(p: Params) -> Optional[int]:
    """Length of a shortest odd cycle, or None when Q_{n,k} is bipartite.

    The shortest odd closed walk through any vertex is an odd cycle, so the
    minimum over all sources of the odd return distance is the odd girth.
    """
    _guard(p, BFS_MAX_N, "odd_girth")
    adj = adjacency(p)
    best = INF
    for s in range(len(adj)):
        best = min(best, parity_distances(adj, s)[s][1])
    return None if best == INF else int(best)


def check_bipartite_bfs(p: Params) -> bool:
    """Plain BFS 2-colouring of the whole vertex set."""
    _guard(p, BFS_MAX_N, "check_bipartite_bfs")
    adj = adjacency(p)
    colour = [-1] * len(adj)
    for root in range(len(adj)):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if colour[w] == -1:
                    colour[w] = colour[u] ^ 1
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


# --- shortest odd cycle through an edge -------------------------------------


def _edge_endpoints(p: Params, e) -> tuple[int, int]:
    u, v = (e.u, e.v) if isinstance(e, Edge) else e
    classify_edge(p, u, v)
    return u, v


def odd_cycle_lower_bound(p: Params, e) -> Optional[int]:
    """Walk-based lower bound on the shortest odd cycle through ``e``.

    An odd cycle through (u, v) is the edge plus an even u-v path avoiding it,
    so the shortest even u-v walk in G - e, plus one, bounds it from below.
    """
    _guard(p, BFS_MAX_N, "odd cycle lower bound")
    u, v = _edge_endpoints(p, e)
    d = parity_distances(adjacency(p), u, banned=(u, v))[v][0]
    return None if d == INF else int(d) + 1


def _cycle_of_length(adj, u, v, length) -> Optional[list[int]]:
    """DFS for a simple u..v path on ``length`` vertices avoiding the edge u-v."""
    dist_v = parity_distances(adj, v)
    visited = [False] * len(adj)
    visited[u] = True
    path = [u]

    def extend(cur, left):
        if left == 0:
            return cur == v
        if cur == v:
            return False
        for w in adj[cur]:
            if visited[w] or (cur == u and w == v):
                continue
            if dist_v[w][(left - 1) % 2] > left - 1:
                continue
            visited[w] = True
            path.append(w)
            if extend(w, left - 1):
                return True
            path.pop()
            visited[w] = False
        return False

    return list(path) if extend(u, length - 1) else None


def min_odd_cycle_through_edge(p: Params, e, max_exact_n: int = EXACT_MAX_N) -> Optional[int]:
    """Exact length of a shortest odd simple cycle through ``e`` (None if none exists).

    Starts at the parity-BFS lower bound and runs a simple-cycle DFS at each
    odd length upward.
    """
    _guard(p, BFS_MAX_N, "min_odd_cycle_through_edge bound phase")
    u, v = _edge_endpoints(p, e)
    bound = odd_cycle_lower_bound(p, (u, v))
    if bound is None:
        return None
    _guard(p, max_exact_n, "min_odd_cycle_through_edge exact phase")
    adj = adjacency(p)
    for length in range(max(bound, 3), p.order, 2):
        if _cycle_of_length(adj, u, v, length) is not None:
            return length
    return None


# --- exhaustive spectrum ----------------------------------------------------


@dataclass
class SpectrumResult:
    edge: Edge
    achievable: set[int]
    exhaustive: bool = True
    witnesses: dict[int, tuple[int, ...]] = field(default_factory=dict)


def cycle_length_spectrum_through_edge(
    p: Params, e, max_n: int = EXHAUSTIVE_MAX_N
) -> SpectrumResult:
    """Exact set of lengths of simple cycles through ``e``.

    Enumerates simple u..v paths (u the smaller endpoint, so each cycle is met
    in one orientation only). A branch is cut only when it cannot produce a
    length not already witnessed, which keeps the answer exact.
    """
    _guard(p, max_n, "cycle_length_spectrum_through_edge")
    a, b = _edge_endpoints(p, e)
    u, v = min(a, b), max(a, b)
    edge = Edge(u, v, classify_edge(p, u, v))
    adj = adjacency(p)
    size = len(adj)
    bipartite = check_bipartite_bfs(p)
    unresolved = set(range(3, size + 1))
    if bipartite:
        # u, v adjacent: every u..v path is odd, every cycle through e even
        unresolved = {x for x in unresolved if x % 2 == 0}
    achievable: set[int] = set()
    witnesses: dict[int, tuple[int, ...]] = {}
    visited = [False] * size
    visited[u] = True
    path = [u]

    def free_region(cur):
        """BFS in unvisited vertices from cur: (distance to v, reachable count)."""
        seen = {cur: 0}
        queue = deque([cur])
        dv = None
        while queue:
            x = queue.popleft()
            if x == v and dv is None:
                dv = seen[x]
            for y in adj[x]:
                if y not in seen and not visited[y]:
                    seen[y] = seen[x] + 1
                    queue.append(y)
        return dv, len(seen) - 1

    def walk(cur):
        if not unresolved:
            return
        if cur == v:
            length = len(path)
            if length >= 3 and length not in achievable:
                achievable.add(length)
                witnesses[length] = tuple(path)
                unresolved.discard(length)
            return
        dv, reach = free_region(cur)
        if dv is None:
            return
        lo = len(path) + dv
        hi = len(path) + reach
        if not any(lo <= x <= hi for x in unresolved):
            return
        for w in adj[cur]:
            if visited[w] or (cur == u and w == v):
                continue
            visited[w] = True
            path.append(w)
            walk(w)
            path.pop()
            visited[w] = False

    walk(u)
    return SpectrumResult(edge, achievable, True, witnesses)


def all_edges(p: Params) -> Iterable[Edge]:
    adj = adjacency(p)
    for u in range(len(adj)):
        for w in adj[u]:
            if u < w:
                yield Edge(u, w, classify_edge(p, u, w))
