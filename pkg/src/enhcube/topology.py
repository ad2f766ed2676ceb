"""Implicit model of the enhanced hypercube Q_{n,k}.

Vertices are plain ints in ``[0, 2**n)``. Bit 1 is the least significant
bit, so the label ``u_n ... u_2 u_1`` reads most-significant first, the skip
mask is the constant ``2**k - 1`` and the product's crossing dimension is
bit n. Nothing here materializes adjacency.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import DecompositionUnavailableError, NotAnEdgeError, ParameterError

HARD_MAX_N = 30
MAX_N_ENV = "ENHCUBE_MAX_N"


def max_n() -> int:
    """Global size cap; ENHCUBE_MAX_N may lower it but never raise it past 30."""
    raw = os.environ.get(MAX_N_ENV)
    if not raw:
        return HARD_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"{MAX_N_ENV}={raw!r} is not an integer") from None
    return max(1, min(value, HARD_MAX_N))


@dataclass(frozen=True, order=True)
class Params:
    n: int
    k: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.k, int):
            raise ParameterError(f"n and k must be integers, got {self.n!r}, {self.k!r}")
        if self.n < 1:
            raise ParameterError(f"n must be positive, got {self.n}")
        if not 1 <= self.k <= self.n:
            raise ParameterError(f"k must satisfy 1 <= k <= n, got n={self.n}, k={self.k}")
        cap = max_n()
        if self.n > cap:
            raise ParameterError(f"n={self.n} exceeds the size cap {cap}")

    @property
    def order(self) -> int:
        return 1 << self.n

    @property
    def skip_mask(self) -> int:
        return (1 << self.k) - 1

    @property
    def top_bit(self) -> int:
        return 1 << (self.n - 1)

    def sub(self) -> "Params":
        """Parameters of each half in Q_{n,k} = K2 x Q_{n-1,k}."""
        if self.k >= self.n:
            raise DecompositionUnavailableError(
                f"Q_{{{self.n},{self.k}}} is the folded hypercube FQ_{self.k}; no product split"
            )
        return Params(self.n - 1, self.k)

    def generators(self) -> tuple[int, ...]:
        """Distinct XOR masks generating the edge set, ascending."""
        gens = {1 << i for i in range(self.n)}
        gens.add(self.skip_mask)
        return tuple(sorted(gens))

    def label(self, u: int) -> str:
        return format(u, f"0{self.n}b")

    def parse(self, text: str) -> int:
        """Parse a vertex given as an n-character binary string (or ``0b``/decimal int)."""
        text = text.strip()
        try:
            if len(text) == self.n and set(text) <= {"0", "1"}:
                u = int(text, 2)
            else:
                u = int(text, 0)
        except ValueError:
            raise ParameterError(f"cannot parse vertex {text!r} for n={self.n}") from None
        check_vertex(self, u)
        return u


def check_vertex(p: Params, u: int) -> None:
    if not isinstance(u, int) or isinstance(u, bool) or not 0 <= u < p.order:
        raise ParameterError(f"vertex {u!r} out of range for n={p.n}")


@dataclass(frozen=True, order=True)
class EdgeClass:
    """``dimension`` is i for an E_i edge, ``None`` for a skip."""

    dimension: Optional[int]

    @property
    def is_skip(self) -> bool:
        return self.dimension is None

    def __str__(self):
        return "skip" if self.dimension is None else f"E{self.dimension}"


SKIP = EdgeClass(None)


def dimension(i: int) -> EdgeClass:
    return EdgeClass(i)


@dataclass(frozen=True, order=True)
class Edge:
    u: int
    v: int
    cls: EdgeClass

    def endpoints(self) -> tuple[int, int]:
        return self.u, self.v

    def render(self, p: Params) -> str:
        return f"{p.label(self.u)},{p.label(self.v)}"


def make_edge(p: Params, u: int, v: int) -> Edge:
    """Classify (u, v) and store it in canonical (ascending) order."""
    cls = classify_edge(p, u, v)
    if u > v:
        u, v = v, u
    return Edge(u, v, cls)


def neighbors(p: Params, u: int) -> list[int]:
    check_vertex(p, u)
    return sorted({u ^ g for g in p.generators()})


def skip_of(p: Params, u: int) -> int:
    check_vertex(p, u)
    return u ^ p.skip_mask


def classify_edge(p: Params, u: int, v: int) -> EdgeClass:
    check_vertex(p, u)
    check_vertex(p, v)
    diff = u ^ v
    if diff == 0:
        raise NotAnEdgeError(f"{p.label(u)} and {p.label(v)} are the same vertex")
    if diff & (diff - 1) == 0:
        # covers k = 1, where the skip mask is 2^0
        return dimension(diff.bit_length())
    if diff == p.skip_mask:
        return SKIP
    raise NotAnEdgeError(f"({p.label(u)}, {p.label(v)}) is not an edge of Q_{{{p.n},{p.k}}}")


def is_edge(p: Params, u: int, v: int) -> bool:
    try:
        classify_edge(p, u, v)
    except NotAnEdgeError:
        return False
    return True


def is_bipartite(p: Params) -> bool:
    # Skips flip k bits, so they preserve the Q_n bipartition iff k is odd.
    return p.k % 2 == 1


def decompose(p: Params, u: int) -> tuple[int, int]:
    """Return (side, projection) of u in Q_{n,k} = K2 x Q_{n-1,k}."""
    check_vertex(p, u)
    p.sub()
    side = u >> (p.n - 1)
    return side, u & (p.top_bit - 1)


def vertices(p: Params) -> range:
    return range(p.order)


def edges(p: Params) -> Iterator[Edge]:
    """All edges in canonical order: ascending (u, v)."""
    gens = p.generators()
    for u in range(p.order):
        for v in sorted(u ^ g for g in gens):
            if u < v:
                yield Edge(u, v, classify_edge(p, u, v))


def edge_count(p: Params) -> int:
    return len(p.generators()) << (p.n - 1)
