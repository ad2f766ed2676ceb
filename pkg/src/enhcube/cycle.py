from __future__ import annotations

from dataclasses import dataclass

from .topology import Params


@dataclass(frozen=True)
class Cycle:
    """Closed vertex sequence; the edge from the last vertex back to the first is implicit."""

    vertices: tuple[int, ...]
    params: Params

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self):
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)

    def pairs(self):
        vs = self.vertices
        for i in range(len(vs)):
            yield vs[i], vs[(i + 1) % len(vs)]

    def has_edge(self, u: int, v: int) -> bool:
        return any({a, b} == {u, v} for a, b in self.pairs())

    def labels(self) -> list[str]:
        return [self.params.label(u) for u in self.vertices]


@dataclass(frozen=True)
class OpenPath:
    vertices: tuple[int, ...]
    params: Params

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def labels(self) -> list[str]:
        return [self.params.label(u) for u in self.vertices]


def open_at(cycle: Cycle, u: int, v: int) -> OpenPath:
    """Delete edge (u, v) from ``cycle``; the resulting path runs from u to v."""
    vs = list(cycle.vertices)
    n = len(vs)
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        if a == u and b == v:
            # walk backwards from u so the path avoids the deleted edge
            return OpenPath([vs[(i - j) % n] for j in range(n)], cycle.params)
        if a == v and b == u:
            return OpenPath([vs[(i + 1 + j) % n] for j in range(n)], cycle.params)
    raise ValueError("edge not on cycle")
