"""Partial colorings and the unfriendliness predicates.

A partial coloring is a plain ``dict`` from vertex to color (0 or 1); its
keys are the domain.  Vertices missing from the dict are uncolored.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .exceptions import PartialDomainError, UnfriendlyError
from .graph import FiniteGraph

Coloring = Mapping[int, int]


class NeighborTally(NamedTuple):
    same: int
    opposite: int
    uncolored: int


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violators: tuple[int, ...]

    def __bool__(self):
        return self.ok


def _check_vertex(g: FiniteGraph, v):
    if not g.has_vertex(v):
        raise UnfriendlyError(f"{v!r} is not a vertex of the graph (n={g.n})")


def _require_total(g: FiniteGraph, c: Coloring):
    if len(c) != g.n or any(not g.has_vertex(v) for v in c):
        raise PartialDomainError(
            f"coloring covers {len(c)} of {g.n} vertices; a total coloring is required"
        )


def tally(g: FiniteGraph, c: Coloring, v: int, color: int) -> NeighborTally:
    """Count ``v``'s neighbors as same / opposite / uncolored relative to ``color``."""
    _check_vertex(g, v)
    same = opposite = uncolored = 0
    for u in g.neighbors(v):
        cu = c.get(u)
        if cu is None:
            uncolored += 1
        elif cu == color:
            same += 1
        else:
            opposite += 1
    return NeighborTally(same, opposite, uncolored)


def is_unfriendly_total(g: FiniteGraph, c: Coloring) -> Verdict:
    """Check that a total coloring is an unfriendly partition.

    Violators (vertices with more same-colored than opposite-colored
    neighbors) are listed in ascending order.
    """
    _require_total(g, c)
    bad = []
    for v in range(g.n):
        t = tally(g, c, v, c[v])
        if t.opposite < t.same:
            bad.append(v)
    return Verdict(not bad, tuple(bad))


def is_safe_unfriendly_at(g: FiniteGraph, c: Coloring, v: int) -> bool:
    """True iff ``c`` stays unfriendly at ``v`` under every extension.

    Uncolored neighbors are counted against ``v``: the condition is
    ``opposite >= same + uncolored``.
    """
    if v not in c:
        raise UnfriendlyError(f"vertex {v!r} is not in the coloring's domain")
    t = tally(g, c, v, c[v])
    return t.opposite >= t.same + t.uncolored


def is_unfriendly_partial(g: FiniteGraph, c: Coloring) -> Verdict:
    """Safe unfriendliness at every vertex of the domain."""
    bad = tuple(v for v in sorted(c) if not is_safe_unfriendly_at(g, c, v))
    return Verdict(not bad, bad)


def cross_edge_count(g: FiniteGraph, c: Coloring) -> int:
    _require_total(g, c)
    return sum(1 for u, v in g.edges() if c[u] != c[v])


def check_coloring(g: FiniteGraph, c: Coloring) -> dict[int, int]:
    """Validate a partial coloring against ``g`` and return it as a dict."""
    out = {}
    for v, col in c.items():
        _check_vertex(g, v)
        if col not in (0, 1):
            raise UnfriendlyError(f"color of {v} must be 0 or 1, got {col!r}")
        out[v] = int(col)
    return out


def restrict(c: Coloring, vertices) -> dict[int, int]:
    return {v: c[v] for v in vertices if v in c}
