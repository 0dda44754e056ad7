"""Closure of a partial coloring.

Stage by stage, every uncolored vertex that can take a color ``b`` with
``opposite_b >= same_b + uncolored`` (counted against the coloring at the
start of the stage) is colored at once.  Such a vertex stays unfriendly
under any later extension.  The loop stops when a stage finds nothing.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Coloring, check_coloring, tally
from .graph import FiniteGraph


@dataclass(frozen=True)
class Stage:
    index: int
    vertices: tuple[int, ...]
    colors: dict[int, int] = field(compare=False)


@dataclass(frozen=True)
class ClosureTrace:
    stages: tuple[Stage, ...]
    final_domain: frozenset[int]

    def lines(self) -> list[str]:
        """Export as ``stage vertex color`` rows."""
        return [f"{s.index} {v} {s.colors[v]}" for s in self.stages for v in s.vertices]


def qualifying_color(g: FiniteGraph, c: Coloring, v: int) -> int | None:
    """The color ``v`` can safely take under ``c``, or None.  Ties go to 0."""
    for b in (0, 1):
        t = tally(g, c, v, b)
        if t.opposite >= t.same + t.uncolored:
            return b
    return None


def close(g: FiniteGraph, c: Coloring) -> tuple[dict[int, int], ClosureTrace]:
    cur = check_coloring(g, c)
    stages = []
    # a vertex can only start to qualify after one of its neighbors is colored,
    # or if it qualifies right away (e.g. isolated vertices)
    candidates = [v for v in range(g.n) if v not in cur]
    while candidates:
        found = {}
        for v in candidates:
            b = qualifying_color(g, cur, v)
            if b is not None:
                found[v] = b
        if not found:
            break
        cur.update(found)
        stages.append(Stage(len(stages), tuple(sorted(found)), found))
        touched = {u for v in found for u in g.neighbors(v)}
        candidates = sorted(u for u in touched if u not in cur)
    return cur, ClosureTrace(tuple(stages), frozenset(cur))


def is_closed(g: FiniteGraph, c: Coloring) -> bool:
    closed, trace = close(g, c)
    return not trace.stages
