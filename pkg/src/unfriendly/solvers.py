"""Unfriendly partitions of finite graphs, and a compactness-style prefix
extractor for locally finite lazy graphs.

A coloring maximizing the number of bichromatic edges is unfriendly: if some
vertex had more same-colored than opposite-colored neighbors, flipping it
would cut more edges.  :func:`solve_exact` finds such a maximizer by
enumeration, :func:`solve_local` runs the flip argument as an algorithm.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

import numpy as np

from .coloring import Coloring, cross_edge_count, is_unfriendly_total, tally
from .exceptions import (
    ExhaustiveBoundError,
    NoCommonExtension,
    PartialDomainError,
    PreconditionError,
)
from .graph import DEFAULT_BUDGET, Ball, FiniteGraph, LazyGraph, truncate

logger = logging.getLogger(__name__)

EXHAUSTIVE_BOUND = 20
SOLUTION_CAP = 10_000


@dataclass(frozen=True)
class SolveReport:
    coloring: dict[int, int]
    cross_edges: int
    method: str
    work: int
    verified: bool

    def stats_line(self) -> str:
        return f"{self.method} {self.cross_edges} {self.work} {str(self.verified).lower()}"


def _report(g, coloring, method, work):
    return SolveReport(
        coloring, cross_edge_count(g, coloring), method, work, is_unfriendly_total(g, coloring).ok
    )


def _vertex_bits(n: int, free: int) -> np.ndarray:
    """Row ``i`` holds vertex ``i``'s color over all ``2**free`` codes.

    The last ``free`` vertices take the code's bits, most significant first,
    so code order is lexicographic order of color vectors.  Leading vertices
    are fixed to 0.
    """
    codes = np.arange(1 << free, dtype=np.uint32)
    bits = np.zeros((n, codes.size), dtype=np.uint8)
    for i in range(n - free, n):
        bits[i] = (codes >> (n - 1 - i)) & 1
    return bits


def solve_exact(g: FiniteGraph, bound: int = EXHAUSTIVE_BOUND) -> SolveReport:
    """Max-cut by enumeration; ties go to the lexicographically least vector.

    Vertex 0 is pinned to color 0 (complementing preserves the cut), so
    ``2**(n-1)`` colorings are examined.
    """
    if g.n > bound:
        raise ExhaustiveBoundError(
            f"n={g.n} exceeds the exhaustive bound {bound}; use solve_local instead"
        )
    if g.n == 0:
        return SolveReport({}, 0, "exact", 0, True)
    bits = _vertex_bits(g.n, g.n - 1)
    cut = np.zeros(bits.shape[1], dtype=np.int32)
    for u, v in g.edges():
        cut += bits[u] ^ bits[v]
    best = int(np.argmax(cut))
    coloring = {v: int(bits[v, best]) for v in range(g.n)}
    return _report(g, coloring, "exact", bits.shape[1])


def solve_local(
    g: FiniteGraph, start: Coloring, order: str = "lowest", seed: int | None = None
) -> SolveReport:
    """Flip vertices with more same-colored than opposite-colored neighbors.

    Each flip raises the cut by at least one, so at most ``m`` flips happen.
    ``order`` is ``"lowest"`` (lowest-index violator first) or ``"random"``
    (seeded uniform choice among violators).
    """
    if order not in ("lowest", "random"):
        raise ValueError(f"unknown flip order {order!r}")
    if len(start) != g.n:
        raise PartialDomainError("solve_local needs a total start coloring")
    c = {v: int(start[v]) for v in range(g.n)}
    # excess[v] = same - opposite
    excess = []
    for v in range(g.n):
        t = tally(g, c, v, c[v])
        excess.append(t.same - t.opposite)
    rng = random.Random(seed)
    flips = 0
    while True:
        bad = [v for v in range(g.n) if excess[v] > 0]
        if not bad:
            break
        v = bad[0] if order == "lowest" else rng.choice(bad)
        c[v] = 1 - c[v]
        excess[v] = -excess[v]
        for u in g.neighbors(v):
            excess[u] += 2 if c[u] == c[v] else -2
        flips += 1
    return _report(g, c, f"local-{order}", flips)


def all_unfriendly(g: FiniteGraph) -> np.ndarray:
    """Every unfriendly partition of ``g`` as rows of a 0/1 matrix, in
    lexicographic order.  Exponential; intended for ``n <= 20``."""
    if g.n == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    bits = _vertex_bits(g.n, g.n)
    ok = np.ones(bits.shape[1], dtype=bool)
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if not nbrs:
            continue
        same = np.zeros(bits.shape[1], dtype=np.int16)
        for u in nbrs:
            same += bits[u] == bits[v]
        ok &= 2 * same <= len(nbrs)
    return bits[:, ok].T.copy()


@dataclass
class LevelTower:
    levels: list[Ball]
    solutions: list[list[dict[int, int]]]
    sampled: list[bool]
    stable_prefix: dict[int, int]
    deepest_consistent: int
    candidates: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def inner(self) -> Ball:
        return self.levels[0]

    def prefix_violations(self) -> list[int]:
        """Interior vertices of the inner ball where the prefix has
        ``opposite < same``, measured in the largest level."""
        big = self.levels[-1]
        idx = big.index
        local = {idx[v]: col for v, col in self.stable_prefix.items()}
        bad = []
        for v in self.inner.interior:
            t = tally(big.graph, local, idx[v], self.stable_prefix[v])
            if t.opposite < t.same:
                bad.append(v)
        return bad


def _level_solutions(ball, inner, candidates, bound, cap, samples, rng):
    g = ball.graph
    if g.n <= bound:
        rows = all_unfriendly(g)
        if candidates:
            idx = ball.index
            cols = [idx[v] for v in inner]
            keep = [i for i, row in enumerate(rows[:, cols].tolist()) if tuple(row) in candidates]
            rows = rows[keep]
        sampled = len(rows) > cap
        if sampled:
            keep = sorted(rng.sample(range(len(rows)), cap))
            rows = rows[keep]
        sols = [{ball.vertices[i]: int(col) for i, col in enumerate(row)} for row in rows]
        return sols, sampled
    # too large to enumerate: seeded local search from starts that agree with
    # the surviving prefixes on the inner ball
    idx = ball.index
    pool = sorted(candidates) or [None]
    seen = set()
    sols = []
    for k in range(samples):
        start = {i: rng.randrange(2) for i in range(g.n)}
        prefix = pool[k % len(pool)]
        if prefix is not None:
            for v, col in zip(inner, prefix):
                start[idx[v]] = col
        rep = solve_local(g, start, "random", rng.randrange(1 << 30))
        key = tuple(rep.coloring[i] for i in range(g.n))
        if key not in seen:
            seen.add(key)
            sols.append({ball.vertices[i]: col for i, col in enumerate(key)})
        if len(sols) >= cap:
            break
    return sols, True


def limit_partition(
    g: LazyGraph,
    root: int,
    levels: int,
    inner_radius: int,
    budget: int = DEFAULT_BUDGET,
    bound: int = 16,
    cap: int = SOLUTION_CAP,
    samples: int = 500,
    seed: int = 0,
) -> LevelTower:
    """Coloring of the radius-``inner_radius`` ball that extends to a recorded
    unfriendly partition of every ball of radius ``inner_radius .. inner_radius
    + levels - 1``.

    Raises :class:`NoCommonExtension` (carrying the deepest level at which a
    common prefix still existed) when the recorded solution sets do not meet.
    """
    if levels < 1:
        raise PreconditionError("levels must be >= 1")
    if inner_radius < 0:
        raise PreconditionError("inner_radius must be >= 0")
    balls = [truncate(g, root, inner_radius + j, budget) for j in range(levels)]
    for ball in balls:
        for v in ball.vertices:
            if not g.is_finite_degree(v):
                raise PreconditionError(f"vertex {v} has infinite degree; graph is not locally finite")
    inner = balls[0].vertices
    rng = random.Random(seed)
    candidates: set[tuple[int, ...]] | None = None
    solutions, sampled = [], []
    deepest = -1
    for j, ball in enumerate(balls):
        sols, flag = _level_solutions(ball, inner, candidates or set(), bound, cap, samples, rng)
        if flag:
            logger.warning("level %d (n=%d) holds sampled solutions", j, ball.graph.n)
        solutions.append(sols)
        sampled.append(flag)
        prefixes = {tuple(s[v] for v in inner) for s in sols}
        candidates = prefixes if candidates is None else candidates & prefixes
        if not candidates:
            raise NoCommonExtension(
                f"no prefix of the radius-{inner_radius} ball survives level {j}", deepest
            )
        deepest = j
    best = min(candidates)
    return LevelTower(
        balls, solutions, sampled, dict(zip(inner, best)), deepest, sorted(candidates)
    )
