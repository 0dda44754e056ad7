"""Finite and lazily presented countable graphs.

Vertices are natural numbers.  A :class:`FiniteGraph` uses the dense indices
``0..n-1``; a :class:`LazyGraph` enumerates its vertex ids in increasing
order and hands out a fresh neighbor iterator on every call, so the neighbor
order of a vertex is fixed and replayable.
"""
from __future__ import annotations

import hashlib
import itertools
import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .exceptions import BudgetExceeded, UnfriendlyError, UnknownFamilyError

INFINITE = math.inf
DEFAULT_BUDGET = 1000


@dataclass(frozen=True)
class FiniteGraph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    _sets: tuple[frozenset, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.adjacency) != self.n:
            raise ValueError("adjacency must have exactly n rows")
        for v, row in enumerate(self.adjacency):
            if list(row) != sorted(set(row)):
                raise ValueError(f"adjacency of {v} must be sorted without duplicates")
            for u in row:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
        object.__setattr__(self, "_sets", tuple(frozenset(r) for r in self.adjacency))
        for v, row in enumerate(self.adjacency):
            for u in row:
                if v not in self._sets[u]:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> FiniteGraph:
        rows = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(tuple(sorted(r)) for r in rows))

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_vertex(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self.n

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield u, v

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[FiniteGraph, tuple[int, ...]]:
        """Induced subgraph and the map from its local indices back to ours."""
        verts = tuple(sorted(set(vertices)))
        local = {v: i for i, v in enumerate(verts)}
        rows = tuple(
            tuple(local[u] for u in self.adjacency[v] if u in local) for v in verts
        )
        return FiniteGraph(len(verts), rows), verts


def disjoint_union(*graphs: FiniteGraph) -> FiniteGraph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return FiniteGraph.from_edges(offset, edges)


class LazyGraph:
    """A countable graph given by enumerators.

    ``neighbor_fn(v)`` must return a *new* iterator over the neighbors of
    ``v`` each time; ``degree_fn(v)`` returns an int for finite degree or
    :data:`INFINITE`.  ``ordered`` declares that every neighbor enumeration
    is strictly increasing in vertex id, which lets scans over finite
    colorings stop early.
    """

    def __init__(
        self,
        name: str,
        neighbor_fn: Callable[[int], Iterator[int]],
        degree_fn: Callable[[int], float],
        vertex_fn: Callable[[], Iterator[int]] = itertools.count,
        is_vertex: Callable[[int], bool] | None = None,
        ordered: bool = False,
    ):
        self.name = name
        self._neighbor_fn = neighbor_fn
        self._degree_fn = degree_fn
        self._vertex_fn = vertex_fn
        self._is_vertex = is_vertex or (lambda v: isinstance(v, int) and v >= 0)
        self.ordered = ordered

    def __repr__(self):
        return f"LazyGraph({self.name!r})"

    def vertex_ids(self) -> Iterator[int]:
        return iter(self._vertex_fn())

    def has_vertex(self, v) -> bool:
        return self._is_vertex(v)

    def neighbors(self, v: int) -> Iterator[int]:
        if not self.has_vertex(v):
            raise UnfriendlyError(f"{v!r} is not a vertex of {self.name}")
        return iter(self._neighbor_fn(v))

    def degree_kind(self, v: int) -> float:
        return self._degree_fn(v)

    def is_finite_degree(self, v: int) -> bool:
        return self.degree_kind(v) != INFINITE

    @classmethod
    def from_finite(cls, g: FiniteGraph, name: str = "finite") -> LazyGraph:
        return cls(
            name,
            lambda v: iter(g.neighbors(v)),
            g.degree,
            vertex_fn=lambda: iter(range(g.n)),
            is_vertex=g.has_vertex,
            ordered=True,
        )


def enumerate_neighbors(g: LazyGraph, v: int, budget: int) -> tuple[list[int], bool]:
    """Consume at most ``budget`` neighbors of ``v``.

    Returns ``(neighbors, exhausted)``.  A finite-degree vertex must be
    enumerated completely within the budget; anything else is an error,
    never a silent cut.
    """
    kind = g.degree_kind(v)
    if kind == INFINITE:
        return list(itertools.islice(g.neighbors(v), budget)), False
    if kind > budget:
        raise BudgetExceeded(f"vertex {v} has degree {kind} > budget {budget}")
    nbrs = list(itertools.islice(g.neighbors(v), budget + 1))
    if len(nbrs) != kind:
        raise BudgetExceeded(
            f"vertex {v} declared degree {kind} but enumerated {len(nbrs)}"
            + (" or more" if len(nbrs) > budget else "")
        )
    return nbrs, True


@dataclass(frozen=True)
class Ball:
    """Finite truncation of a lazy graph around ``root``.

    ``vertices[i]`` is the lazy id of local vertex ``i`` of ``graph``.
    """

    root: int
    radius: int
    graph: FiniteGraph
    vertices: tuple[int, ...]
    boundary: frozenset[int]
    distance: dict[int, int] = field(compare=False)

    @property
    def index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def interior(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if v not in self.boundary)


def truncate(g: LazyGraph, root: int, radius: int, budget: int = DEFAULT_BUDGET) -> Ball:
    """Induced subgraph on all vertices within distance ``radius`` of ``root``.

    Infinite neighborhoods contribute their first ``budget`` neighbors only,
    and such vertices are marked as boundary.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if not g.has_vertex(root):
        raise UnfriendlyError(f"{root!r} is not a vertex of {g.name}")
    dist = {root: 0}
    seen_nbrs: dict[int, list[int]] = {}
    open_ends = set()
    queue = deque([root])
    while queue:
        u = queue.popleft()
        if dist[u] == radius:
            continue
        nbrs, exhausted = enumerate_neighbors(g, u, budget)
        seen_nbrs[u] = nbrs
        if not exhausted:
            open_ends.add(u)
        for w in nbrs:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)

    verts = tuple(sorted(dist))
    local = {v: i for i, v in enumerate(verts)}
    edges = set()
    for u in verts:
        nbrs = seen_nbrs.get(u)
        if nbrs is None:
            nbrs, _ = enumerate_neighbors(g, u, budget)
        for w in nbrs:
            if w in local:
                a, b = local[u], local[w]
                edges.add((min(a, b), max(a, b)))
    boundary = frozenset(v for v in verts if dist[v] == radius or v in open_ends)
    return Ball(root, radius, FiniteGraph.from_edges(len(verts), edges), verts, boundary, dist)


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]


def components(g: FiniteGraph, within: Iterable[int] | None = None) -> list[Component]:
    """Connected components of the subgraph induced on ``within``.

    Each component carries its breadth-first layers from its least vertex.
    Components come ordered by least vertex.
    """
    allowed = set(range(g.n)) if within is None else set(within)
    for v in allowed:
        if not g.has_vertex(v):
            raise UnfriendlyError(f"{v!r} is not a vertex of the graph")
    seen = set()
    out = []
    for start in sorted(allowed):
        if start in seen:
            continue
        seen.add(start)
        layers = []
        layer = [start]
        while layer:
            layers.append(tuple(sorted(layer)))
            nxt = []
            for u in layer:
                for w in g.neighbors(u):
                    if w in allowed and w not in seen:
                        seen.add(w)
                        nxt.append(w)
            layer = nxt
        out.append(Component(tuple(sorted(itertools.chain.from_iterable(layers))), tuple(layers)))
    return out


# --- generators -------------------------------------------------------------


def _need(params, *names):
    missing = [k for k in names if k not in params]
    if missing:
        raise ValueError(f"missing parameter(s): {', '.join(missing)}")


def _nonneg_int(params, name, minimum=0):
    value = params[name]
    if not isinstance(value, int) or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value


def complete_graph(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> FiniteGraph:
    if n < 3:
        raise ValueError("a cycle needs n >= 3")
    return FiniteGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite_graph(m: int, n: int) -> FiniteGraph:
    """Left side ``0..m-1``, right side ``m..m+n-1``."""
    return FiniteGraph.from_edges(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def gnp_graph(n: int, p: float, seed: int = 0) -> FiniteGraph:
    rng = random.Random(seed)
    return FiniteGraph.from_edges(
        n, (e for e in itertools.combinations(range(n), 2) if rng.random() < p)
    )


def lazy_ray() -> LazyGraph:
    def nbrs(v):
        if v > 0:
            yield v - 1
        yield v + 1

    return LazyGraph("ray", nbrs, lambda v: 1 if v == 0 else 2, ordered=True)


def _zigzag(z):
    return 2 * z if z >= 0 else -2 * z - 1


def _unzigzag(k):
    return k // 2 if k % 2 == 0 else -(k + 1) // 2


def grid_id(x: int, y: int) -> int:
    """Vertex id of lattice point ``(x, y)`` in the lazy grid (origin is 0)."""
    a, b = _zigzag(x), _zigzag(y)
    return (a + b) * (a + b + 1) // 2 + b


def grid_point(v: int) -> tuple[int, int]:
    w = (math.isqrt(8 * v + 1) - 1) // 2
    b = v - w * (w + 1) // 2
    return _unzigzag(w - b), _unzigzag(b)


def lazy_grid() -> LazyGraph:
    """The integer lattice Z^2 with unit-distance edges."""

    def nbrs(v):
        x, y = grid_point(v)
        for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            yield grid_id(x + dx, y + dy)

    return LazyGraph("grid", nbrs, lambda v: 4)


def lazy_complete_bipartite() -> LazyGraph:
    """K_{aleph0,aleph0}: ``a_i = 2i`` and ``b_i = 2i + 1``."""

    def nbrs(v):
        return itertools.count(1 - v % 2, 2)

    return LazyGraph("complete_bipartite_inf", nbrs, lambda v: INFINITE, ordered=True)


def _unit_hash(seed, u, v):
    digest = hashlib.blake2b(f"{seed}:{u}:{v}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big") / 2.0**64


def lazy_random(p: float = 0.5, seed: int = 0) -> LazyGraph:
    """Countable random graph where each pair is an edge with probability ``p``.

    Every vertex has infinite degree with probability one when ``p > 0``.
    """
    if not 0 < p <= 1:
        raise ValueError(f"p must lie in (0, 1] for an infinite-degree graph, got {p}")

    def nbrs(v):
        for w in itertools.count():
            if w != v and _unit_hash(seed, min(v, w), max(v, w)) < p:
                yield w

    return LazyGraph(f"random(p={p},seed={seed})", nbrs, lambda v: INFINITE, ordered=True)


FINITE_FAMILIES = ("complete", "cycle", "path", "complete_bipartite", "gnp")
LAZY_FAMILIES = ("lazy_ray", "lazy_grid", "lazy_complete_bipartite", "lazy_random")


def generate(family: str, seed: int = 0, **params) -> FiniteGraph | LazyGraph:
    """Build a graph from a named family.

    Finite: ``complete(n)``, ``cycle(n)``, ``path(n)``,
    ``complete_bipartite(m, n)``, ``gnp(n, p)``.
    Lazy: ``lazy_ray``, ``lazy_grid``, ``lazy_complete_bipartite``,
    ``lazy_random(p)``.
    """
    if family == "complete":
        _need(params, "n")
        return complete_graph(_nonneg_int(params, "n"))
    if family == "cycle":
        _need(params, "n")
        return cycle_graph(_nonneg_int(params, "n", 3))
    if family == "path":
        _need(params, "n")
        return path_graph(_nonneg_int(params, "n"))
    if family == "complete_bipartite":
        _need(params, "m", "n")
        return complete_bipartite_graph(_nonneg_int(params, "m"), _nonneg_int(params, "n"))
    if family == "gnp":
        _need(params, "n", "p")
        p = params["p"]
        if not 0 <= p <= 1:
            raise ValueError(f"p must lie in [0, 1], got {p}")
        return gnp_graph(_nonneg_int(params, "n"), p, seed)
    if family == "lazy_ray":
        return lazy_ray()
    if family == "lazy_grid":
        return lazy_grid()
    if family == "lazy_complete_bipartite":
        return lazy_complete_bipartite()
    if family == "lazy_random":
        return lazy_random(params.get("p", 0.5), seed)
    raise UnknownFamilyError(f"unknown graph family {family!r}")
