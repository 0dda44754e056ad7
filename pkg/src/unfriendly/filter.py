"""Generic filters over finite partial colorings of a countable graph.

The poset is the set of finite partial colorings ordered by extension.  Two
kinds of dense requirement are met one after another along an increasing
chain:

* ``Dom(v)``: ``v`` is colored;
* ``Both(v, n)``: among ``v``'s neighbors at enumeration positions past
  ``n`` there is one colored 0 and one colored 1.

When every vertex has infinite degree each requirement can be met by a
finite extension of any finite coloring.  A fair schedule then drives the
union of the chain to a total coloring in which every vertex has infinitely
many neighbors of each color, i.e. an unfriendly partition.  Only finite
prefixes of the chain are ever computed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .exceptions import BudgetExceeded, ParseError, PreconditionError
from .graph import DEFAULT_BUDGET, LazyGraph

DOM = "dom"
BOTH = "both"


@dataclass(frozen=True, order=True)
class Requirement:
    kind: str
    v: int
    n: int = 0

    def __post_init__(self):
        if self.kind not in (DOM, BOTH):
            raise ValueError(f"unknown requirement kind {self.kind!r}")
        if self.n < 0 or self.v < 0:
            raise ValueError("requirement indices must be natural numbers")

    def __str__(self):
        return f"Dom({self.v})" if self.kind == DOM else f"Both({self.v},{self.n})"


def Dom(v: int) -> Requirement:
    return Requirement(DOM, v)


def Both(v: int, n: int) -> Requirement:
    return Requirement(BOTH, v, n)


def extends(c: Mapping[int, int], d: Mapping[int, int]) -> bool:
    """Poset order: ``c <= d`` iff ``c`` extends ``d``."""
    return all(v in c and c[v] == col for v, col in d.items())


def _colors_past(c, req, g, budget):
    """Colors seen among ``req.v``'s colored neighbors at positions > ``req.n``.

    The scan ends at the end of a finite enumeration, once both colors are
    seen, or, for graphs with increasing enumerations, once the ids pass the
    largest colored vertex.  Otherwise it is bounded by ``budget``.
    """
    seen = set()
    if not c:
        return seen
    top = max(c)
    scanned = 0
    for pos, u in enumerate(itertools.islice(g.neighbors(req.v), budget)):
        scanned += 1
        if g.ordered and u > top:
            return seen
        if pos > req.n and u in c:
            seen.add(c[u])
            if len(seen) == 2:
                return seen
    if scanned == budget and not g.is_finite_degree(req.v):
        raise BudgetExceeded(f"scan of {req} exceeded budget {budget}")
    return seen


def meets(c: Mapping[int, int], req: Requirement, g: LazyGraph, budget: int = DEFAULT_BUDGET) -> bool:
    if req.kind == DOM:
        return req.v in c
    return len(_colors_past(c, req, g, budget)) == 2


def extend_to_meet(
    c: Mapping[int, int], req: Requirement, g: LazyGraph, budget: int = DEFAULT_BUDGET
) -> dict[int, int]:
    """Least deterministic extension of ``c`` meeting ``req``.

    ``Dom(v)`` colors ``v`` with 0.  ``Both(v, n)`` colors the first
    uncolored neighbors past position ``n``: the first one gets the first
    missing color, the next one the other (0 before 1).
    """
    if g.is_finite_degree(req.v):
        raise PreconditionError(
            f"vertex {req.v} has finite degree; requirements may be unmeetable"
        )
    out = dict(c)
    if req.kind == DOM:
        out.setdefault(req.v, 0)
        return out
    present = _colors_past(out, req, g, budget)
    missing = [b for b in (0, 1) if b not in present]
    if not missing:
        return out
    for pos, u in enumerate(itertools.islice(g.neighbors(req.v), budget)):
        if pos > req.n and u not in out:
            out[u] = missing.pop(0)
            if not missing:
                return out
    raise BudgetExceeded(f"could not meet {req} within budget {budget}")


def diagonal_schedule(g: LazyGraph) -> Iterator[Requirement]:
    """Diagonal walk over (vertex index, n); ``Dom(v)`` precedes ``v``'s first ``Both``.

    ``Both(v_i, n)`` sits on diagonal ``i + n``; see :func:`schedule_position`.
    """
    verts = []
    ids = g.vertex_ids()
    exhausted = False
    for d in itertools.count():
        if not exhausted:
            nxt = next(ids, None)
            if nxt is None:
                exhausted = True
            else:
                verts.append(nxt)
        for i in range(min(d + 1, len(verts))):
            n = d - i
            if n == 0:
                yield Dom(verts[i])
            yield Both(verts[i], n)


def schedule_position(i: int, n: int) -> int:
    """Zero-based position of ``Both(v_i, n)`` in the diagonal schedule of a
    graph with infinitely many vertices."""
    d = i + n
    before = d * (d + 1) // 2 + d  # earlier diagonals, each with one Dom
    return before + i + (1 if n == 0 else 0)


def steps_to_cover(horizon: int, depth: int) -> int:
    """Steps after which every ``Dom(v_i)``, ``Both(v_i, n)`` with
    ``i < horizon`` and ``n <= depth`` has been processed."""
    if horizon <= 0:
        return 0
    return max(schedule_position(i, n) for i in range(horizon) for n in range(depth + 1)) + 1


def read_schedule(lines: Iterable[str]) -> list[Requirement]:
    """Parse ``dom v`` / ``both v n`` lines (blank lines and ``#`` comments skipped)."""
    out = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == DOM and len(parts) == 2:
                out.append(Dom(int(parts[1])))
            elif parts[0] == BOTH and len(parts) == 3:
                out.append(Both(int(parts[1]), int(parts[2])))
            else:
                raise ValueError(line)
        except ValueError as exc:
            raise ParseError(f"schedule line {lineno}: {raw.rstrip()!r}") from exc
    return out


@dataclass(frozen=True)
class ChainStep:
    step: int
    requirement: Requirement
    assigned: tuple[tuple[int, int], ...]

    def lines(self) -> list[str]:
        r = self.requirement
        n = "-" if r.kind == DOM else str(r.n)
        head = f"{self.step} {r.kind} {r.v} {n}"
        if not self.assigned:
            return [f"{head} - -"]
        return [f"{head} {u} {col}" for u, col in self.assigned]


@dataclass
class ChainState:
    coloring: dict[int, int] = field(default_factory=dict)
    k: int = 0
    log: list[ChainStep] = field(default_factory=list)
    cursor: Iterator[Requirement] | None = field(default=None, repr=False, compare=False)

    def log_lines(self) -> list[str]:
        return [line for s in self.log for line in s.lines()]

    def coloring_at(self, k: int) -> dict[int, int]:
        """Replay the log up to step ``k``."""
        out = {}
        for s in self.log[:k]:
            out.update(s.assigned)
        return out


def advance(state: ChainState, g: LazyGraph, steps: int, budget: int = DEFAULT_BUDGET) -> ChainState:
    """Process the next ``steps`` requirements of the state's schedule in place."""
    for _ in range(steps):
        req = next(state.cursor, None)
        if req is None:
            break
        new = extend_to_meet(state.coloring, req, g, budget)
        assigned = tuple((u, col) for u, col in new.items() if u not in state.coloring)
        state.coloring = new
        state.k += 1
        state.log.append(ChainStep(state.k, req, assigned))
    return state


def run_chain(
    g: LazyGraph,
    schedule: Iterable[Requirement] | None = None,
    steps: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> ChainState:
    """Build ``c_0 = {} >= c_1 >= ... >= c_steps`` along ``schedule``
    (the diagonal schedule by default)."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    sched = diagonal_schedule(g) if schedule is None else iter(schedule)
    return advance(ChainState(cursor=sched), g, steps, budget)


@dataclass(frozen=True)
class AuditRow:
    v: int
    dom: bool
    both: tuple[bool, ...]


@dataclass(frozen=True)
class AuditReport:
    rows: tuple[AuditRow, ...]
    depth: int

    def met(self) -> set[Requirement]:
        out = set()
        for r in self.rows:
            if r.dom:
                out.add(Dom(r.v))
            out.update(Both(r.v, n) for n, ok in enumerate(r.both) if ok)
        return out

    @property
    def total(self) -> int:
        return len(self.rows) * (self.depth + 2)

    @property
    def fraction_met(self) -> float:
        return len(self.met()) / self.total if self.total else 1.0

    def table(self) -> list[str]:
        head = "# v dom " + " ".join(f"both{n}" for n in range(self.depth + 1))
        body = [
            f"{r.v} {int(r.dom)} " + " ".join(str(int(b)) for b in r.both) for r in self.rows
        ]
        return [head, *body]


def audit(
    state: ChainState, g: LazyGraph, horizon: int, depth: int, budget: int = DEFAULT_BUDGET
) -> AuditReport:
    """Which ``Dom(v)`` and ``Both(v, n)`` hold, for vertex ids below
    ``horizon`` and ``n <= depth``."""
    rows = []
    for v in itertools.takewhile(lambda x: x < horizon, g.vertex_ids()):
        both = tuple(meets(state.coloring, Both(v, n), g, budget) for n in range(depth + 1))
        rows.append(AuditRow(v, v in state.coloring, both))
    return AuditReport(tuple(rows), depth)
