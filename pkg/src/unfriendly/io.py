"""Text formats.

graph     ``n m`` then ``m`` lines ``u v`` with ``u < v``
coloring  lines ``v c``, ``c`` in {0, 1}; absent vertices are uncolored
classes   lines ``v M`` or ``v N``; unlisted vertices are in ``N``
pair      lines ``F0 v ...`` and ``F1 v ...``

All writers emit ASCII decimal, newline-terminated lines in sorted order.
"""
from __future__ import annotations

from .exceptions import ParseError
from .graph import FiniteGraph
from .layered import BipartitePair, DegreeClassMap


def _ints(line, lineno, count):
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"line {lineno}: expected {count} fields, got {line!r}")
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer field in {line!r}") from None
    if any(v < 0 for v in vals):
        raise ParseError(f"line {lineno}: negative value in {line!r}")
    return vals


def format_graph(g: FiniteGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> FiniteGraph:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty graph file")
    n, m = _ints(lines[0], 1, 2)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)} lines")
    seen = set()
    for i, line in enumerate(body, 2):
        u, v = _ints(line, i, 2)
        if not u < v < n:
            raise ParseError(f"line {i}: need u < v < n, got {line!r}")
        if (u, v) in seen:
            raise ParseError(f"line {i}: duplicate edge {u} {v}")
        seen.add((u, v))
    return FiniteGraph.from_edges(n, seen)


def format_coloring(c) -> str:
    return "".join(f"{v} {c[v]}\n" for v in sorted(c))


def parse_coloring(text: str, n: int | None = None) -> dict[int, int]:
    out = {}
    for i, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        v, col = _ints(line, i, 2)
        if col not in (0, 1):
            raise ParseError(f"line {i}: color must be 0 or 1")
        if n is not None and v >= n:
            raise ParseError(f"line {i}: vertex {v} out of range for n={n}")
        if v in out:
            raise ParseError(f"line {i}: vertex {v} colored twice")
        out[v] = col
    return out


def format_classes(classes: DegreeClassMap) -> str:
    tags = {v: "M" for v in classes.M}
    tags.update({v: "N" for v in classes.N})
    return "".join(f"{v} {tags[v]}\n" for v in sorted(tags))


def parse_classes(text: str, g: FiniteGraph) -> DegreeClassMap:
    high = set()
    listed = set()
    for i, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2 or parts[1] not in ("M", "N") or not parts[0].isdigit():
            raise ParseError(f"line {i}: expected 'v M' or 'v N', got {line!r}")
        v = int(parts[0])
        if v >= g.n or v in listed:
            raise ParseError(f"line {i}: bad or repeated vertex {v}")
        listed.add(v)
        if parts[1] == "M":
            high.add(v)
    return DegreeClassMap.from_high(g, high)


def format_pair(pair: BipartitePair) -> str:
    f0 = " ".join(str(v) for v in sorted(pair.F0))
    f1 = " ".join(str(v) for v in sorted(pair.F1))
    return f"F0 {f0}".rstrip() + "\n" + f"F1 {f1}".rstrip() + "\n"
