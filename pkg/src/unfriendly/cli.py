"""Command line interface.

Exit codes: 0 success / verified, 1 verifier failure, 2 parse or config
error, 3 resource bound exceeded.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import io
from .closure import close
from .coloring import is_unfriendly_partial, is_unfriendly_total
from .exceptions import (
    BudgetExceeded,
    ExhaustiveBoundError,
    NoCommonExtension,
    ParseError,
    UnfriendlyError,
)
from .filter import audit, read_schedule, run_chain
from .graph import DEFAULT_BUDGET, FINITE_FAMILIES, LAZY_FAMILIES, FiniteGraph, LazyGraph, generate
from .layered import DegreeClassMap, layered_solve, maximal_bipartite_pair
from .solvers import EXHAUSTIVE_BOUND, limit_partition, solve_exact, solve_local

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_BOUND = 0, 1, 2, 3


def default_budget() -> int:
    raw = os.environ.get("UNFRIENDLY_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(f"UNFRIENDLY_BUDGET must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ParseError("UNFRIENDLY_BUDGET must be positive")
    return value


def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _natural(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _read_graph(path) -> FiniteGraph:
    return io.parse_graph(Path(path).read_text())


def _emit(text, path):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _family_params(args):
    return {k: getattr(args, k) for k in ("n", "m", "p") if getattr(args, k, None) is not None}


def _solve(g, args):
    if args.method == "exact":
        return solve_exact(g, args.bound)
    if args.method == "local":
        return solve_local(g, {v: 0 for v in range(g.n)}, args.order, args.seed)
    if args.classes:
        classes = io.parse_classes(Path(args.classes).read_text(), g)
    else:
        t = args.threshold
        if t is None:
            t = max((g.degree(v) for v in range(g.n)), default=0)
        classes = DegreeClassMap.by_degree(g, t)
    return layered_solve(g, classes, args.repetitions, bound=args.bound)


def cmd_generate(args):
    if args.family in LAZY_FAMILIES:
        raise ParseError(f"{args.family} is lazy and cannot be written to a file")
    g = generate(args.family, args.seed, **_family_params(args))
    _emit(io.format_graph(g), args.output)
    return EXIT_OK


def cmd_solve(args):
    g = _read_graph(args.graph)
    rep = _solve(g, args)
    _emit(io.format_coloring(rep.coloring), args.output)
    print("# method cross_edges work verified")
    print(rep.stats_line())
    return EXIT_OK if rep.verified else EXIT_FAIL


def cmd_verify(args):
    g = _read_graph(args.graph)
    c = io.parse_coloring(Path(args.coloring).read_text(), g.n)
    total = len(c) == g.n
    verdict = is_unfriendly_total(g, c) if total else is_unfriendly_partial(g, c)
    bad = ",".join(map(str, verdict.violators)) or "-"
    print("# kind verified violators")
    print(f"{'total' if total else 'partial'} {str(verdict.ok).lower()} {bad}")
    return EXIT_OK if verdict.ok else EXIT_FAIL


def cmd_close(args):
    g = _read_graph(args.graph)
    c = io.parse_coloring(Path(args.coloring).read_text(), g.n)
    closed, trace = close(g, c)
    _emit(io.format_coloring(closed), args.output)
    if args.trace:
        Path(args.trace).write_text("".join(line + "\n" for line in trace.lines()))
    return EXIT_OK


def cmd_pair(args):
    g = _read_graph(args.graph)
    classes = io.parse_classes(Path(args.classes).read_text(), g)
    _emit(io.format_pair(maximal_bipartite_pair(g, classes)), args.output)
    return EXIT_OK


def _lazy(args) -> LazyGraph:
    if getattr(args, "graph", None):
        return LazyGraph.from_finite(_read_graph(args.graph))
    if args.family is None:
        raise ParseError("give a lazy family or --graph")
    if args.family not in LAZY_FAMILIES:
        raise ParseError(f"{args.family} is not a lazy family ({', '.join(LAZY_FAMILIES)})")
    return generate(args.family, args.seed, **_family_params(args))


def cmd_filter(args):
    g = _lazy(args)
    budget = default_budget()
    if args.schedule == "file":
        if not args.schedule_file:
            raise ParseError("--schedule file needs --schedule-file")
        sched = read_schedule(Path(args.schedule_file).read_text().splitlines())
    else:
        sched = None
    state = run_chain(g, sched, args.steps, budget)
    log = "# step requirement_kind v n vertex_assigned color\n"
    log += "".join(line + "\n" for line in state.log_lines())
    _emit(log, args.log)
    rep = audit(state, g, args.horizon, args.depth, budget)
    print("\n".join(rep.table()))
    print(f"# met {len(rep.met())} of {rep.total}")
    return EXIT_OK


def cmd_limit(args):
    g = _lazy(args)
    try:
        tower = limit_partition(
            g, args.root, args.levels, args.inner_radius, default_budget(), seed=args.seed
        )
    except NoCommonExtension as exc:
        print(f"# no common extension; deepest consistent level {exc.deepest_level}")
        return EXIT_FAIL
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for j, sols in enumerate(tower.solutions):
            match = next(s for s in sols if all(s[v] == c for v, c in tower.stable_prefix.items()))
            (out / f"level_{j}.txt").write_text(io.format_coloring(match))
    sys.stdout.write(io.format_coloring(tower.stable_prefix))
    bad = tower.prefix_violations()
    print("# levels sampled interior violations")
    print(f"{len(tower.levels)} {sum(tower.sampled)} {len(tower.inner.interior)} {len(bad)}")
    return EXIT_OK if not bad else EXIT_FAIL


def cmd_corpus(args):
    print("# graph_id n m method verified cross_edges work")
    passed = 0
    for i in range(args.count):
        g = generate("gnp", args.seed + i, n=args.n, p=args.p)
        rep = _solve(g, args)
        passed += rep.verified
        print(f"{i} {g.n} {g.m} {rep.method} {str(rep.verified).lower()} {rep.cross_edges} {rep.work}")
    rate = passed / args.count if args.count else 1.0
    print("# pass_rate passed count")
    print(f"{rate:.6f} {passed} {args.count}")
    return EXIT_OK if passed == args.count else EXIT_FAIL


def _solver_flags(p):
    p.add_argument("--method", choices=("exact", "local", "layered"), default="exact")
    p.add_argument("--order", choices=("lowest", "random"), default="lowest")
    p.add_argument("--seed", type=_natural, default=0)
    p.add_argument("--bound", type=_positive, default=EXHAUSTIVE_BOUND)
    p.add_argument("--classes", help="class map file for --method layered")
    p.add_argument("--threshold", type=_natural, help="layered high class: degree >= threshold")
    p.add_argument("--repetitions", type=_positive, default=3)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unfriendly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a finite graph from a family")
    p.add_argument("family", choices=FINITE_FAMILIES + LAZY_FAMILIES)
    p.add_argument("--n", type=_natural)
    p.add_argument("--m", type=_natural)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=_natural, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("solve", help="unfriendly partition of a graph file")
    p.add_argument("graph")
    _solver_flags(p)
    p.add_argument("-o", "--output", help="coloring file (default stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("close", help="closure of a partial coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("-o", "--output")
    p.add_argument("--trace", help="write 'stage vertex color' rows here")
    p.set_defaults(func=cmd_close)

    p = sub.add_parser("pair", help="maximal bipartite pair for a class map")
    p.add_argument("graph")
    p.add_argument("classes")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("filter", help="run the requirement chain on a lazy graph")
    p.add_argument("family", nargs="?")
    p.add_argument("--graph", help="finite graph file presented lazily")
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=_natural, default=0)
    p.add_argument("--steps", type=_natural, required=True)
    p.add_argument("--horizon", type=_natural, default=10)
    p.add_argument("--depth", type=_natural, default=5)
    p.add_argument("--schedule", choices=("diagonal", "file"), default="diagonal")
    p.add_argument("--schedule-file")
    p.add_argument("--log", help="chain log file (default stdout)")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("limit", help="stable prefix for a locally finite lazy graph")
    p.add_argument("family", nargs="?")
    p.add_argument("--graph", help="finite graph file presented lazily")
    p.add_argument("--root", type=_natural, default=0)
    p.add_argument("--levels", type=_positive, default=3)
    p.add_argument("--inner-radius", type=_natural, default=1)
    p.add_argument("--seed", type=_natural, default=0)
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("corpus", help="run a seeded batch of G(n, p) graphs")
    p.add_argument("--count", type=_natural, default=100)
    p.add_argument("--n", type=_natural, default=8)
    p.add_argument("--p", type=float, default=0.5)
    _solver_flags(p)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ExhaustiveBoundError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ParseError, ValueError, UnfriendlyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
