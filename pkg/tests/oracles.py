"""Brute-force reference implementations, kept independent of the package
code paths they check (pure itertools, no numpy, no shared helpers)."""
import itertools
import random


def edge_list(g):
    return [(u, v) for u in range(g.n) for v in g.adjacency[u] if u < v]


def brute_max_cut(g):
    best = 0
    for bits in itertools.product((0, 1), repeat=g.n):
        best = max(best, sum(bits[u] != bits[v] for u, v in edge_list(g)))
    return best


def brute_unfriendly_rows(g):
    rows = []
    for bits in itertools.product((0, 1), repeat=g.n):
        if all(
            sum(bits[u] != bits[v] for u in g.adjacency[v])
            >= sum(bits[u] == bits[v] for u in g.adjacency[v])
            for v in range(g.n)
        ):
            rows.append(bits)
    return rows


def safe_at(g, c, v):
    opp = sum(1 for u in g.adjacency[v] if u in c and c[u] != c[v])
    same = sum(1 for u in g.adjacency[v] if u in c and c[u] == c[v])
    unc = sum(1 for u in g.adjacency[v] if u not in c)
    return opp >= same + unc


def one_at_a_time_closure(g, c, rng=None):
    """Color qualifying vertices one at a time in a (random) order."""
    c = dict(c)
    while True:
        order = [v for v in range(g.n) if v not in c]
        if rng is not None:
            rng.shuffle(order)
        for v in order:
            for b in (0, 1):
                trial = dict(c)
                trial[v] = b
                if safe_at(g, trial, v):
                    c = trial
                    break
            else:
                continue
            break
        else:
            return c


def all_graphs(n):
    """Every labeled simple graph on n vertices, as edge lists."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [p for i, p in enumerate(pairs) if mask >> i & 1]


def random_edges(rng, n, p):
    return [e for e in itertools.combinations(range(n), 2) if rng.random() < p]


def is_pair(g, M, N, F0, F1):
    return (
        F0 <= M
        and F1 <= N
        and all(set(g.adjacency[v]) <= F1 for v in F0)
        and all(set(g.adjacency[u]) <= F0 for u in F1)
    )


def all_valid_pairs(g, M, N):
    Ml, Nl = sorted(M), sorted(N)
    for a in range(1 << len(Ml)):
        F0 = {v for i, v in enumerate(Ml) if a >> i & 1}
        for b in range(1 << len(Nl)):
            F1 = {v for i, v in enumerate(Nl) if b >> i & 1}
            if is_pair(g, M, N, F0, F1):
                yield F0, F1
