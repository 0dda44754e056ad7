"""scikit-learn style front end.

>>> from unfriendly.graph import cycle_graph
>>> UnfriendlyPartition().fit(cycle_graph(4)).labels_.tolist()
[0, 1, 0, 1]
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .closure import close
from .layered import DegreeClassMap, layered_solve
from .solvers import EXHAUSTIVE_BOUND, solve_exact, solve_local
from .validation import array_to_coloring, check_graph, check_partial_array, coloring_to_array


class UnfriendlyPartition(ClusterMixin, BaseEstimator):
    """Two-cluster a graph's vertices so every vertex has at least as many
    neighbors in the other cluster as in its own.

    Parameters
    ----------
    method : {"exact", "local", "layered"}
    order : {"lowest", "random"}
        Flip order for ``method="local"``.
    random_state : int or None
        Seed for ``order="random"``.
    exhaustive_bound : int
        Largest graph (and layered base component) solved by enumeration.
    repetitions : int
        Passes over the high class for ``method="layered"``.
    degree_threshold : int or None
        Layered high class = vertices of at least this degree; None takes the
        vertices of maximum degree.

    Attributes
    ----------
    labels_ : ndarray of shape (n_vertices,)
    cross_edges_ : int
    n_work_ : int
        Colorings enumerated, flips made, or layered iterations.
    verified_ : bool
    """

    def __init__(
        self,
        method="exact",
        order="lowest",
        random_state=None,
        exhaustive_bound=EXHAUSTIVE_BOUND,
        repetitions=3,
        degree_threshold=None,
    ):
        self.method = method
        self.order = order
        self.random_state = random_state
        self.exhaustive_bound = exhaustive_bound
        self.repetitions = repetitions
        self.degree_threshold = degree_threshold

    def fit(self, X, y=None):
        g = check_graph(X)
        if self.method == "exact":
            rep = solve_exact(g, self.exhaustive_bound)
        elif self.method == "local":
            rep = solve_local(g, {v: 0 for v in range(g.n)}, self.order, self.random_state)
        elif self.method == "layered":
            t = self.degree_threshold
            if t is None:
                t = max((g.degree(v) for v in range(g.n)), default=0)
            classes = DegreeClassMap.by_degree(g, t)
            rep = layered_solve(g, classes, self.repetitions, bound=self.exhaustive_bound)
        else:
            raise ValueError(f"unknown method {self.method!r}")
        self.report_ = rep
        self.labels_ = coloring_to_array(rep.coloring, g.n).astype(np.int64)
        self.cross_edges_ = rep.cross_edges
        self.n_work_ = rep.work
        self.verified_ = rep.verified
        return self


class ClosureTransformer(TransformerMixin, BaseEstimator):
    """Close partial colorings of a fixed graph.

    Rows of the input are partial colorings (-1 = uncolored); each row is
    replaced by its closure.  The graph is a parameter, so ``fit`` only
    validates it.
    """

    def __init__(self, graph=None):
        self.graph = graph

    def fit(self, X=None, y=None):
        if self.graph is None:
            raise ValueError("ClosureTransformer needs a graph")
        self.graph_ = check_graph(self.graph)
        self.n_features_in_ = self.graph_.n
        return self

    def transform(self, X):
        check_is_fitted(self, "graph_")
        C = check_partial_array(X, self.graph_.n)
        out = np.empty_like(C)
        for i, row in enumerate(C):
            closed, _ = close(self.graph_, array_to_coloring(row))
            out[i] = coloring_to_array(closed, self.graph_.n)
        return out
