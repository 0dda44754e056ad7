"""Input validation helpers for the estimator front end."""
from __future__ import annotations

import numpy as np

from .graph import FiniteGraph

UNCOLORED = -1


def check_graph(X) -> FiniteGraph:
    """Accept a :class:`FiniteGraph` or a square symmetric 0/1 adjacency
    matrix (dense array-like or anything with ``toarray()``)."""
    if isinstance(X, FiniteGraph):
        return X
    if hasattr(X, "toarray"):
        X = X.toarray()
    A = np.asarray(X)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
    if A.size and not np.isin(A, (0, 1)).all():
        raise ValueError("adjacency matrix entries must be 0 or 1")
    if not (A == A.T).all():
        raise ValueError("adjacency matrix must be symmetric")
    if np.diag(A).any():
        raise ValueError("adjacency matrix must have a zero diagonal (no self-loops)")
    us, vs = np.nonzero(np.triu(A, 1))
    return FiniteGraph.from_edges(A.shape[0], zip(us.tolist(), vs.tolist()))


def check_partial_array(C, n: int) -> np.ndarray:
    """2-D array of colorings, one per row, with -1 marking uncolored."""
    C = np.atleast_2d(np.asarray(C))
    if C.ndim != 2 or C.shape[1] != n:
        raise ValueError(f"expected colorings with {n} columns, got shape {C.shape}")
    if C.size and not np.isin(C, (UNCOLORED, 0, 1)).all():
        raise ValueError("coloring entries must be -1, 0 or 1")
    return C.astype(np.int8)


def array_to_coloring(row) -> dict[int, int]:
    return {i: int(c) for i, c in enumerate(row) if c != UNCOLORED}


def coloring_to_array(c, n: int) -> np.ndarray:
    out = np.full(n, UNCOLORED, dtype=np.int8)
    for v, col in c.items():
        out[v] = col
    return out
