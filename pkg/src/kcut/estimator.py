"""scikit-learn style wrappers: a k-cut solver as a graph clusterer.

``fit`` takes a :class:`~kcut.graph.Graph` or a symmetric integer adjacency
matrix (dense or scipy sparse) and stores the cut plus the component label of
every vertex once the cut is removed.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .errors import GraphError
from .graph import Graph, component_labels, remove_split
from .greedy import GreedyConfig, greedy_kcut, h_of_epsilon
from .splits import min_kway_split


def check_graph(X, strict: bool = True) -> Graph:
    """Coerce ``X`` to a graph, validating adjacency matrices on the way.

    A matrix must be square, symmetric, integer-valued, nonnegative and have
    a zero diagonal; entry ``(i, j)`` with ``i < j`` becomes an edge of that
    weight when nonzero.
    """
    if isinstance(X, Graph):
        return X
    A = check_array(X, accept_sparse=("csr", "coo", "csc"), dtype=None,
                    ensure_min_samples=1, ensure_min_features=1)
    if A.shape[0] != A.shape[1]:
        raise GraphError(f"adjacency matrix must be square, got shape {A.shape}")
    if sp.issparse(A):
        A = sp.coo_matrix(A)
        rows, cols, vals = A.row, A.col, A.data
        dense_check = (A - A.T).count_nonzero() == 0
    else:
        rows, cols = np.nonzero(A)
        vals = A[rows, cols]
        dense_check = np.array_equal(A, A.T)
    if not dense_check:
        raise GraphError("adjacency matrix must be symmetric")
    if np.any(vals < 0):
        raise GraphError("adjacency matrix has negative entries")
    if np.any(vals != np.round(vals)):
        raise GraphError("edge weights must be integers")
    if np.any(rows == cols):
        raise GraphError("adjacency matrix has a nonzero diagonal (self-loop)")
    edges = sorted((int(i), int(j), int(w)) for i, j, w in zip(rows, cols, vals) if i < j and w)
    return Graph(A.shape[0], edges, strict=strict)


class _KCutBase(ClusterMixin, BaseEstimator):
    def _store(self, graph: Graph, split):
        self.graph_ = graph
        self.cut_ = split
        self.cut_weight_ = split.weight
        self.cut_edges_ = [(graph.edge(i).u, graph.edge(i).v, graph.edge(i).weight)
                           for i in split.sorted_ids()]
        self.labels_ = np.asarray(component_labels(remove_split(graph, split)), dtype=np.intp)
        self.n_clusters_ = int(self.labels_.max()) + 1

    def predict(self, X=None):
        """Labels of the fitted graph; the cut does not extend to new vertices."""
        check_is_fitted(self, "labels_")
        if X is not None and check_graph(X) != self.graph_:
            raise ValueError("predict only labels the graph the estimator was fitted on")
        return self.labels_


class GreedyKCut(_KCutBase):
    """Greedy k-cut: low-density splits of degree at most ``h``, then one exact split.

    ``h=None`` means 3 without ``epsilon`` and ``h(epsilon, c2)`` with it.
    """

    def __init__(self, k: int = 2, h: int | None = None, epsilon=None, c2=1):
        self.k = k
        self.h = h
        self.epsilon = epsilon
        self.c2 = c2

    def _config(self) -> GreedyConfig:
        h = self.h
        if h is None:
            h = 3 if self.epsilon is None else h_of_epsilon(self.epsilon, self.c2)
        return GreedyConfig(k=self.k, h=h, epsilon=self.epsilon, c2=self.c2)

    def fit(self, X, y=None):
        graph = check_graph(X)
        split, trace = greedy_kcut(graph, self._config())
        self._store(graph, split)
        self.trace_ = trace
        return self


class ExactKCut(_KCutBase):
    """Minimum k-way split by the subset DP."""

    def __init__(self, k: int = 2, method: str = "components"):
        self.k = k
        self.method = method

    def fit(self, X, y=None):
        graph = check_graph(X)
        self._store(graph, min_kway_split(graph, self.k, method=self.method))
        return self
