"""Immutable weighted undirected simple graph with neighbor/degree/strength queries.

Nodes are dense integer ids assigned in first-appearance order of their string
labels. Adjacency is stored as per-node sorted numpy arrays so that neighbor
intersections are linear merges and downstream scoring can vectorize.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import GraphError

NodeId = int


@dataclass(frozen=True)
class EdgeRecord:
    """One parsed (label, label, weight) triple; the ingestion currency."""

    source_label: str
    target_label: str
    weight: float = 1.0


class WeightedGraph:
    """Undirected simple graph with strictly positive edge weights.

    Immutable after construction; safe for concurrent read access. Build via
    :func:`build_graph`, not directly.
    """

    __slots__ = ("node_count", "edge_count", "labels", "_label_to_id",
                 "_nbrs", "_wts", "_deg", "_edge_keys")

    def __init__(self, labels: list[str], nbrs: list[np.ndarray],
                 wts: list[np.ndarray]):
        self.labels = labels
        self._label_to_id = {lab: i for i, lab in enumerate(labels)}
        self._nbrs = nbrs
        self._wts = wts
        self.node_count = len(labels)
        self._deg = np.array([len(a) for a in nbrs], dtype=np.int64)
        self.edge_count = int(self._deg.sum()) // 2
        n = self.node_count
        keys = []
        for x in range(n):
            ys = nbrs[x]
            ys = ys[ys > x]
            if len(ys):
                keys.append(x * n + ys.astype(np.int64))
        self._edge_keys = (np.sort(np.concatenate(keys)) if keys
                           else np.empty(0, dtype=np.int64))

    # -- queries -----------------------------------------------------------

    def node_id(self, label: str) -> NodeId:
        try:
            return self._label_to_id[label]
        except KeyError:
            raise GraphError(f"unknown node label {label!r}") from None

    def neighbors(self, x: NodeId) -> np.ndarray:
        """Sorted neighbor ids of x (do not mutate)."""
        return self._nbrs[x]

    def weights(self, x: NodeId) -> np.ndarray:
        """Edge weights aligned with neighbors(x) (do not mutate)."""
        return self._wts[x]

    def degree(self, x: NodeId) -> int:
        return int(self._deg[x])

    def degrees(self) -> np.ndarray:
        return self._deg

    def strength(self, x: NodeId, alpha: float = 1.0) -> float:
        """Sum of incident weights raised to alpha; alpha=0 gives the degree."""
        if alpha == 0.0:
            return float(self._deg[x])
        if alpha == 1.0:
            return float(self._wts[x].sum())
        return float((self._wts[x] ** alpha).sum())

    def has_edge(self, x: NodeId, y: NodeId) -> bool:
        if x > y:
            x, y = y, x
        key = x * self.node_count + y
        i = np.searchsorted(self._edge_keys, key)
        return i < len(self._edge_keys) and self._edge_keys[i] == key

    def edge_weight(self, x: NodeId, y: NodeId) -> float:
        i = np.searchsorted(self._nbrs[x], y)
        if i >= len(self._nbrs[x]) or self._nbrs[x][i] != y:
            raise GraphError(f"no edge between nodes {x} and {y}")
        return float(self._wts[x][i])

    def edges(self) -> Iterable[tuple[NodeId, NodeId, float]]:
        """All edges as (x, y, w) with x < y, ascending."""
        for x in range(self.node_count):
            ys = self._nbrs[x]
            ws = self._wts[x]
            for y, w in zip(ys[ys > x], ws[ys > x]):
                yield x, int(y), float(w)

    def common_neighbors(self, x: NodeId, y: NodeId) -> np.ndarray:
        """Sorted ids adjacent to both x and y; x and y must differ."""
        if x == y:
            raise GraphError("common neighbors undefined for identical nodes")
        return np.intersect1d(self._nbrs[x], self._nbrs[y],
                              assume_unique=True)

    def edge_key_array(self) -> np.ndarray:
        """Sorted x*node_count+y keys of all edges (x < y); internal helper
        for candidate enumeration."""
        return self._edge_keys


def build_graph(records: Sequence[EdgeRecord],
                labels: Optional[Sequence[str]] = None) -> WeightedGraph:
    """Intern labels, collapse duplicate pairs by summing weights, build adjacency.

    ``labels`` pre-declares the node universe (e.g. a Pajek vertex section),
    allowing isolated nodes; otherwise nodes are created in first-appearance
    order of the records.
    """
    label_to_id: dict[str, int] = {}
    all_labels: list[str] = []
    if labels is not None:
        for lab in labels:
            if lab in label_to_id:
                raise GraphError(f"duplicate node label {lab!r}")
            label_to_id[lab] = len(all_labels)
            all_labels.append(lab)

    def intern(lab: str) -> int:
        i = label_to_id.get(lab)
        if i is None:
            if labels is not None:
                raise GraphError(f"edge references undeclared label {lab!r}")
            i = len(all_labels)
            label_to_id[lab] = i
            all_labels.append(lab)
        return i

    pair_weight: dict[tuple[int, int], float] = {}
    for rec in records:
        if not rec.source_label or not rec.target_label:
            raise GraphError(f"empty node label in record {rec!r}")
        if rec.source_label == rec.target_label:
            raise GraphError(f"self-loop rejected: {rec!r}")
        w = float(rec.weight)
        if not math.isfinite(w) or w <= 0.0:
            raise GraphError(f"non-positive or non-finite weight in {rec!r}")
        x = intern(rec.source_label)
        y = intern(rec.target_label)
        if x > y:
            x, y = y, x
        pair_weight[(x, y)] = pair_weight.get((x, y), 0.0) + w

    n = len(all_labels)
    adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for (x, y), w in pair_weight.items():
        adj[x].append((y, w))
        adj[y].append((x, w))
    nbrs: list[np.ndarray] = []
    wts: list[np.ndarray] = []
    for entries in adj:
        entries.sort()
        nbrs.append(np.array([e[0] for e in entries], dtype=np.int64))
        wts.append(np.array([e[1] for e in entries], dtype=np.float64))
    return WeightedGraph(all_labels, nbrs, wts)


def subgraph_without_edges(g: WeightedGraph,
                           removed: Iterable[tuple[NodeId, NodeId]]
                           ) -> WeightedGraph:
    """Copy of g with the given edges deleted; node set and ids unchanged."""
    drop = {(x, y) if x < y else (y, x) for x, y in removed}
    nbrs: list[np.ndarray] = []
    wts: list[np.ndarray] = []
    for x in range(g.node_count):
        ys = g.neighbors(x)
        ws = g.weights(x)
        keep = np.array([(min(x, int(y)), max(x, int(y))) not in drop
                         for y in ys], dtype=bool)
        nbrs.append(ys[keep].copy())
        wts.append(ws[keep].copy())
    return WeightedGraph(list(g.labels), nbrs, wts)
