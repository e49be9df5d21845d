"""Prediction accuracy metrics: precision at a top-L cutoff with an explicit
randomized tie policy, and a sampled ranking AUC.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

import numpy as np

from .graph import NodeId, WeightedGraph
from .indices import IndexSpec, ScoredPair, score_pair

Pair = Tuple[NodeId, NodeId]


@dataclass(frozen=True)
class ProbeSet:
    """Held-out edges used only for accuracy scoring, disjoint from the
    training edge set."""

    pairs: FrozenSet[Pair]

    @staticmethod
    def of(pairs: Iterable[Pair]) -> "ProbeSet":
        return ProbeSet(frozenset((x, y) if x < y else (y, x)
                                  for x, y in pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: Pair) -> bool:
        return pair in self.pairs


def precision_at_L(ranking: Sequence[ScoredPair], probe: ProbeSet, L: int,
                   tie_seed, total_candidates: Optional[int] = None) -> float:
    """Fraction of the top-L candidates that are probe links.

    Ties: within the maximal equal-score block straddling the L cutoff,
    members are chosen uniformly at random from ``tie_seed``. If the ranking
    holds fewer than L positive-score pairs, the shortfall is filled from the
    zero-score candidate class, whose size is ``total_candidates`` minus the
    ranking length; the number of probe hits among that uniform draw is
    sampled hypergeometrically rather than materializing the class.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    rng = np.random.default_rng(tie_seed)
    hits = 0
    if len(ranking) >= L:
        cutoff = ranking[L - 1].score
        scores = [sp.score for sp in ranking]
        # block of pairs tied at the cutoff score (ranking is sorted desc)
        lo = _bisect_above(scores, cutoff)
        hi = _bisect_above(scores, cutoff, strict=False)
        for sp in ranking[:lo]:
            if (sp.x, sp.y) in probe:
                hits += 1
        need = L - lo
        if need:
            block = ranking[lo:hi]
            chosen = rng.choice(len(block), size=need, replace=False)
            for i in chosen:
                sp = block[i]
                if (sp.x, sp.y) in probe:
                    hits += 1
    else:
        for sp in ranking:
            if (sp.x, sp.y) in probe:
                hits += 1
        need = L - len(ranking)
        if total_candidates is None:
            raise ValueError("total_candidates required when the ranking is "
                             "shorter than L")
        n_zero = total_candidates - len(ranking)
        ranked_pairs = {(sp.x, sp.y) for sp in ranking}
        probe_zero = sum(1 for p in probe.pairs if p not in ranked_pairs)
        draw = min(need, n_zero)
        if draw:
            hits += int(rng.hypergeometric(probe_zero, n_zero - probe_zero,
                                           draw))
    return hits / L


def _bisect_above(scores: Sequence[float], value: float,
                  strict: bool = True) -> int:
    """Index of the first entry not > value (strict) or not >= value, in a
    descending list."""
    lo, hi = 0, len(scores)
    while lo < hi:
        mid = (lo + hi) // 2
        above = scores[mid] > value if strict else scores[mid] >= value
        if above:
            lo = mid + 1
        else:
            hi = mid
    return lo


def auc(g_train: WeightedGraph, spec: IndexSpec, probe: ProbeSet,
        n_samples: int, seed) -> float:
    """Sampled probability that a random probe pair outscores a random
    non-probe non-edge, ties counting one half."""
    if len(probe) == 0:
        raise ValueError("probe set is empty")
    n = g_train.node_count
    total_non_edges = n * (n - 1) // 2 - g_train.edge_count
    if total_non_edges <= len(probe):
        raise ValueError("no non-edge outside the probe set to compare with")
    rng = np.random.default_rng(seed)
    probe_list = sorted(probe.pairs)
    higher = 0.0
    for _ in range(n_samples):
        px, py = probe_list[rng.integers(len(probe_list))]
        while True:
            x = int(rng.integers(n))
            y = int(rng.integers(n))
            if x == y:
                continue
            if x > y:
                x, y = y, x
            if g_train.has_edge(x, y) or (x, y) in probe:
                continue
            break
        sp = score_pair(g_train, spec, px, py)
        sn = score_pair(g_train, spec, x, y)
        if sp > sn:
            higher += 1.0
        elif sp == sn:
            higher += 0.5
    return higher / n_samples
