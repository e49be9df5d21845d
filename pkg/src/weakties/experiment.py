"""Evaluation protocol: random train/probe splits, repeated realizations with
mean/std aggregation, and alpha sweeps with optimum location.

Seed discipline: every realization derives its RNGs from
``SeedSequence([master_seed, run_index, purpose])`` with distinct purpose tags
for the split and the tie policy, so the same master seed always produces the
same splits regardless of which metrics run, which alpha is being swept, or
how many workers execute the runs.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .graph import WeightedGraph, subgraph_without_edges
from .indices import Family, IndexSpec, rank_candidates
from .metrics import ProbeSet, precision_at_L

_PURPOSE_SPLIT = 0
_PURPOSE_TIES = 1


@dataclass(frozen=True)
class SplitResult:
    """Training graph plus held-out probe edges for one realization."""

    train_graph: WeightedGraph
    probe: ProbeSet
    seed: int


@dataclass(frozen=True)
class ExperimentReport:
    """Per-realization precisions with their mean and sample std."""

    per_run: tuple[float, ...]
    mean: float
    std: float
    spec: IndexSpec
    L: int
    n_runs: int
    probe_fraction: float
    master_seed: int


@dataclass(frozen=True)
class SweepCurve:
    """Precision-vs-alpha curve for one index family; one report per grid
    point, all sharing per-run split seeds (paired design)."""

    grid: tuple[float, ...]
    reports: tuple[ExperimentReport, ...]
    family: Family


def split_edges(g: WeightedGraph, probe_fraction: float,
                seed) -> SplitResult:
    """Uniformly hold out round(probe_fraction * |E|) edges as the probe set;
    the rest keep their weights in a training graph over the same node set."""
    edges = list(g.edges())
    m = len(edges)
    if m < 2:
        raise ValueError("graph needs at least 2 edges to split")
    probe_size = int(np.floor(probe_fraction * m + 0.5))
    if probe_size <= 0 or probe_size >= m:
        raise ValueError(
            f"degenerate split: probe size {probe_size} of {m} edges")
    rng = np.random.default_rng(seed)
    idx = rng.choice(m, size=probe_size, replace=False)
    probe_pairs = [(edges[i][0], edges[i][1]) for i in idx]
    train = subgraph_without_edges(g, probe_pairs)
    seed_repr = seed if isinstance(seed, int) else -1
    return SplitResult(train, ProbeSet.of(probe_pairs), seed_repr)


def _run_seed(master_seed: int, run: int, purpose: int) -> np.random.SeedSequence:
    return np.random.SeedSequence([int(master_seed), int(run), int(purpose)])


def _one_realization(g: WeightedGraph, spec: IndexSpec, run: int, L: int,
                     probe_fraction: float, master_seed: int) -> float:
    try:
        split = split_edges(g, probe_fraction,
                            _run_seed(master_seed, run, _PURPOSE_SPLIT))
        ranking = rank_candidates(split.train_graph, spec)
        n = split.train_graph.node_count
        total = n * (n - 1) // 2 - split.train_graph.edge_count
        return precision_at_L(ranking, split.probe, L,
                              _run_seed(master_seed, run, _PURPOSE_TIES),
                              total_candidates=total)
    except Exception as exc:
        raise RuntimeError(f"realization {run} failed: {exc}") from exc


def run_realizations(g: WeightedGraph, spec: IndexSpec, n_runs: int,
                     L: int = 100, probe_fraction: float = 0.1,
                     master_seed: int = 0,
                     n_workers: int = 1) -> ExperimentReport:
    """Repeat split/rank/precision ``n_runs`` times and aggregate.

    Deterministic for fixed inputs regardless of ``n_workers``: results are
    collected by run index and every run's RNGs derive from its own seeds.
    """
    if n_runs < 1:
        raise ValueError("n_runs must be >= 1")
    runs = range(n_runs)
    if n_workers == 1:
        per_run = [_one_realization(g, spec, i, L, probe_fraction,
                                    master_seed) for i in runs]
    else:
        workers = n_workers if n_workers > 0 else None
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_run = list(pool.map(
                lambda i: _one_realization(g, spec, i, L, probe_fraction,
                                           master_seed), runs))
    arr = np.array(per_run)
    # std is the sample (n-1) deviation; a single run reports 0 by convention
    std = float(arr.std(ddof=1)) if n_runs > 1 else 0.0
    return ExperimentReport(tuple(per_run), float(arr.mean()), std, spec,
                            L, n_runs, probe_fraction, int(master_seed))


def alpha_sweep(g: WeightedGraph, family: Family, grid: Sequence[float],
                n_runs: int, L: int = 100, probe_fraction: float = 0.1,
                master_seed: int = 0, n_workers: int = 1) -> SweepCurve:
    """One ``run_realizations`` per grid point with the weighted index at
    that exponent; split seeds depend only on (master_seed, run), so every
    alpha sees the same splits."""
    grid = [float(a) for a in grid]
    if not grid:
        raise ValueError("alpha grid is empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("alpha grid must be strictly increasing")
    reports = tuple(
        run_realizations(g, IndexSpec(family, alpha), n_runs, L,
                         probe_fraction, master_seed, n_workers)
        for alpha in grid)
    return SweepCurve(tuple(grid), reports, family)


def find_optimal_alpha(curve: SweepCurve) -> tuple[float, float]:
    """Grid point of maximal mean precision; ties break toward the alpha of
    smallest absolute value (closest to unweighted)."""
    best_alpha: Optional[float] = None
    best_mean = -1.0
    for alpha, report in zip(curve.grid, curve.reports):
        if report.mean > best_mean or (
                report.mean == best_mean and abs(alpha) < abs(best_alpha)):
            best_alpha, best_mean = alpha, report.mean
    return best_alpha, best_mean


def parse_grid(spec: str) -> list[float]:
    """Parse a ``min:max:step`` grid spec into an ascending alpha list,
    inclusive of the endpoint up to a half-step rounding slack."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid spec must be min:max:step, got {spec!r}")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError:
        raise ValueError(f"non-numeric grid spec {spec!r}") from None
    if step <= 0 or hi < lo:
        raise ValueError(f"invalid grid spec {spec!r}")
    count = int(np.floor((hi - lo) / step + 0.5)) + 1
    return [round(lo + i * step, 10) for i in range(count)]
