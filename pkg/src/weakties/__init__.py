"""Link prediction on weighted undirected networks with local similarity
indices, including weighted variants with a tunable weight exponent."""

__version__ = "0.1.0"

from .errors import GraphError, ParseError, WeaktiesError
from .experiment import (ExperimentReport, SplitResult, SweepCurve,
                         alpha_sweep, find_optimal_alpha, parse_grid,
                         run_realizations, split_edges)
from .graph import EdgeRecord, WeightedGraph, build_graph
from .indices import Family, IndexSpec, ScoredPair, rank_candidates, score_pair
from .ingest import (PaperRecord, newman_coauthorship_weights, parse_edgelist,
                     parse_pajek, parse_papers)
from .metrics import ProbeSet, auc, precision_at_L

__all__ = [
    "EdgeRecord", "WeightedGraph", "build_graph",
    "Family", "IndexSpec", "ScoredPair", "score_pair", "rank_candidates",
    "ProbeSet", "precision_at_L", "auc",
    "SplitResult", "ExperimentReport", "SweepCurve", "split_edges",
    "run_realizations", "alpha_sweep", "find_optimal_alpha", "parse_grid",
    "PaperRecord", "parse_pajek", "parse_edgelist", "parse_papers",
    "newman_coauthorship_weights",
    "WeaktiesError", "GraphError", "ParseError",
]
