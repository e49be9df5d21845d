import numpy as np
import pytest

from weakties import EdgeRecord, build_graph


@pytest.fixture
def ref_graph():
    """4-node graph: 1-3 w=2, 2-3 w=1, 1-4 w=1, 2-4 w=4."""
    return build_graph([
        EdgeRecord("1", "3", 2.0),
        EdgeRecord("2", "3", 1.0),
        EdgeRecord("1", "4", 1.0),
        EdgeRecord("2", "4", 4.0),
    ])


def random_records(rng: np.random.Generator, max_nodes: int,
                   avg_degree: float = 4.0, integer_weights: bool = False):
    """Random simple weighted graph as edge records; at least one edge."""
    n = int(rng.integers(3, max_nodes + 1))
    m_target = max(1, int(n * avg_degree / 2))
    pairs = set()
    while len(pairs) < min(m_target, n * (n - 1) // 2):
        x, y = rng.integers(0, n, size=2)
        if x != y:
            pairs.add((min(x, y), max(x, y)))
    records = []
    for x, y in sorted(pairs):
        if integer_weights:
            w = float(rng.integers(1, 10))
        else:
            w = float(rng.uniform(0.1, 5.0))
        records.append(EdgeRecord(f"n{x}", f"n{y}", w))
    return records


def random_graph(rng: np.random.Generator, max_nodes: int,
                 avg_degree: float = 4.0, integer_weights: bool = False):
    return build_graph(random_records(rng, max_nodes, avg_degree,
                                      integer_weights))
