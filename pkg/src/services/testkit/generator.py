"""
Seeded instance generators.

The RNG is numpy's PCG64 seeded with `GenConfig.seed`, so a seed names one instance on every platform.
"""
import math
from dataclasses import dataclass, replace
from itertools import combinations

import numpy as np

from src.services.exceptions import InfeasibleConfig
from src.services.hypergraph import Hypergraph, new_hypergraph
from src.services.skeleton import optimal_skeleton

# Above this many q-subsets edges are drawn by rejection instead of from the full list
EXPLICIT_SUBSETS_LIMIT = 100_000


@dataclass(frozen=True)
class GenConfig:
    seed: int
    q: int
    vertex_count: int
    edge_count: int
    weight_range: tuple[float, float] = (0.0, 10.0)
    distinct_weights: bool = False

    def validate(self):
        lo, hi = self.weight_range
        if self.seed < 0:
            raise InfeasibleConfig(f'Seed must be nonnegative, got {self.seed}.')
        if self.q < 2 or self.vertex_count < 0 or self.edge_count < 0:
            raise InfeasibleConfig(f'Bad sizes q={self.q}, vertices={self.vertex_count}, edges={self.edge_count}.')
        if self.edge_count > math.comb(self.vertex_count, self.q):
            raise InfeasibleConfig(
                f'{self.edge_count} edges do not fit into C({self.vertex_count}, {self.q}) vertex sets.'
            )
        if not (math.isfinite(lo) and math.isfinite(hi)) or lo < 0 or lo > hi:
            raise InfeasibleConfig(f'Bad weight range [{lo}, {hi}].')
        if self.distinct_weights and lo == hi and self.edge_count > 1:
            raise InfeasibleConfig(f'Weight range [{lo}, {hi}] cannot hold {self.edge_count} distinct weights.')

    def rng(self) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(self.seed))


def _sample_edges(cfg: GenConfig, rng: np.random.Generator) -> list[tuple[int, ...]]:
    total = math.comb(cfg.vertex_count, cfg.q)
    if total <= EXPLICIT_SUBSETS_LIMIT:
        subsets = list(combinations(range(cfg.vertex_count), cfg.q))
        picked = rng.choice(total, size=cfg.edge_count, replace=False)
        return [subsets[int(index)] for index in picked]

    seen: set[tuple[int, ...]] = set()
    edges = []
    while len(edges) < cfg.edge_count:
        edge = tuple(sorted(int(vertex) for vertex in rng.choice(cfg.vertex_count, size=cfg.q, replace=False)))
        if edge not in seen:
            seen.add(edge)
            edges.append(edge)
    return edges


def _sample_weights(cfg: GenConfig, rng: np.random.Generator) -> list[float]:
    lo, hi = cfg.weight_range
    if cfg.distinct_weights:
        return [float(weight) for weight in rng.permutation(np.linspace(lo, hi, cfg.edge_count))]

    # Integer weights make ties common
    low, high = math.ceil(lo), math.floor(hi)
    if low <= high:
        return [float(weight) for weight in rng.integers(low, high, endpoint=True, size=cfg.edge_count)]
    return [float(weight) for weight in rng.uniform(lo, hi, size=cfg.edge_count)]


def random_hypergraph(cfg: GenConfig) -> Hypergraph:
    cfg.validate()
    rng = cfg.rng()
    edges = _sample_edges(cfg, rng)
    weights = _sample_weights(cfg, rng)
    return new_hypergraph(cfg.q, cfg.vertex_count, edges, weights)


def random_hyperforest(cfg: GenConfig) -> Hypergraph:
    """The edges of a skeleton of `random_hypergraph(cfg)` picked in random order, with their weights."""
    h = random_hypergraph(cfg)
    order = cfg.rng().permutation(h.edge_count)
    shuffled = replace(h, weights=tuple(float(rank) for rank in order))
    forest = optimal_skeleton(shuffled).edges.members

    return new_hypergraph(
        h.q,
        h.vertex_count,
        [h.edges[d] for d in forest],
        [h.weights[d] for d in forest],
    )
