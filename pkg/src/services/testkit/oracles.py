"""Exhaustive and classical oracles the fast algorithms are checked against."""
from itertools import product
from typing import Iterable

from src import variables
from src.services.exceptions import InconsistentBases, NotTwoUniform, TooLarge
from src.services.hypergraph import Hypergraph, subset_weight
from src.services.matching import KonigGraph
from src.typings import EdgeId, VertexId
from src.utils.subsets import mask_items
from src.utils.union_find import UnionFind


def independent_masks(h: Hypergraph) -> list[bool]:
    """Independence of every edge subset, indexed by bitmask over EdgeIds."""
    m = h.edge_count
    covered = [0] * (1 << m)
    independent = [False] * (1 << m)
    independent[0] = True

    for subset in range(1, 1 << m):
        low = subset & -subset
        covered[subset] = covered[subset ^ low] | h.edge_masks[low.bit_length() - 1]
        size = subset.bit_count()
        if covered[subset].bit_count() - h.q + 1 < size:
            continue
        # Hereditary: checking the subsets one smaller covers all nonempty subsets
        independent[subset] = all(independent[subset ^ (1 << d)] for d in mask_items(subset))
    return independent


def enumerate_bases(h: Hypergraph) -> list[tuple[EdgeId, ...]]:
    if h.edge_count > variables.ENUMERATE_BASES_MAX_EDGES:
        raise TooLarge(f'{h.edge_count} edges exceed the enumeration cap {variables.ENUMERATE_BASES_MAX_EDGES}.')

    independent = independent_masks(h)
    full = (1 << h.edge_count) - 1
    bases = [
        subset for subset in range(1 << h.edge_count)
        if independent[subset] and not any(independent[subset | (1 << d)] for d in mask_items(full & ~subset))
    ]

    sizes = {subset.bit_count() for subset in bases}
    if len(sizes) > 1:
        raise InconsistentBases(f'Bases of different sizes {sorted(sizes)}.')

    return sorted(tuple(EdgeId(d) for d in mask_items(subset)) for subset in bases)


def kruskal_mst(h: Hypergraph) -> tuple[tuple[EdgeId, ...], float]:
    if h.q != 2:
        raise NotTwoUniform(f'Kruskal needs an ordinary graph, got q={h.q}.')

    union_find: UnionFind[VertexId] = UnionFind()
    forest = []
    for d in sorted(h.edge_ids, key=lambda d: (h.weights[d], d)):
        u, v = h.edges[d]
        if union_find.union(u, v):
            forest.append(EdgeId(d))

    forest.sort()
    return tuple(forest), subset_weight(h, forest)


def brute_force_complete_matching(k: KonigGraph, removed: Iterable[VertexId] = ()) -> bool:
    """Tries every assignment of edge nodes to allowed vertex nodes."""
    blocked = k.removed_mask | k.removal_mask(removed)
    choices = [[right for right in neighbours if not blocked >> right & 1] for neighbours in k.adjacency]
    return any(len(set(assignment)) == len(assignment) for assignment in product(*choices))


def is_acyclic_q2(h: Hypergraph, a: Iterable[int]) -> bool:
    if h.q != 2:
        raise NotTwoUniform(f'Acyclicity check needs an ordinary graph, got q={h.q}.')

    union_find: UnionFind[VertexId] = UnionFind()
    return all(union_find.union(*h.edges[d]) for d in h.check_edges(a))


def forest_components_q2(h: Hypergraph, w: Iterable[int]) -> list[tuple[EdgeId, ...]]:
    """Edge sets of the connected components of a q=2 forest, ordered by smallest EdgeId."""
    if h.q != 2:
        raise NotTwoUniform(f'Forest components need an ordinary graph, got q={h.q}.')

    members = h.check_edges(w)
    union_find: UnionFind[VertexId] = UnionFind()
    for d in members:
        union_find.union(*h.edges[d])

    groups: dict[VertexId, list[EdgeId]] = {}
    for d in members:
        groups.setdefault(union_find.find(h.edges[d][0]), []).append(d)
    return sorted((tuple(group) for group in groups.values()), key=lambda group: group[0])
