import logging
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterable, Mapping

from src import variables
from src.metrics.prometheus.duration_meter import duration_meter
from src.services.exceptions import (
    DecompositionError,
    EdgeNotInForest,
    InconsistentDecomposition,
    LinkAmbiguity,
    NotIndependent,
    SubsetTooLargeForExhaustiveOracle,
)
from src.services.flow import Dinic, FlowNetwork, max_flow
from src.services.hypergraph import EdgeSubset, Hypergraph, gamma
from src.services.independence import default_removal, is_independent_matching
from src.services.matching import build_konig, has_complete_matching
from src.services.skeleton import Skeleton, optimal_skeleton
from src.typings import EdgeId, VertexId
from src.utils.subsets import mask_items
from src.utils.union_find import UnionFind


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComponentPartition:
    """
    Parts T_1..T_b of a hyperforest, ordered by smallest EdgeId.

    `link_assignment` maps every edge outside the hyperforest to its part index once links are classified.
    """
    parts: tuple[tuple[EdgeId, ...], ...]
    vertex_covers: tuple[frozenset[VertexId], ...]
    link_assignment: Mapping[EdgeId, int] | None = None

    @property
    def count(self) -> int:
        return len(self.parts)

    def part_of(self, d: EdgeId) -> int:
        for index, part in enumerate(self.parts):
            if d in part:
                return index
        if self.link_assignment is not None and d in self.link_assignment:
            return self.link_assignment[d]
        raise EdgeNotInForest(f'Edge {d} is in no part.')

    def links_of(self, i: int) -> tuple[EdgeId, ...]:
        if self.link_assignment is None:
            return ()
        return tuple(sorted(d for d, part in self.link_assignment.items() if part == i))

    def induced(self, i: int) -> tuple[EdgeId, ...]:
        """D_i = T_i + H_i, ascending."""
        return tuple(sorted((*self.parts[i], *self.links_of(i))))

    def induced_partition(self) -> frozenset[frozenset[EdgeId]]:
        return frozenset(frozenset(self.induced(i)) for i in range(self.count))


def _partition(h: Hypergraph, groups: Iterable[Iterable[EdgeId]]) -> ComponentPartition:
    parts = sorted((tuple(sorted(group)) for group in groups), key=lambda part: part[0])
    return ComponentPartition(
        parts=tuple(parts),
        vertex_covers=tuple(gamma(h, part) for part in parts),
    )


def _check_independent(h: Hypergraph, w: EdgeSubset):
    if variables.DEBUG_VERIFY_PRECONDITIONS:
        verdict = is_independent_matching(h, w)
        if not verdict.independent:
            raise NotIndependent(f'Edge set {list(w)} is dependent, removal {verdict.witness_removal} fails.')


def tight_pair_value(h: Hypergraph, w: EdgeSubset, a: int, b: int) -> int:
    """min over A ⊆ W with a, b ∈ A of |ΓA| - |A|, by one min cut."""
    for d in (a, b):
        if d not in w:
            raise EdgeNotInForest(f'Edge {d} is not in the hyperforest.')
    if a == b:
        raise DecompositionError(f'Tight pair needs two distinct edges, got {a} twice.')

    k = build_konig(h, w)
    network = FlowNetwork.bipartite(k.adjacency, len(k.right), forced=(k.left.index(a), k.left.index(b)))
    return max_flow(network) - len(w)


@duration_meter()
def components(h: Hypergraph, w: EdgeSubset) -> ComponentPartition:
    """
    Maximal tight subsets of an independent w.

    With edge a forced, a maximum flow has value |W| + q - 1 and the edges whose nodes cannot
    reach the sink in the residual network form the union of all tight sets containing a.
    """
    _check_independent(h, w)
    if not w.members:
        return ComponentPartition(parts=(), vertex_covers=())

    k = build_konig(h, w)
    union_find = UnionFind(k.left)
    assigned: set[EdgeId] = set()

    for position, a in enumerate(k.left):
        if a in assigned:
            continue

        network = FlowNetwork.bipartite(k.adjacency, len(k.right), forced=(position,))
        dinic = Dinic(network)
        value = dinic.run()
        if value < len(w) + h.q - 1:
            raise NotIndependent(f'Edge set {list(w)} is dependent, cut value {value} below {len(w) + h.q - 1}.')

        reachable = dinic.sink_reachable()
        for other, b in enumerate(k.left):
            if network.left_node(other) not in reachable:
                union_find.union(a, b)
                assigned.add(b)

    partition = _partition(h, union_find.groups())
    logger.info({'msg': 'Components computed.', 'edges': len(w), 'value': partition.count})
    return partition


def components_bruteforce(h: Hypergraph, w: EdgeSubset) -> ComponentPartition:
    members = w.members
    if len(members) > variables.BRUTEFORCE_COMPONENTS_MAX_EDGES:
        raise SubsetTooLargeForExhaustiveOracle(
            f'{len(members)} edges exceed the brute-force cap {variables.BRUTEFORCE_COMPONENTS_MAX_EDGES}.'
        )
    if not members:
        return ComponentPartition(parts=(), vertex_covers=())

    # Covered vertices per subset of positions, built from the subset without its lowest bit
    covered = [0] * (1 << len(members))
    tight = []
    for subset in range(1, 1 << len(members)):
        low = subset & -subset
        covered[subset] = covered[subset ^ low] | h.edge_masks[members[low.bit_length() - 1]]
        if covered[subset].bit_count() - h.q + 1 == subset.bit_count():
            tight.append(subset)

    # Largest first: a tight set with a tight superset lies inside an already found maximal set
    maximal: list[int] = []
    for subset in sorted(tight, key=int.bit_count, reverse=True):
        if not any(subset & found == subset for found in maximal):
            maximal.append(subset)

    for first, second in combinations(maximal, 2):
        if first & second:
            raise InconsistentDecomposition(
                f'Maximal tight sets {mask_items(first)} and {mask_items(second)} overlap.'
            )

    # Singletons are tight, so the maximal sets already cover every edge
    return _partition(h, ([members[position] for position in mask_items(subset)] for subset in maximal))


@duration_meter()
def classify_links(h: Hypergraph, w: EdgeSubset, partition: ComponentPartition) -> ComponentPartition:
    """
    Assigns each edge outside the skeleton to the one part it closes a circuit with.

    Zero or several candidate parts mean w is not a skeleton or the partition is wrong.
    """
    link_assignment: dict[EdgeId, int] = {}
    for d in h.edge_ids:
        d = EdgeId(d)
        if d in w:
            continue

        removal = default_removal(h, d)
        candidates = [
            index
            for index, (part, cover) in enumerate(zip(partition.parts, partition.vertex_covers))
            if h.edge_sets[d] <= cover and not has_complete_matching(build_konig(h, (*part, d)), removal)
        ]
        if len(candidates) != 1:
            raise LinkAmbiguity(f'Edge {h.label(d)} closes a circuit with parts {candidates}, expected exactly one.')
        link_assignment[d] = candidates[0]

    return replace(partition, link_assignment=link_assignment)


@duration_meter()
def hypergraph_components(h: Hypergraph, basis: Iterable[int] | None = None) -> ComponentPartition:
    """
    Components D_1..D_b of the whole hypergraph.

    Without `basis` a skeleton is built with unit weights. The partition does not depend on the skeleton.
    """
    if basis is None:
        unit = replace(h, weights=(1.0,) * h.edge_count)
        w = optimal_skeleton(unit).edges
    else:
        w = EdgeSubset.of(h, basis)

    return classify_links(h, w, components(h, w))


def attach_components(h: Hypergraph, s: Skeleton) -> Skeleton:
    return replace(s, components=classify_links(h, s.edges, components(h, s.edges)))
