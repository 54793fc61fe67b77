import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from src.metrics.prometheus.basic import SKELETON_DECISIONS
from src.metrics.prometheus.duration_meter import duration_meter
from src.services.exceptions import ComponentsNotComputed
from src.services.hypergraph import EdgeSubset, Hypergraph
from src.services.independence import ExtensionCase, probe_extension
from src.services.matching import IncrementalMatcher
from src.typings import EdgeId, Objective

if TYPE_CHECKING:
    from src.services.decomposition import ComponentPartition


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SkeletonDecision:
    edge: EdgeId
    case: ExtensionCase
    matching_calls: int

    @property
    def accepted(self) -> bool:
        return self.case != ExtensionCase.MATCHING_REJECTED


@dataclass(frozen=True)
class Skeleton:
    edges: EdgeSubset
    objective: Objective
    trace: tuple[SkeletonDecision, ...]
    components: 'ComponentPartition | None' = None

    @property
    def total_weight(self) -> float:
        return self.edges.weight

    @property
    def matching_calls(self) -> int:
        return sum(decision.matching_calls for decision in self.trace)


def candidate_order(h: Hypergraph, obj: Objective = Objective.MINIMIZE) -> list[EdgeId]:
    """Edges by weight, ties by EdgeId. Stable sort keeps ties ascending in both directions."""
    return sorted(
        (EdgeId(d) for d in h.edge_ids),
        key=h.weights.__getitem__,
        reverse=obj == Objective.MAXIMIZE,
    )


class SkeletonBuilder:
    def __init__(self, h: Hypergraph, strict_removals: bool = False, incremental: bool = False):
        self.h = h
        self.strict_removals = strict_removals
        self.matcher = IncrementalMatcher(h) if incremental else None
        self.members: list[EdgeId] = []
        self.covered_mask = 0
        self.trace: list[SkeletonDecision] = []

    def build(self, obj: Objective) -> Skeleton:
        for d in candidate_order(self.h, obj):
            self.trace.append(self.decide(d))

        return Skeleton(
            edges=EdgeSubset.of(self.h, self.members),
            objective=obj,
            trace=tuple(self.trace),
        )

    def decide(self, d: EdgeId) -> SkeletonDecision:
        result = probe_extension(
            self.h,
            self.members,
            self.covered_mask,
            d,
            strict=self.strict_removals,
            matcher=self.matcher,
        )
        decision = SkeletonDecision(edge=d, case=result.case, matching_calls=result.matching_calls)
        SKELETON_DECISIONS.labels(result.case.value).inc()
        logger.debug({
            'msg': 'Skeleton decision.',
            'edge': self.h.label(d),
            'case': result.case.value,
            'matching_calls': result.matching_calls,
        })

        if result.accepted:
            self.members.append(d)
            self.covered_mask |= self.h.edge_masks[d]
            if self.matcher is not None:
                self.matcher.try_extend(d)

        return decision


@duration_meter()
def optimal_skeleton(
    h: Hypergraph,
    obj: Objective = Objective.MINIMIZE,
    strict_removals: bool = False,
    incremental: bool = False,
) -> Skeleton:
    """
    Matroid greedy over the edges sorted by weight: accept each edge that keeps the set a hyperforest.

    For MINIMIZE the result has the least total weight among all skeletons, for MAXIMIZE the largest.
    Incremental matching and strict removals change the work done, never the decisions.
    """
    skeleton = SkeletonBuilder(h, strict_removals=strict_removals, incremental=incremental).build(obj)
    logger.info({
        'msg': 'Skeleton built.',
        'objective': obj.value,
        'edges': len(skeleton.edges),
        'weight': skeleton.total_weight,
        'matching_calls': skeleton.matching_calls,
    })
    return skeleton


def skeleton_cardinality_bound(h: Hypergraph, s: Skeleton) -> bool:
    """|W| equals the sum over components of |ΓT_i| - q + 1."""
    if s.components is None:
        raise ComponentsNotComputed('Skeleton has no component partition attached.')

    expected = sum(len(cover) - h.q + 1 for cover in s.components.vertex_covers)
    return len(s.edges) == expected
