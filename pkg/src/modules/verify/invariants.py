"""
Cross-oracle invariants checked on one small generated instance.

Every check returns failure descriptions, an empty list when the instance passes.
"""
import logging
from functools import cached_property
from itertools import combinations
from typing import Callable

from src.constants import WEIGHT_TOLERANCE
from src.services.decomposition import (
    attach_components,
    components,
    components_bruteforce,
    hypergraph_components,
    tight_pair_value,
)
from src.services.exceptions import HyperspanError
from src.services.hypergraph import EdgeSubset, Hypergraph, gamma, subset_weight
from src.services.independence import (
    extend_check_fast,
    is_independent_definition,
    is_independent_matching,
    is_tight,
    probe_extension,
)
from src.services.matching import IncrementalMatcher
from src.services.skeleton import Skeleton, optimal_skeleton, skeleton_cardinality_bound
from src.services.testkit.oracles import (
    enumerate_bases,
    forest_components_q2,
    independent_masks,
    is_acyclic_q2,
    kruskal_mst,
)
from src.typings import EdgeId, Objective
from src.utils.subsets import mask_items, to_mask


logger = logging.getLogger(__name__)


def _decisions(s: Skeleton) -> list[tuple[EdgeId, bool]]:
    return [(decision.edge, decision.accepted) for decision in s.trace]


class InstanceChecks:
    """Invariants of one instance. Subset facts are indexed by bitmask over EdgeIds."""

    def __init__(self, h: Hypergraph):
        self.h = h
        self.full_mask = (1 << h.edge_count) - 1

    @cached_property
    def independent(self) -> list[bool]:
        return [is_independent_matching(self.h, mask_items(subset)).independent for subset in range(self.full_mask + 1)]

    @cached_property
    def bases(self) -> list[tuple[EdgeId, ...]]:
        return enumerate_bases(self.h)

    @cached_property
    def skeletons(self) -> dict[Objective, Skeleton]:
        return {obj: optimal_skeleton(self.h, obj) for obj in Objective}

    def oracle_equivalence(self) -> list[str]:
        failures = []
        by_masks = independent_masks(self.h)
        for subset in range(1, self.full_mask + 1):
            members = mask_items(subset)
            by_definition = is_independent_definition(self.h, members).independent
            if not by_definition == by_masks[subset] == self.independent[subset]:
                failures.append(f'oracles disagree on {members}')
        return failures

    def fast_extension(self) -> list[str]:
        failures = []
        for subset in range(self.full_mask + 1):
            if not self.independent[subset]:
                continue
            members = mask_items(subset)
            w = EdgeSubset.of(self.h, members)
            matcher = IncrementalMatcher.of(self.h, members)
            for a in mask_items(self.full_mask & ~subset):
                expected = self.independent[subset | 1 << a]
                single = extend_check_fast(self.h, w, a)
                strict = extend_check_fast(self.h, w, a, strict=True)
                incremental = probe_extension(self.h, w.members, to_mask(w.covered), EdgeId(a), matcher=matcher).accepted
                if not expected == single == strict == incremental:
                    failures.append(f'extension of {members} by {a}: expected {expected}')
        return failures

    def matroid_axioms(self) -> list[str]:
        failures = []
        independent_sets = [subset for subset in range(self.full_mask + 1) if self.independent[subset]]
        for subset in independent_sets:
            if not all(self.independent[subset ^ 1 << d] for d in mask_items(subset)):
                failures.append(f'hereditary axiom fails below {mask_items(subset)}')

        for smaller in independent_sets:
            for larger in independent_sets:
                if larger.bit_count() != smaller.bit_count() + 1:
                    continue
                if not any(self.independent[smaller | 1 << b] for b in mask_items(larger & ~smaller)):
                    failures.append(f'exchange axiom fails for {mask_items(smaller)}, {mask_items(larger)}')
        return failures

    def greedy(self) -> list[str]:
        failures = []
        h = self.h
        weights = [subset_weight(h, basis) for basis in self.bases]
        if len({len(basis) for basis in self.bases}) != 1:
            failures.append('bases differ in size')

        for obj, skeleton in self.skeletons.items():
            best = min(weights) if obj == Objective.MINIMIZE else max(weights)
            if abs(skeleton.total_weight - best) > WEIGHT_TOLERANCE:
                failures.append(f'{obj.value} skeleton weight {skeleton.total_weight}, best basis {best}')
            if skeleton.edges.members not in self.bases:
                failures.append(f'{obj.value} skeleton {list(skeleton.edges)} is not a basis')
            if skeleton.edges.covered != gamma(h, h.edge_ids):
                failures.append(f'{obj.value} skeleton does not span')
            if skeleton.matching_calls > h.edge_count:
                failures.append(f'{obj.value} skeleton used {skeleton.matching_calls} matching calls')

            accepted: list[EdgeId] = []
            for decision in skeleton.trace:
                replayed = self.independent[to_mask((*accepted, decision.edge))]
                if replayed != decision.accepted:
                    failures.append(f'{obj.value} decision on {decision.edge} differs from the matching oracle')
                if decision.accepted:
                    accepted.append(decision.edge)

            incremental = optimal_skeleton(h, obj, incremental=True)
            if incremental.edges != skeleton.edges or incremental.trace != skeleton.trace:
                failures.append(f'{obj.value} incremental skeleton differs')
            strict = optimal_skeleton(h, obj, strict_removals=True)
            if strict.edges != skeleton.edges or _decisions(strict) != _decisions(skeleton):
                failures.append(f'{obj.value} strict removals change the skeleton')
        return failures

    def two_uniform(self) -> list[str]:
        if self.h.q != 2:
            return []

        failures = []
        edges, weight = kruskal_mst(self.h)
        skeleton = self.skeletons[Objective.MINIMIZE]
        if weight != skeleton.total_weight:
            failures.append(f'kruskal weight {weight}, skeleton {skeleton.total_weight}')
        if len(set(self.h.weights)) == self.h.edge_count and edges != skeleton.edges.members:
            failures.append('kruskal forest differs under distinct weights')

        for subset in range(self.full_mask + 1):
            if is_acyclic_q2(self.h, mask_items(subset)) != self.independent[subset]:
                failures.append(f'acyclicity disagrees on {mask_items(subset)}')

        partition = components(self.h, skeleton.edges)
        if list(partition.parts) != forest_components_q2(self.h, skeleton.edges):
            failures.append('components differ from the forest components')
        return failures

    def decomposition(self) -> list[str]:
        failures = []
        h = self.h
        w = self.skeletons[Objective.MINIMIZE].edges
        partition = components(h, w)

        if partition.parts != components_bruteforce(h, w).parts:
            failures.append('components differ from the brute force')
        for part in partition.parts:
            if not is_tight(h, part):
                failures.append(f'part {list(part)} is not tight')
        for first, second in combinations(partition.parts, 2):
            if is_tight(h, (*first, *second)):
                failures.append(f'parts {list(first)} and {list(second)} merge into a tight set')

        for a, b in combinations(w.members, 2):
            value = tight_pair_value(h, w, a, b)
            together = partition.part_of(a) == partition.part_of(b)
            if value < h.q - 1 or (value == h.q - 1) != together:
                failures.append(f'tight pair value {value} for {a}, {b}')

        if not skeleton_cardinality_bound(h, attach_components(h, self.skeletons[Objective.MINIMIZE])):
            failures.append('skeleton size differs from the component bound')

        expected = hypergraph_components(h).induced_partition()
        for basis in self.bases:
            if hypergraph_components(h, basis).induced_partition() != expected:
                failures.append(f'components depend on the basis {list(basis)}')
        return failures

    def run(self) -> list[str]:
        failures = []
        for check in CHECKS:
            try:
                failures.extend(check(self))
            except HyperspanError as error:
                failures.append(f'{check.__name__} raised {type(error).__name__}: {error}')
        return failures


CHECKS: tuple[Callable[[InstanceChecks], list[str]], ...] = (
    InstanceChecks.oracle_equivalence,
    InstanceChecks.fast_extension,
    InstanceChecks.matroid_axioms,
    InstanceChecks.greedy,
    InstanceChecks.two_uniform,
    InstanceChecks.decomposition,
)
