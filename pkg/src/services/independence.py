import logging
from dataclasses import dataclass
from enum import StrEnum
from functools import reduce
from itertools import combinations
from operator import or_
from typing import Iterable, Sequence

from src import variables
from src.metrics.prometheus.basic import MATCHING_CALLS
from src.services.exceptions import NotIndependent, SubsetTooLargeForExhaustiveOracle
from src.services.hypergraph import EdgeSubset, Hypergraph, gamma
from src.services.matching import IncrementalMatcher, Matching, build_konig, complete_matching
from src.typings import EdgeId, MatchingMode, VertexId
from src.utils.subsets import nonempty_subsets_by_size, to_mask


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndependenceVerdict:
    independent: bool
    # Minimum violating subset, from the definition oracle
    witness_edges: tuple[EdgeId, ...] | None = None
    # Removal set without a complete matching, from the matching oracles
    witness_removal: tuple[VertexId, ...] | None = None


class ExtensionCase(StrEnum):
    NEW_VERTEX = 'new-vertex'
    MATCHING_ACCEPTED = 'matching-accepted'
    MATCHING_REJECTED = 'matching-rejected'


@dataclass(frozen=True)
class ExtensionResult:
    case: ExtensionCase
    matching_calls: int
    # Failing removal on rejection, last tested removal on acceptance
    removal: tuple[VertexId, ...] | None = None

    @property
    def accepted(self) -> bool:
        return self.case != ExtensionCase.MATCHING_REJECTED


def phi(h: Hypergraph, a: Iterable[int]) -> int:
    members = h.check_edges(a)
    if not members:
        return 0
    return len(gamma(h, members)) - h.q + 1


def is_independent_definition(h: Hypergraph, a: Iterable[int]) -> IndependenceVerdict:
    """
    Checks |ΓA'| - q + 1 >= |A'| for every nonempty A' ⊆ a.

    Subsets are scanned by size then lexicographically, so the witness is the smallest violating subset.
    """
    members = h.check_edges(a)
    if len(members) > variables.EXHAUSTIVE_ORACLE_MAX_SUBSET:
        raise SubsetTooLargeForExhaustiveOracle(
            f'{len(members)} edges exceed the exhaustive oracle cap {variables.EXHAUSTIVE_ORACLE_MAX_SUBSET}.'
        )

    masks = h.edge_masks
    for subset in nonempty_subsets_by_size(members):
        covered = reduce(or_, (masks[d] for d in subset)).bit_count()
        if covered - h.q + 1 < len(subset):
            return IndependenceVerdict(independent=False, witness_edges=subset)
    return IndependenceVerdict(independent=True)


def is_independent_matching(h: Hypergraph, a: Iterable[int]) -> IndependenceVerdict:
    """Complete matching after every removal of q - 1 covered vertices, removals in lexicographic order."""
    members = h.check_edges(a)
    if not members:
        return IndependenceVerdict(independent=True)

    k = build_konig(h, members)
    previous: Matching | None = None
    for removal in combinations(k.right, h.q - 1):
        MATCHING_CALLS.labels(MatchingMode.REBUILD.value).inc()
        matching = complete_matching(k, removal, warm_start=previous)
        if matching is None:
            return IndependenceVerdict(independent=False, witness_removal=removal)
        previous = matching
    return IndependenceVerdict(independent=True)


def default_removal(h: Hypergraph, a: EdgeId) -> tuple[VertexId, ...]:
    """The q - 1 smallest vertices of the edge."""
    return h.sorted_edges[a][:h.q - 1]


def strict_removals(h: Hypergraph, a: EdgeId) -> list[tuple[VertexId, ...]]:
    return list(combinations(h.sorted_edges[a], h.q - 1))


def probe_extension(
    h: Hypergraph,
    members: Sequence[EdgeId],
    covered_mask: int,
    a: EdgeId,
    strict: bool = False,
    matcher: IncrementalMatcher | None = None,
) -> ExtensionResult:
    """
    Decides whether independent `members` stays independent with `a` added.

    An edge with a vertex outside `covered_mask` is accepted without a matching test.
    Otherwise one removal inside Γa is tested (every q - 1 subset of Γa when strict).
    Nothing is committed into the matcher.
    """
    if h.edge_masks[a] & ~covered_mask:
        return ExtensionResult(case=ExtensionCase.NEW_VERTEX, matching_calls=0)

    removals = strict_removals(h, a) if strict else [default_removal(h, a)]
    mode = MatchingMode.INCREMENTAL if matcher is not None else MatchingMode.REBUILD
    konig = None if matcher is not None else build_konig(h, (*members, a))

    calls = 0
    for removal in removals:
        calls += 1
        MATCHING_CALLS.labels(mode.value).inc()
        if matcher is not None:
            found = matcher.try_extend(a, removal, commit=False)
        else:
            found = complete_matching(konig, removal) is not None

        logger.debug({'msg': 'Matching probe.', 'edge': a, 'removal': removal, 'mode': mode.value, 'value': found})
        if not found:
            return ExtensionResult(case=ExtensionCase.MATCHING_REJECTED, matching_calls=calls, removal=removal)

    return ExtensionResult(case=ExtensionCase.MATCHING_ACCEPTED, matching_calls=calls, removal=removals[-1])


def extend_check_fast(h: Hypergraph, w: EdgeSubset, a: int, strict: bool = False) -> bool:
    # Rejects a ∈ w and unknown ids
    w.with_edge(h, a)

    if variables.DEBUG_VERIFY_PRECONDITIONS:
        verdict = is_independent_matching(h, w)
        if not verdict.independent:
            raise NotIndependent(f'Edge set {list(w)} is dependent, removal {verdict.witness_removal} fails.')

    return probe_extension(h, w.members, to_mask(w.covered), EdgeId(a), strict=strict).accepted


def is_tight(h: Hypergraph, a: Iterable[int]) -> bool:
    members = h.check_edges(a)
    if not members:
        return False
    return len(gamma(h, members)) - h.q + 1 == len(members)


def is_hypertree(h: Hypergraph, w: Iterable[int]) -> bool:
    members = h.check_edges(w)
    return is_tight(h, members) and is_independent_matching(h, members).independent
