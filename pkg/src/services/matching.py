import logging
import sys
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Self, Sequence

from src.services.exceptions import EmptySubset, NotIndependent, RemovedVertexNotInGraph
from src.services.hypergraph import Hypergraph, gamma
from src.typings import EdgeId, VertexId
from src.utils.subsets import mask_items


logger = logging.getLogger(__name__)

UNMATCHED = -1
UNREACHED = sys.maxsize


@dataclass(frozen=True)
class KonigGraph:
    """
    Bipartite incidence graph of an edge set: edge nodes on the left, covered vertices on the right.

    Adjacency and the removal mask are expressed in right positions (indices into `right`).
    """
    left: tuple[EdgeId, ...]
    right: tuple[VertexId, ...]
    adjacency: tuple[tuple[int, ...], ...]
    removed_mask: int = 0

    @cached_property
    def right_position(self) -> dict[VertexId, int]:
        return {vertex: position for position, vertex in enumerate(self.right)}

    @property
    def removed(self) -> frozenset[VertexId]:
        return frozenset(self.right[position] for position in mask_items(self.removed_mask))

    def removal_mask(self, removed: Iterable[VertexId]) -> int:
        mask = 0
        for vertex in removed:
            try:
                mask |= 1 << self.right_position[vertex]
            except KeyError as error:
                raise RemovedVertexNotInGraph(f'Vertex {vertex} is not on the right side of the graph.') from error
        return mask

    def with_removed(self, removed: Iterable[VertexId]) -> Self:
        return KonigGraph(
            left=self.left,
            right=self.right,
            adjacency=self.adjacency,
            removed_mask=self.removed_mask | self.removal_mask(removed),
        )


def build_konig(h: Hypergraph, a: Iterable[int]) -> KonigGraph:
    members = h.check_edges(a)
    if not members:
        raise EmptySubset('König representation needs at least one edge.')

    right = tuple(sorted(gamma(h, members)))
    position = {vertex: index for index, vertex in enumerate(right)}
    adjacency = tuple(
        tuple(position[vertex] for vertex in h.sorted_edges[d])
        for d in members
    )
    return KonigGraph(left=tuple(members), right=right, adjacency=adjacency)


@dataclass(frozen=True)
class Matching:
    assign: Mapping[EdgeId, VertexId]
    left_count: int

    @property
    def size(self) -> int:
        return len(self.assign)

    @property
    def complete(self) -> bool:
        return len(self.assign) == self.left_count


class HopcroftKarp:
    """
    Maximum matching on a left-indexed adjacency. Blocked right positions are skipped.

    One instance is one search: it owns its scratch state, so distinct searches on the same
    graph are independent. Both phases are iterative, left sides can be thousands of nodes deep.
    """

    def __init__(self, adjacency: Sequence[Sequence[int]], right_count: int, blocked: int = 0):
        self.adjacency = adjacency
        self.blocked = blocked
        self.match_left = [UNMATCHED] * len(adjacency)
        self.match_right = [UNMATCHED] * right_count
        self.distance = [UNREACHED] * len(adjacency)
        self.pointer = [0] * len(adjacency)

    def seed(self, pairs: Mapping[int, int]):
        """Start from a previous matching. Pairs that are no longer valid are dropped."""
        for left, right in pairs.items():
            if not 0 <= left < len(self.adjacency) or right not in self.adjacency[left]:
                continue
            if self.blocked >> right & 1:
                continue
            if self.match_left[left] != UNMATCHED or self.match_right[right] != UNMATCHED:
                continue
            self.match_left[left] = right
            self.match_right[right] = left

    def run(self) -> int:
        size = sum(1 for right in self.match_left if right != UNMATCHED)
        while self._bfs():
            self.pointer = [0] * len(self.adjacency)
            for left in range(len(self.adjacency)):
                if self.match_left[left] == UNMATCHED and self._dfs(left):
                    size += 1
        return size

    def pairs(self) -> dict[int, int]:
        return {left: right for left, right in enumerate(self.match_left) if right != UNMATCHED}

    def _bfs(self) -> bool:
        queue: deque[int] = deque()
        for left, right in enumerate(self.match_left):
            if right == UNMATCHED:
                self.distance[left] = 0
                queue.append(left)
            else:
                self.distance[left] = UNREACHED

        found = False
        while queue:
            left = queue.popleft()
            for right in self.adjacency[left]:
                if self.blocked >> right & 1:
                    continue
                owner = self.match_right[right]
                if owner == UNMATCHED:
                    found = True
                elif self.distance[owner] == UNREACHED:
                    self.distance[owner] = self.distance[left] + 1
                    queue.append(owner)
        return found

    def _dfs(self, root: int) -> bool:
        stack = [root]
        # chosen[i] is the right node used to leave stack[i]
        chosen: list[int] = []

        while stack:
            left = stack[-1]
            neighbours = self.adjacency[left]
            advanced = False

            while self.pointer[left] < len(neighbours):
                right = neighbours[self.pointer[left]]
                self.pointer[left] += 1
                if self.blocked >> right & 1:
                    continue

                owner = self.match_right[right]
                if owner == UNMATCHED:
                    chosen.append(right)
                    for path_left, path_right in zip(stack, chosen):
                        self.match_left[path_left] = path_right
                        self.match_right[path_right] = path_left
                    return True

                if self.distance[owner] == self.distance[left] + 1:
                    chosen.append(right)
                    stack.append(owner)
                    advanced = True
                    break

            if not advanced:
                self.distance[left] = UNREACHED
                stack.pop()
                if chosen:
                    chosen.pop()

        return False


def _quick_reject(k: KonigGraph, blocked: int) -> bool:
    free_right = len(k.right) - blocked.bit_count()
    if free_right < len(k.left):
        return True
    return any(all(blocked >> right & 1 for right in neighbours) for neighbours in k.adjacency)


def maximum_matching(
    k: KonigGraph,
    removed: Iterable[VertexId] = (),
    warm_start: Matching | None = None,
) -> Matching:
    blocked = k.removed_mask | k.removal_mask(removed)
    search = HopcroftKarp(k.adjacency, len(k.right), blocked)

    if warm_start is not None:
        left_position = {d: index for index, d in enumerate(k.left)}
        search.seed({
            left_position[d]: k.right_position[vertex]
            for d, vertex in warm_start.assign.items()
            if d in left_position and vertex in k.right_position
        })

    search.run()
    return Matching(
        assign={k.left[left]: k.right[right] for left, right in search.pairs().items()},
        left_count=len(k.left),
    )


def complete_matching(
    k: KonigGraph,
    removed: Iterable[VertexId] = (),
    warm_start: Matching | None = None,
) -> Matching | None:
    """A matching saturating every edge node after the removals, or None when there is none."""
    removed = tuple(removed)
    if _quick_reject(k, k.removed_mask | k.removal_mask(removed)):
        return None

    matching = maximum_matching(k, removed, warm_start)
    return matching if matching.complete else None


def has_complete_matching(
    k: KonigGraph,
    removed: Iterable[VertexId] = (),
    warm_start: Matching | None = None,
) -> bool:
    return complete_matching(k, removed, warm_start) is not None


_MISSING = object()


@dataclass
class IncrementalMatcher:
    """
    Complete matching of a growing hyperforest, kept between extension probes.

    `try_extend` unmatches the edges matched into the removal set and re-augments them together
    with the candidate, never touching removed vertices. A free edge without an augmenting path
    proves there is no complete matching. Every write is journaled so a failed or uncommitted probe
    restores the previous matching exactly.
    """
    h: Hypergraph
    members: list[EdgeId] = field(default_factory=list)
    assign: dict[EdgeId, VertexId] = field(default_factory=dict)
    owner: dict[VertexId, EdgeId] = field(default_factory=dict)
    _journal: list[tuple[dict, object, object]] = field(default_factory=list)

    @classmethod
    def of(cls, h: Hypergraph, members: Iterable[int] = ()) -> Self:
        """
        Matcher seeded with `members`, which must already be independent.

        Only a plain complete matching is checked, so a dependent set that still matches is accepted.
        """
        matcher = cls(h)
        checked = h.check_edges(members)
        for d in checked:
            if not matcher.try_extend(d):
                raise NotIndependent(f'Edge set {checked} has no complete matching.')
        return matcher

    def try_extend(self, a: EdgeId, removed: Iterable[VertexId] = (), commit: bool = True) -> bool:
        blocked = frozenset(removed)
        self._journal.clear()

        displaced = [self.owner[vertex] for vertex in sorted(blocked) if vertex in self.owner]
        for d in displaced:
            self._unmatch(d)

        for d in (*displaced, a):
            if not self._augment(d, blocked):
                logger.debug({'msg': 'No augmenting path.', 'edge': d, 'candidate': a})
                self._rollback()
                return False

        if commit:
            self.members.append(a)
            self._journal.clear()
        else:
            self._rollback()
        return True

    def matching(self) -> Matching:
        return Matching(assign=dict(self.assign), left_count=len(self.members))

    def _augment(self, root: EdgeId, blocked: frozenset[VertexId]) -> bool:
        # Breadth-first search for a free vertex; parent links rebuild the alternating path
        parent: dict[EdgeId, tuple[EdgeId, VertexId] | None] = {root: None}
        queue = deque([root])
        seen: set[VertexId] = set()

        while queue:
            d = queue.popleft()
            for vertex in self.h.sorted_edges[d]:
                if vertex in blocked or vertex in seen:
                    continue
                seen.add(vertex)
                holder = self.owner.get(vertex)
                if holder is None:
                    self._flip(d, vertex, parent)
                    return True
                if holder not in parent:
                    parent[holder] = (d, vertex)
                    queue.append(holder)
        return False

    def _flip(self, d: EdgeId, vertex: VertexId, parent: dict[EdgeId, tuple[EdgeId, VertexId] | None]):
        while True:
            self._write(self.assign, d, vertex)
            self._write(self.owner, vertex, d)
            step = parent[d]
            if step is None:
                return
            d, vertex = step

    def _unmatch(self, d: EdgeId):
        vertex = self.assign[d]
        self._write(self.assign, d, _MISSING)
        self._write(self.owner, vertex, _MISSING)

    def _write(self, mapping: dict, key, value):
        self._journal.append((mapping, key, mapping.get(key, _MISSING)))
        if value is _MISSING:
            mapping.pop(key, None)
        else:
            mapping[key] = value

    def _rollback(self):
        while self._journal:
            mapping, key, previous = self._journal.pop()
            if previous is _MISSING:
                mapping.pop(key, None)
            else:
                mapping[key] = previous
