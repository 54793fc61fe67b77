import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Self, Sequence

from src.services.exceptions import (
    DuplicateLabel,
    EdgeAlreadyInSubset,
    InvalidLabel,
    InvalidUniformity,
    NegativeWeight,
    NonFiniteWeight,
    NonUniformEdge,
    UnknownEdge,
    UnknownLabel,
    VertexOutOfRange,
    WeightCountMismatch,
)
from src.typings import EdgeId, VertexId
from src.utils.subsets import to_mask


@dataclass(frozen=True)
class Hypergraph:
    """
    q-uniform hypergraph with weighted edges.

    Vertices and edges are dense indices: vertices 0..vertex_count-1, edges in input order.
    Labels are presentation only. Several edges may share one vertex set.
    Build it with `new_hypergraph`, which validates the input.
    """
    q: int
    vertex_count: int
    edges: tuple[tuple[VertexId, ...], ...]
    weights: tuple[float, ...]
    labels: tuple[str, ...] | None = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> range:
        return range(len(self.edges))

    @cached_property
    def edge_sets(self) -> tuple[frozenset[VertexId], ...]:
        return tuple(frozenset(edge) for edge in self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(edge) for edge in self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[VertexId, ...], ...]:
        return tuple(tuple(sorted(edge)) for edge in self.edges)

    @cached_property
    def _label_index(self) -> dict[str, EdgeId]:
        return {self.label(EdgeId(d)): EdgeId(d) for d in self.edge_ids}

    def check_edge(self, d: int) -> EdgeId:
        if not 0 <= d < len(self.edges):
            raise UnknownEdge(f'Edge id {d} is out of range, hypergraph has {len(self.edges)} edges.', edge=d)
        return EdgeId(d)

    def check_edges(self, a: Iterable[int]) -> list[EdgeId]:
        """Distinct, validated, ascending edge ids."""
        return sorted({self.check_edge(d) for d in a})

    def label(self, d: int) -> str:
        if self.labels is None:
            return str(d + 1)
        return self.labels[d]

    def edge_by_label(self, label: str) -> EdgeId:
        try:
            return self._label_index[label]
        except KeyError as error:
            raise UnknownLabel(f'Unknown edge label {label!r}.') from error


def new_hypergraph(
    q: int,
    vertex_count: int,
    edges: Sequence[Sequence[int]],
    weights: Sequence[float],
    labels: Sequence[str] | None = None,
) -> Hypergraph:
    if q < 2:
        raise InvalidUniformity(f'Uniformity q must be at least 2, got {q}.')
    if vertex_count < 0:
        raise VertexOutOfRange(f'Vertex count must be nonnegative, got {vertex_count}.')
    if len(weights) != len(edges):
        raise WeightCountMismatch(f'Got {len(edges)} edges but {len(weights)} weights.')
    if labels is not None and len(labels) != len(edges):
        raise InvalidLabel(f'Got {len(edges)} edges but {len(labels)} labels.')

    checked_edges = []
    for index, edge in enumerate(edges):
        for vertex in edge:
            if not 0 <= vertex < vertex_count:
                raise VertexOutOfRange(
                    f'Edge {index} has vertex {vertex} outside of 0..{vertex_count - 1}.', edge=index
                )
        if len(edge) != q or len(set(edge)) != q:
            raise NonUniformEdge(
                f'Edge {index} must have exactly {q} distinct vertices, got {sorted(set(edge))}.', edge=index
            )
        checked_edges.append(tuple(VertexId(vertex) for vertex in edge))

    checked_weights = []
    for index, weight in enumerate(weights):
        weight = float(weight)
        if math.isnan(weight) or weight < 0:
            raise NegativeWeight(f'Edge {index} has weight {weight}, weights must be nonnegative.', edge=index)
        if math.isinf(weight):
            raise NonFiniteWeight(f'Edge {index} has infinite weight.', edge=index)
        checked_weights.append(weight)

    if labels is not None:
        seen: set[str] = set()
        for index, label in enumerate(labels):
            if not label or any(char.isspace() for char in label) or label.startswith('#'):
                raise InvalidLabel(f'Edge {index} has invalid label {label!r}.', edge=index)
            if label in seen:
                raise DuplicateLabel(f'Edge {index} repeats label {label!r}.', edge=index)
            seen.add(label)

    return Hypergraph(
        q=q,
        vertex_count=vertex_count,
        edges=tuple(checked_edges),
        weights=tuple(checked_weights),
        labels=tuple(labels) if labels is not None else None,
    )


def gamma(h: Hypergraph, a: Iterable[int]) -> frozenset[VertexId]:
    """Vertices covered by the edge set a."""
    covered: set[VertexId] = set()
    for d in h.check_edges(a):
        covered |= h.edge_sets[d]
    return frozenset(covered)


def subset_weight(h: Hypergraph, a: Iterable[int]) -> float:
    # fsum over ascending ids: correctly rounded and independent of the input order
    return math.fsum(h.weights[d] for d in h.check_edges(a))


@dataclass(frozen=True)
class EdgeSubset:
    """Sorted edge set with its covered vertices and total weight."""
    members: tuple[EdgeId, ...]
    covered: frozenset[VertexId]
    weight: float

    @classmethod
    def of(cls, h: Hypergraph, a: Iterable[int] = ()) -> Self:
        members = h.check_edges(a)
        return cls(
            members=tuple(members),
            covered=gamma(h, members),
            weight=subset_weight(h, members),
        )

    def with_edge(self, h: Hypergraph, a: int) -> Self:
        a = h.check_edge(a)
        if a in self.members:
            raise EdgeAlreadyInSubset(f'Edge {h.label(a)} is already in the subset.', edge=a)
        return self.of(h, (*self.members, a))

    def __contains__(self, d: object) -> bool:
        return d in self.members

    def __iter__(self) -> Iterator[EdgeId]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)
