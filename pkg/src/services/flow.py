from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Self, Sequence

from src.services.exceptions import InvalidFlowNetwork


@dataclass
class FlowNetwork:
    """
    Integer capacity network stored as paired arcs: arc `i ^ 1` is the reverse of arc `i`.

    `bipartite` lays nodes out as source 0, left nodes 1..L, right nodes L+1..L+R, sink L+R+1.
    """
    node_count: int
    source: int
    sink: int
    heads: list[int] = field(default_factory=list)
    capacities: list[int] = field(default_factory=list)
    out_arcs: list[list[int]] = field(default_factory=list)

    def __post_init__(self):
        if self.node_count < 2 or not 0 <= self.source < self.node_count or not 0 <= self.sink < self.node_count:
            raise InvalidFlowNetwork(f'Bad terminals {self.source}, {self.sink} for {self.node_count} nodes.')
        if self.source == self.sink:
            raise InvalidFlowNetwork('Source and sink must differ.')
        if not self.out_arcs:
            self.out_arcs = [[] for _ in range(self.node_count)]

    def add_arc(self, tail: int, head: int, capacity: int) -> int:
        if capacity <= 0:
            raise InvalidFlowNetwork(f'Arc {tail}->{head} has nonpositive capacity {capacity}.')
        if not 0 <= tail < self.node_count or not 0 <= head < self.node_count:
            raise InvalidFlowNetwork(f'Arc {tail}->{head} leaves the network.')

        arc = len(self.heads)
        self.heads.extend((head, tail))
        self.capacities.extend((capacity, 0))
        self.out_arcs[tail].append(arc)
        self.out_arcs[head].append(arc ^ 1)
        return arc

    def left_node(self, position: int) -> int:
        return 1 + position

    @classmethod
    def bipartite(
        cls,
        adjacency: Sequence[Sequence[int]],
        right_count: int,
        forced: Iterable[int] = (),
    ) -> Self:
        """
        Source arcs of capacity 1 (BIG for forced left positions), middle arcs BIG, sink arcs 1.

        With the forced set F the maximum flow is |left| + min over A containing F of |N(A)| - |A|.
        """
        left_count = len(adjacency)
        big = left_count + right_count + 1
        forced = set(forced)

        network = cls(node_count=left_count + right_count + 2, source=0, sink=left_count + right_count + 1)
        for position, neighbours in enumerate(adjacency):
            network.add_arc(network.source, 1 + position, big if position in forced else 1)
            for right in neighbours:
                network.add_arc(1 + position, 1 + left_count + right, big)
        for right in range(right_count):
            network.add_arc(1 + left_count + right, network.sink, 1)
        return network


class Dinic:
    """Blocking-flow maximum flow. Owns the residual capacities of one run."""

    def __init__(self, network: FlowNetwork):
        self.network = network
        self.residual = list(network.capacities)
        self.level = [-1] * network.node_count
        self.pointer = [0] * network.node_count

    def run(self) -> int:
        self.residual = list(self.network.capacities)
        flow = 0
        while self._build_levels():
            self.pointer = [0] * self.network.node_count
            while pushed := self._push_path():
                flow += pushed
        return flow

    def sink_reachable(self) -> set[int]:
        """Nodes with a residual path to the sink."""
        network = self.network
        reachable = {network.sink}
        queue = deque([network.sink])
        while queue:
            node = queue.popleft()
            for arc in network.out_arcs[node]:
                tail = network.heads[arc]
                # arc ^ 1 runs tail -> node
                if tail not in reachable and self.residual[arc ^ 1] > 0:
                    reachable.add(tail)
                    queue.append(tail)
        return reachable

    def _build_levels(self) -> bool:
        network = self.network
        self.level = [-1] * network.node_count
        self.level[network.source] = 0
        queue = deque([network.source])
        while queue:
            node = queue.popleft()
            for arc in network.out_arcs[node]:
                head = network.heads[arc]
                if self.residual[arc] > 0 and self.level[head] < 0:
                    self.level[head] = self.level[node] + 1
                    queue.append(head)
        return self.level[network.sink] >= 0

    def _push_path(self) -> int:
        network = self.network
        path: list[int] = []
        node = network.source

        while node != network.sink:
            arcs = network.out_arcs[node]
            while self.pointer[node] < len(arcs):
                arc = arcs[self.pointer[node]]
                if self.residual[arc] > 0 and self.level[network.heads[arc]] == self.level[node] + 1:
                    break
                self.pointer[node] += 1
            else:
                if node == network.source:
                    return 0
                # Dead end: drop the node from this phase and retreat
                self.level[node] = -1
                arc = path.pop()
                node = network.heads[arc ^ 1]
                self.pointer[node] += 1
                continue

            path.append(arc)
            node = network.heads[arc]

        bottleneck = min(self.residual[arc] for arc in path)
        for arc in path:
            self.residual[arc] -= bottleneck
            self.residual[arc ^ 1] += bottleneck
        return bottleneck


def max_flow(network: FlowNetwork) -> int:
    return Dinic(network).run()
