from typing import Generic, Hashable, Iterable, TypeVar

K = TypeVar('K', bound=Hashable)


class UnionFind(Generic[K]):
    """Disjoint sets with path compression and union by size. Keys are added on first use."""

    def __init__(self, keys: Iterable[K] = ()):
        self.forest: dict[K, K] = {}
        self.size: dict[K, int] = {}
        for key in keys:
            self.add(key)

    def add(self, key: K) -> K:
        if key not in self.forest:
            self.forest[key] = key
            self.size[key] = 1
        return key

    def find(self, key: K) -> K:
        self.add(key)

        root = key
        while root != self.forest[root]:
            root = self.forest[root]

        # Path compression
        node = key
        while node != root:
            parent = self.forest[node]
            self.forest[node] = root
            node = parent

        return root

    def union(self, a: K, b: K) -> bool:
        """Merge the sets of a and b. Returns False when they were already one set."""
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return False
        if self.size[root_a] < self.size[root_b]:
            root_a, root_b = root_b, root_a
        self.forest[root_b] = root_a
        self.size[root_a] += self.size.pop(root_b)
        return True

    def groups(self) -> list[list[K]]:
        """Sets in order of their first key, each in key insertion order."""
        by_root: dict[K, list[K]] = {}
        for key in self.forest:
            by_root.setdefault(self.find(key), []).append(key)
        return list(by_root.values())
