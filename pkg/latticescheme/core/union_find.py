from typing import Dict, Hashable, Iterable, List


class UnionFind:
    def __init__(self, items: Iterable[Hashable]):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def groups(self) -> List[List]:
        """Blocks of the partition, each sorted, ordered by their smallest member"""
        blocks: Dict = {}
        for x in self.parent:
            blocks.setdefault(self.find(x), []).append(x)
        return sorted((sorted(b) for b in blocks.values()), key=lambda b: b[0])
