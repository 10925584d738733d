"""
并查集
路径压缩 + 按秩合并，用于把面合并成序划分的胞腔
"""
from typing import Dict, List


class UnionFind:
    """固定大小的并查集，元素为 0..size-1"""

    def __init__(self, size: int):
        self.parents = list(range(size))
        self.ranks = [0] * size
        self.num_components = size

    def find(self, elem: int) -> int:
        root = elem
        while root != self.parents[root]:
            root = self.parents[root]
        # 路径压缩
        while elem != root:
            self.parents[elem], elem = root, self.parents[elem]
        return root

    def union(self, a: int, b: int) -> bool:
        """
        合并 a、b 所在集合

        Returns:
            是否发生了合并（原本不在同一集合）
        """
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.ranks[ra] < self.ranks[rb]:
            ra, rb = rb, ra
        self.parents[rb] = ra
        if self.ranks[ra] == self.ranks[rb]:
            self.ranks[ra] += 1
        self.num_components -= 1
        return True

    def connected(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def components(self, members: List[int]) -> Dict[int, List[int]]:
        """按根分组，只考虑给定元素"""
        groups: Dict[int, List[int]] = {}
        for m in members:
            groups.setdefault(self.find(m), []).append(m)
        return groups
