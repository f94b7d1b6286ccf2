"""Constant-time lowest common ancestor queries over a skeleton.

Euler tour plus a sparse table of range minima on vertex levels.  Used as an
optional accelerated route for meets; it must answer exactly like the
path-walking implementation in :mod:`nmtree.tree`.
"""
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .tree import Point, TreeSkeleton


class LCAIndex:
    def __init__(self, skeleton: TreeSkeleton):
        self.skeleton = skeleton
        tour: list[str] = []
        first: dict[str, int] = {}
        stack = [(skeleton.root, 0)]
        while stack:
            v, i = stack.pop()
            if i == 0:
                first[v] = len(tour)
            tour.append(v)
            kids = skeleton.children[v]
            if i < len(kids):
                stack.append((v, i + 1))
                stack.append((kids[i], 0))
        self.tour = tour
        self.first = first
        level = skeleton.level
        # table[k][i] = index into tour of the shallowest vertex in tour[i : i + 2**k]
        table = [list(range(len(tour)))]
        k = 1
        while (1 << k) <= len(tour):
            prev = table[-1]
            half = 1 << (k - 1)
            row = []
            for i in range(len(tour) - (1 << k) + 1):
                x, y = prev[i], prev[i + half]
                row.append(x if level[tour[x]] <= level[tour[y]] else y)
            table.append(row)
            k += 1
        self.table = table

    def lca(self, u: str, w: str) -> str:
        i, j = self.first[u], self.first[w]
        if i > j:
            i, j = j, i
        k = (j - i + 1).bit_length() - 1
        x, y = self.table[k][i], self.table[k][j - (1 << k) + 1]
        level = self.skeleton.level
        return self.tour[x] if level[self.tour[x]] <= level[self.tour[y]] else self.tour[y]

    def root_meet(self, a: Point, b: Point) -> Point:
        from .tree import Point, _key, _rdist

        sk = self.skeleton
        w = self.lca(_key(a), _key(b))
        # the meet is w unless one point sits on the other's root path below w
        if w == _key(a) and _rdist(sk, a) <= _rdist(sk, b):
            return a
        if w == _key(b) and _rdist(sk, b) <= _rdist(sk, a):
            return b
        return Point(vertex=w)

    def median(self, t: Point, a: Point, b: Point) -> Point:
        """The unique point lying on all three paths between ``t``, ``a``, ``b``."""
        from .tree import _rdist

        cands = [self.root_meet(a, b), self.root_meet(t, a), self.root_meet(t, b)]
        return max(cands, key=lambda p: _rdist(self.skeleton, p))
