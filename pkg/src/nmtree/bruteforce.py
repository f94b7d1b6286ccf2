"""Brute-force oracle over a subdivided skeleton.

Every edge is cut at the query points and the pieces' midpoints are added, so
the realization becomes a finite weighted graph whose nodes are exactly the
cut points.  Order, meets, segments and tangent classes are then answered by
enumerating graph paths and components with networkx.  Nothing here calls the
path arithmetic of :mod:`nmtree.tree`; it exists to check that code.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

import networkx as nx

from .tree import Point, TreeSkeleton


class CutGraph:
    def __init__(self, skeleton: TreeSkeleton, points: Iterable[Point]):
        self.skeleton = skeleton
        g = nx.Graph()
        for v in skeleton.vertices:
            g.add_node(Point(vertex=v))
        interior: dict[tuple[str, str], set[Fraction]] = {}
        for p in points:
            if p.edge is not None:
                interior.setdefault(p.edge, set()).add(p.offset)
        for (u, w), length in sorted(skeleton.lengths.items()):
            offs = sorted(interior.get((u, w), set()))
            chain = [(Fraction(0), Point(vertex=u))]
            for off in offs:
                chain.append((off, Point(edge=(u, w), offset=off)))
            chain.append((length, Point(vertex=w)))
            for (o1, p1), (o2, p2) in zip(chain, chain[1:]):
                mid = Point(edge=(u, w), offset=(o1 + o2) / 2)
                g.add_edge(p1, mid, weight=(o2 - o1) / 2)
                g.add_edge(mid, p2, weight=(o2 - o1) / 2)
        self.graph = g
        self._paths: dict[Point, dict[Point, list[Point]]] = {}
        self._comps: dict[Point, dict[Point, frozenset[Point]]] = {}

    @property
    def nodes(self) -> list[Point]:
        return list(self.graph.nodes)

    def path(self, x: Point, y: Point) -> list[Point]:
        if x not in self._paths:
            self._paths[x] = nx.single_source_shortest_path(self.graph, x)
        return self._paths[x][y]

    def on_path(self, c: Point, x: Point, y: Point) -> bool:
        return c in self.path(x, y)

    def leq(self, base: Point, a: Point, b: Point) -> bool:
        return a in self.path(base, b)

    def lt(self, base: Point, a: Point, b: Point) -> bool:
        return a != b and self.leq(base, a, b)

    def glb(self, base: Point, pts: Iterable[Point]) -> Point:
        pts = list(pts)
        lower = [c for c in self.graph.nodes if all(self.leq(base, c, p) for p in pts)]
        tops = [c for c in lower if all(self.leq(base, d, c) for d in lower)]
        assert len(tops) == 1, tops
        return tops[0]

    def dist(self, x: Point, y: Point) -> Fraction:
        p = self.path(x, y)
        return sum((self.graph.edges[u, v]["weight"] for u, v in zip(p, p[1:])), Fraction(0))

    def component(self, t: Point, a: Point) -> set[Point]:
        """Nodes of the connected component of the graph minus ``t`` containing ``a``."""
        if t not in self._comps:
            h = self.graph.subgraph(n for n in self.graph.nodes if n != t)
            self._comps[t] = {n: comp for comp in map(frozenset, nx.connected_components(h)) for n in comp}
        return set(self._comps[t][a])

    def is_upper(self, base: Point, members: set[Point]) -> bool:
        return all(
            y in members for x in members for y in self.graph.nodes if self.leq(base, x, y)
        )
