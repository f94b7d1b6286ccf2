"""Finite realizations of rooted non-metric trees.

A :class:`TreeSkeleton` is a finite tree with positive rational edge lengths
and a distinguished root.  Its geometric realization (every edge a real
segment of the given length) is the ambient tree; a :class:`Point` is an
exact location in it.  An :class:`OrderView` fixes a base point ``t`` and
realizes the order ``a <=_t b  iff  a lies on the path from t to b``; the
view based at the root vertex is the original order.

Everything is exact: offsets and lengths are :class:`fractions.Fraction`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "TreeError",
    "TreeFormatError",
    "PointError",
    "TreeSkeleton",
    "Point",
    "Arc",
    "PathRepr",
    "OrderView",
    "parse_tree",
    "parse_edge_list",
    "parse_newick",
    "format_tree",
    "canonicalize",
    "parse_point",
    "leq",
    "lt",
    "meet",
    "infimum",
    "segment",
    "geodesic",
    "point_on_segment",
    "reroot",
    "root_view",
    "distance",
    "point_along",
    "cut_basis",
]

NAME_RE = re.compile(r"^[A-Za-z0-9_.]+$")


class TreeError(ValueError):
    """Base class for every error raised by this package."""


class TreeFormatError(TreeError):
    """A tree description could not be turned into a skeleton."""


class PointError(TreeError):
    """A point reference does not name a location in the realization."""


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise TreeFormatError(f"not a rational literal: {text!r}") from exc


class TreeSkeleton:
    """Finite vertex/edge structure with rational lengths and a root.

    Immutable after construction.  Edges are stored oriented away from the
    root, so an edge id is the tuple ``(parent, child)``.
    """

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str, Fraction]], root: str):
        verts = set(vertices)
        if root not in verts:
            raise TreeFormatError(f"root {root!r} is not a vertex")
        for v in verts:
            if not NAME_RE.match(v):
                raise TreeFormatError(f"invalid vertex name {v!r}")
        adj: dict[str, dict[str, Fraction]] = {v: {} for v in verts}
        for u, w, length in edges:
            if u not in verts or w not in verts:
                raise TreeFormatError(f"edge {u}-{w} names an unknown vertex")
            if u == w:
                raise TreeFormatError(f"self-loop at {u!r}")
            length = Fraction(length)
            if length <= 0:
                raise TreeFormatError(f"edge {u}-{w} has non-positive length {length}")
            if w in adj[u]:
                raise TreeFormatError(f"duplicate edge {u}-{w}")
            adj[u][w] = length
            adj[w][u] = length
        n_edges = sum(len(nb) for nb in adj.values()) // 2
        if n_edges != len(verts) - 1:
            # a connected graph with |V|-1 edges is a tree; otherwise find out why
            seen = _reachable(adj, root)
            if len(seen) < len(verts):
                raise TreeFormatError("graph is disconnected")
            raise TreeFormatError("graph contains a cycle")
        seen = _reachable(adj, root)
        if len(seen) < len(verts):
            raise TreeFormatError("graph is disconnected")

        self.root = root
        self.vertices: tuple[str, ...] = tuple(sorted(verts))
        self.parent: dict[str, str | None] = {root: None}
        self.depth: dict[str, Fraction] = {root: Fraction(0)}
        self.level: dict[str, int] = {root: 0}
        children: dict[str, list[str]] = {v: [] for v in verts}
        order = [root]
        for v in order:
            for w in sorted(adj[v]):
                if w == self.parent[v]:
                    continue
                self.parent[w] = v
                self.depth[w] = self.depth[v] + adj[v][w]
                self.level[w] = self.level[v] + 1
                children[v].append(w)
                order.append(w)
        self.children: dict[str, tuple[str, ...]] = {v: tuple(c) for v, c in children.items()}
        self.lengths: dict[tuple[str, str], Fraction] = {
            (p, v): adj[p][v] for v, p in self.parent.items() if p is not None
        }
        self._adj = adj
        self._hash = hash((root, self.vertices, tuple(sorted(self.lengths.items()))))
        # preorder entry/exit numbers for O(1) ancestor tests
        self._tin: dict[str, int] = {}
        self._tout: dict[str, int] = {}
        clock = 0
        stack: list[tuple[str, bool]] = [(root, False)]
        while stack:
            v, done = stack.pop()
            if done:
                self._tout[v] = clock
                continue
            self._tin[v] = clock
            clock += 1
            stack.append((v, True))
            for c in reversed(self.children[v]):
                stack.append((c, False))

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted(self.lengths))

    def edge_between(self, u: str, w: str) -> tuple[str, str]:
        if self.parent.get(w) == u:
            return (u, w)
        if self.parent.get(u) == w:
            return (w, u)
        raise PointError(f"no edge between {u!r} and {w!r}")

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(sorted(self._adj[v]))

    def is_ancestor(self, u: str, w: str) -> bool:
        """True iff vertex ``u`` lies on the root-to-``w`` path (``u == w`` included)."""
        return self._tin[u] <= self._tin[w] and self._tout[w] <= self._tout[u]

    def root_path(self, v: str) -> list[str]:
        """Vertices from the root down to ``v``."""
        path = []
        cur: str | None = v
        while cur is not None:
            path.append(cur)
            cur = self.parent[cur]
        path.reverse()
        return path

    @cached_property
    def lca_index(self):
        from .lca import LCAIndex

        return LCAIndex(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreeSkeleton):
            return NotImplemented
        return self.root == other.root and self.vertices == other.vertices and self.lengths == other.lengths

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"TreeSkeleton(root={self.root!r}, vertices={len(self.vertices)}, edges={len(self.lengths)})"


def _reachable(adj: dict[str, dict[str, Fraction]], start: str) -> set[str]:
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


@dataclass(frozen=True, slots=True)
class Point:
    """Exact location in the realization.

    Either ``Point(vertex="v")`` or ``Point(edge=(parent, child), offset=s)``
    with ``0 < s < length`` measured from the parent (root-closer) endpoint.
    Use :func:`canonicalize` to build edge points from raw coordinates.
    """

    vertex: str | None = None
    edge: tuple[str, str] | None = None
    offset: Fraction = Fraction(0)

    @classmethod
    def at(cls, vertex: str) -> Point:
        return cls(vertex=vertex)

    @property
    def is_vertex(self) -> bool:
        return self.vertex is not None

    def __str__(self) -> str:
        if self.vertex is not None:
            return self.vertex
        assert self.edge is not None
        return f"{self.edge[0]}-{self.edge[1]}@{self.offset}"

    def sort_key(self) -> tuple:
        if self.vertex is not None:
            return (0, self.vertex, "", Fraction(0))
        assert self.edge is not None
        return (1, self.edge[0], self.edge[1], self.offset)


def canonicalize(skeleton: TreeSkeleton, raw: str | tuple | Point) -> Point:
    """Turn a raw point reference into its canonical :class:`Point`.

    ``raw`` may be a vertex name, a ``(v1, v2, offset)`` triple with the offset
    measured from ``v1``, the string ``"v1-v2@offset"``, or a Point (which is
    re-validated).
    """
    if isinstance(raw, Point):
        if raw.vertex is not None:
            raw = raw.vertex
        else:
            assert raw.edge is not None
            raw = (raw.edge[0], raw.edge[1], raw.offset)
    if isinstance(raw, str):
        if "@" in raw:
            head, _, off = raw.partition("@")
            if head.count("-") != 1:
                raise PointError(f"malformed point {raw!r}")
            u, w = head.split("-")
            try:
                offset = Fraction(off)
            except (ValueError, ZeroDivisionError) as exc:
                raise PointError(f"malformed offset in {raw!r}") from exc
            raw = (u, w, offset)
        else:
            if raw not in skeleton.parent:
                raise PointError(f"unknown vertex {raw!r}")
            return Point(vertex=raw)
    u, w, offset = raw
    offset = Fraction(offset)
    if u not in skeleton.parent or w not in skeleton.parent:
        raise PointError(f"unknown vertex in edge {u}-{w}")
    edge = skeleton.edge_between(u, w)
    length = skeleton.lengths[edge]
    if offset < 0 or offset > length:
        raise PointError(f"offset {offset} outside [0, {length}] on edge {u}-{w}")
    if edge[0] != u:
        offset = length - offset
    if offset == 0:
        return Point(vertex=edge[0])
    if offset == length:
        return Point(vertex=edge[1])
    return Point(edge=edge, offset=offset)


def parse_point(skeleton: TreeSkeleton, text: str) -> Point:
    return canonicalize(skeleton, text.strip())


# ---------------------------------------------------------------------------
# parsing and serialization


def parse_tree(text: str) -> TreeSkeleton:
    """Parse either the edge-list format or a Newick string."""
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines()).strip()
    if body.startswith("(") or (body.endswith(";") and "\n" not in body and not body.startswith(("vertex", "edge"))):
        return parse_newick(body)
    return parse_edge_list(text)


def parse_edge_list(text: str) -> TreeSkeleton:
    vertices: list[str] = []
    roots: list[str] = []
    edges: list[tuple[str, str, Fraction]] = []
    seen_pairs: set[frozenset[str]] = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        words = line.split("#", 1)[0].split()
        if not words:
            continue
        kind = words[0]
        if kind == "vertex" and len(words) in (2, 3):
            if len(words) == 3 and words[2] != "root":
                raise TreeFormatError(f"line {lineno}: unexpected {words[2]!r}")
            name = words[1]
            if not NAME_RE.match(name):
                raise TreeFormatError(f"line {lineno}: invalid vertex name {name!r}")
            vertices.append(name)
            if len(words) == 3:
                roots.append(name)
        elif kind == "edge" and len(words) == 4:
            u, w = words[1], words[2]
            for name in (u, w):
                if not NAME_RE.match(name):
                    raise TreeFormatError(f"line {lineno}: invalid vertex name {name!r}")
            pair = frozenset((u, w))
            if pair in seen_pairs:
                raise TreeFormatError(f"line {lineno}: duplicate edge {u}-{w}")
            seen_pairs.add(pair)
            length = _fraction(words[3])
            if length <= 0:
                raise TreeFormatError(f"line {lineno}: non-positive length {words[3]}")
            vertices.extend((u, w))
            edges.append((u, w, length))
        else:
            raise TreeFormatError(f"line {lineno}: cannot parse {line.strip()!r}")
    if not roots:
        raise TreeFormatError("missing root declaration")
    if len(set(roots)) > 1:
        raise TreeFormatError(f"several roots declared: {', '.join(roots)}")
    return TreeSkeleton(vertices, edges, roots[0])


def parse_newick(text: str) -> TreeSkeleton:
    """Parse ``((a:1,b:2)v:1)r;``; the outermost label is the root.

    Unlabelled internal nodes get generated names ``_n1``, ``_n2``, ...
    Every non-root node needs a branch length.
    """
    s = text.strip()
    if not s.endswith(";"):
        raise TreeFormatError("Newick string must end with ';'")
    s = s[:-1]
    pos = 0
    counter = 0
    vertices: list[str] = []
    edges: list[tuple[str, str, Fraction]] = []

    def label() -> str:
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos] not in "(),:;":
            pos += 1
        return s[start:pos].strip()

    def length() -> Fraction | None:
        nonlocal pos
        if pos < len(s) and s[pos] == ":":
            pos += 1
            return _fraction(label())
        return None

    def node() -> tuple[str, Fraction | None]:
        nonlocal pos, counter
        kids: list[tuple[str, Fraction | None]] = []
        if pos < len(s) and s[pos] == "(":
            pos += 1
            kids.append(node())
            while pos < len(s) and s[pos] == ",":
                pos += 1
                kids.append(node())
            if pos >= len(s) or s[pos] != ")":
                raise TreeFormatError("unbalanced parentheses in Newick string")
            pos += 1
        name = label()
        if not name:
            if not kids:
                raise TreeFormatError("unlabelled leaf in Newick string")
            counter += 1
            name = f"_n{counter}"
        vertices.append(name)
        for kid, klen in kids:
            if klen is None:
                raise TreeFormatError(f"missing branch length for {kid!r}")
            edges.append((name, kid, klen))
        return name, length()

    root, _ = node()
    if pos != len(s):
        raise TreeFormatError(f"trailing characters in Newick string: {s[pos:]!r}")
    if len(set(vertices)) != len(vertices):
        raise TreeFormatError("duplicate node label in Newick string")
    for u, w, ln in edges:
        if ln <= 0:
            raise TreeFormatError(f"edge {u}-{w} has non-positive length {ln}")
    return TreeSkeleton(vertices, edges, root)


def format_tree(skeleton: TreeSkeleton) -> str:
    """Serialize to the edge-list format; byte-stable for equal skeletons."""
    lines = []
    for v in skeleton.vertices:
        lines.append(f"vertex {v} root" if v == skeleton.root else f"vertex {v}")
    for (p, c) in skeleton.edges:
        lines.append(f"edge {p} {c} {skeleton.lengths[(p, c)]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# root-order primitives


def _key(p: Point) -> str:
    """Lowest vertex whose root path contains ``p``."""
    if p.vertex is not None:
        return p.vertex
    assert p.edge is not None
    return p.edge[1]


def _rdist(sk: TreeSkeleton, p: Point) -> Fraction:
    if p.vertex is not None:
        return sk.depth[p.vertex]
    assert p.edge is not None
    return sk.depth[p.edge[0]] + p.offset


def _root_leq(sk: TreeSkeleton, a: Point, b: Point) -> bool:
    return sk.is_ancestor(_key(a), _key(b)) and _rdist(sk, a) <= _rdist(sk, b)


def _vertex_lca(sk: TreeSkeleton, u: str, w: str) -> str:
    # walk up from the deeper vertex; linear in path length
    while sk.level[u] > sk.level[w]:
        u = sk.parent[u]  # type: ignore[assignment]
    while sk.level[w] > sk.level[u]:
        w = sk.parent[w]  # type: ignore[assignment]
    while u != w:
        u = sk.parent[u]  # type: ignore[assignment]
        w = sk.parent[w]  # type: ignore[assignment]
    return u


def _root_meet(sk: TreeSkeleton, a: Point, b: Point) -> Point:
    if _root_leq(sk, a, b):
        return a
    if _root_leq(sk, b, a):
        return b
    return Point(vertex=_vertex_lca(sk, _key(a), _key(b)))


def _on_geodesic(sk: TreeSkeleton, c: Point, a: Point, b: Point) -> bool:
    m = _root_meet(sk, a, b)
    if not _root_leq(sk, m, c):
        return False
    return _root_leq(sk, c, a) or _root_leq(sk, c, b)


def _offset_on(sk: TreeSkeleton, edge: tuple[str, str], p: Point) -> Fraction | None:
    """Offset of ``p`` on the closed edge, or None if ``p`` is not on it."""
    if p.vertex is not None:
        if p.vertex == edge[0]:
            return Fraction(0)
        if p.vertex == edge[1]:
            return sk.lengths[edge]
        return None
    return p.offset if p.edge == edge else None


def _common_edge(sk: TreeSkeleton, p: Point, q: Point) -> tuple[str, str]:
    if p.edge is not None:
        return p.edge
    if q.edge is not None:
        return q.edge
    assert p.vertex is not None and q.vertex is not None
    return sk.edge_between(p.vertex, q.vertex)


def _waypoints(sk: TreeSkeleton, a: Point, b: Point) -> list[Point]:
    """Points along the path a -> b: a, the skeleton vertices crossed, b."""
    m = _root_meet(sk, a, b)
    dm = _rdist(sk, m)
    up = [
        Point(vertex=v)
        for v in reversed(sk.root_path(_key(a)))
        if dm < sk.depth[v] < _rdist(sk, a)
    ]
    down = [Point(vertex=v) for v in sk.root_path(_key(b)) if dm < sk.depth[v] < _rdist(sk, b)]
    out: list[Point] = []
    for p in [a, *up, m, *down, b]:
        if not out or out[-1] != p:
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# segments


@dataclass(frozen=True, slots=True)
class Arc:
    """Piece of a path on one edge; offsets measured from the edge's parent end."""

    edge: tuple[str, str]
    start: Fraction
    end: Fraction

    @property
    def length(self) -> Fraction:
        return abs(self.end - self.start)

    @property
    def lo(self) -> Fraction:
        return min(self.start, self.end)

    @property
    def hi(self) -> Fraction:
        return max(self.start, self.end)


@dataclass(frozen=True)
class PathRepr:
    """The closed segment between two points as an ordered list of arcs."""

    start: Point
    end: Point
    arcs: tuple[Arc, ...]
    vertices: tuple[str, ...]

    @property
    def endpoints(self) -> tuple[Point, Point]:
        return (self.start, self.end)

    @property
    def length(self) -> Fraction:
        return sum((arc.length for arc in self.arcs), Fraction(0))

    def point_set(self) -> tuple:
        """Normal form of the underlying point set, for set equality tests."""
        if not self.arcs:
            return ("point", self.start)
        by_edge: dict[tuple[str, str], list[tuple[Fraction, Fraction]]] = {}
        for arc in self.arcs:
            by_edge.setdefault(arc.edge, []).append((arc.lo, arc.hi))
        out = []
        for edge in sorted(by_edge):
            merged: list[list[Fraction]] = []
            for lo, hi in sorted(by_edge[edge]):
                if merged and lo <= merged[-1][1]:
                    merged[-1][1] = max(merged[-1][1], hi)
                else:
                    merged.append([lo, hi])
            out.extend((edge, lo, hi) for lo, hi in merged)
        return ("arcs", tuple(out))

    def same_points(self, other: PathRepr) -> bool:
        return self.point_set() == other.point_set()

    def __str__(self) -> str:
        if not self.arcs:
            return f"[{self.start}]"
        parts = [f"{a.edge[0]}-{a.edge[1]}[{a.start}->{a.end}]" for a in self.arcs]
        return " ".join(parts)


def _path_from_waypoints(sk: TreeSkeleton, pts: Sequence[Point]) -> PathRepr:
    arcs = []
    for p, q in zip(pts, pts[1:]):
        edge = _common_edge(sk, p, q)
        s, e = _offset_on(sk, edge, p), _offset_on(sk, edge, q)
        assert s is not None and e is not None
        arcs.append(Arc(edge, s, e))
    verts = tuple(p.vertex for p in pts if p.vertex is not None)
    return PathRepr(pts[0], pts[-1], tuple(arcs), verts)


def geodesic(skeleton: TreeSkeleton, a: Point, b: Point) -> PathRepr:
    """The unique path from ``a`` to ``b`` (no view involved)."""
    return _path_from_waypoints(skeleton, _waypoints(skeleton, a, b))


def point_on_segment(
    c: Point, path: PathRepr, include_start: bool = True, include_end: bool = True
) -> bool:
    """Membership of ``c`` in the segment; the flags give ]a,b], [a,b[ and ]a,b[."""
    if c == path.start or c == path.end:
        return (include_start and c == path.start) or (include_end and c == path.end)
    if c.vertex is not None:
        return c.vertex in path.vertices
    return any(c.edge == arc.edge and arc.lo <= c.offset <= arc.hi for arc in path.arcs)


# ---------------------------------------------------------------------------
# views and order queries


@dataclass(frozen=True)
class OrderView:
    """A skeleton with a base point; realizes the order with the base as root."""

    skeleton: TreeSkeleton
    base: Point

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", canonicalize(self.skeleton, self.base))

    @property
    def is_root_view(self) -> bool:
        return self.base == Point(vertex=self.skeleton.root)

    def __str__(self) -> str:
        return f"view@{self.base}"


def reroot(skeleton: TreeSkeleton, t: Point | str) -> OrderView:
    """View of ``skeleton`` in which ``t`` is the smallest element.

    The skeleton is shared, never subdivided.
    """
    return OrderView(skeleton, canonicalize(skeleton, t))


def root_view(skeleton: TreeSkeleton) -> OrderView:
    return OrderView(skeleton, Point(vertex=skeleton.root))


def leq(view: OrderView, a: Point, b: Point) -> bool:
    """``a <=_t b``: ``a`` lies on the path from the view's base to ``b``."""
    return _on_geodesic(view.skeleton, a, view.base, b)


def lt(view: OrderView, a: Point, b: Point) -> bool:
    return a != b and leq(view, a, b)


def _direction_step(sk: TreeSkeleton, w: Point, n: Point) -> tuple[tuple[str, str], str]:
    """(edge, endpoint) describing the way out of ``w`` toward the adjacent waypoint ``n``."""
    edge = _common_edge(sk, w, n)
    if w.vertex is not None:
        return edge, edge[1] if w.vertex == edge[0] else edge[0]
    off = _offset_on(sk, edge, n)
    assert off is not None
    return edge, edge[1] if off > w.offset else edge[0]


def meet(view: OrderView, a: Point, b: Point, *, use_index: bool = False) -> Point:
    """Greatest lower bound of ``a`` and ``b`` under the view's order.

    Walks the base->a and base->b paths in lockstep and returns the point
    where they separate.  With ``use_index`` the answer is instead the median
    of (base, a, b) computed from constant-time root LCAs; both routes agree.
    """
    sk = view.skeleton
    if use_index:
        return sk.lca_index.median(view.base, a, b)
    pa = _waypoints(sk, view.base, a)
    pb = _waypoints(sk, view.base, b)
    i = 0
    while True:
        if i + 1 == len(pa) or i + 1 == len(pb):
            return pa[i]
        na, nb = pa[i + 1], pb[i + 1]
        if na == nb:
            i += 1
            continue
        if _direction_step(sk, pa[i], na) == _direction_step(sk, pa[i], nb):
            # same way out; one path ends inside the shared edge
            return na if distance(sk, pa[i], na) < distance(sk, pa[i], nb) else nb
        return pa[i]


def infimum(view: OrderView, points: Iterable[Point], *, use_index: bool = False) -> Point:
    """Left fold of :func:`meet` over a non-empty collection."""
    it = iter(points)
    try:
        acc = next(it)
    except StopIteration:
        raise TreeError("infimum of an empty set") from None
    for p in it:
        acc = meet(view, acc, p, use_index=use_index)
    return acc


def segment(view: OrderView, a: Point, b: Point) -> PathRepr:
    """Closed segment ``[a, b] = [a^b, a] u [a^b, b]`` with the meet taken in ``view``."""
    sk = view.skeleton
    m = meet(view, a, b)
    first = _waypoints(sk, m, a)[::-1]
    second = _waypoints(sk, m, b)
    pts = first + second[1:]
    return _path_from_waypoints(sk, pts)


def distance(skeleton: TreeSkeleton, a: Point, b: Point) -> Fraction:
    """Arc-length distance in the realization."""
    m = _root_meet(skeleton, a, b)
    return _rdist(skeleton, a) + _rdist(skeleton, b) - 2 * _rdist(skeleton, m)


def point_along(skeleton: TreeSkeleton, path: PathRepr, dist: Fraction) -> Point:
    """The point at arc length ``dist`` from ``path.start``."""
    dist = Fraction(dist)
    if dist < 0 or dist > path.length:
        raise TreeError(f"distance {dist} outside the path of length {path.length}")
    if not path.arcs:
        return path.start
    for arc in path.arcs:
        if dist <= arc.length:
            off = arc.start + dist if arc.end >= arc.start else arc.start - dist
            return canonicalize(skeleton, (arc.edge[0], arc.edge[1], off))
        dist -= arc.length
    return path.end


def cut_basis(skeleton: TreeSkeleton, points: Iterable[Point]) -> list[Point]:
    """Vertices, the given points, and one midpoint per sub-arc between them.

    Every predicate whose boundaries lie among ``points`` is constant on each
    open sub-arc, so quantifying over this finite list decides it exactly.
    """
    on_edge: dict[tuple[str, str], set[Fraction]] = {e: set() for e in skeleton.lengths}
    for p in points:
        if p.edge is not None:
            on_edge[p.edge].add(p.offset)
    out = [Point(vertex=v) for v in skeleton.vertices]
    for edge in skeleton.edges:
        cuts = sorted({Fraction(0), skeleton.lengths[edge], *on_edge[edge]})
        for lo, hi in zip(cuts, cuts[1:]):
            if lo != 0:
                out.append(Point(edge=edge, offset=lo))
            out.append(Point(edge=edge, offset=(lo + hi) / 2))
    return out
