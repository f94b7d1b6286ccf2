"""Region algebra over a tree realization and exact topological deciders.

A :class:`RegionDescriptor` is a finite boolean expression over atoms
(tangent classes, up-sets, singletons, whole, empty) bound to one
:class:`~nmtree.tree.OrderView`.  Membership only changes at the points the
expression mentions, so each decider quantifies over the finite list from
:func:`cut_points` and is exact.

Directed sets are handled as chains: two elements of a directed set share an
upper bound ``u``, and everything below ``u`` lies on the single path from the
base to ``u``, so the elements are comparable.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union as _U

from .tangent import TangentClassAtom, tangent_class
from .tree import (
    OrderView,
    Point,
    TreeError,
    TreeSkeleton,
    _offset_on,
    canonicalize,
    cut_basis,
    distance,
    geodesic,
    leq,
    lt,
    point_along,
    point_on_segment,
    root_view,
)
from .tangent import direction

__all__ = [
    "RegionError",
    "ChainError",
    "UpSet",
    "StrictUpSet",
    "Singleton",
    "Whole",
    "Empty",
    "Union",
    "Intersection",
    "Complement",
    "RegionDescriptor",
    "DirectedChain",
    "parse_region",
    "member",
    "cut_points",
    "upper_set_violation",
    "is_upper_set",
    "inaccessibility_violation",
    "is_inaccessible_by_directed_joins",
    "scott_violation",
    "is_scott_open",
    "weak_open_witness",
    "hausdorff_witness",
    "chain_family",
    "region_subset",
    "regions_disjoint",
]


class RegionError(TreeError):
    pass


class ChainError(TreeError):
    pass


@dataclass(frozen=True)
class UpSet:
    point: Point

    def __str__(self) -> str:
        return f"up({self.point})"


@dataclass(frozen=True)
class StrictUpSet:
    point: Point

    def __str__(self) -> str:
        return f"strictup({self.point})"


@dataclass(frozen=True)
class Singleton:
    point: Point

    def __str__(self) -> str:
        return f"point({self.point})"


@dataclass(frozen=True)
class Whole:
    def __str__(self) -> str:
        return "whole"


@dataclass(frozen=True)
class Empty:
    def __str__(self) -> str:
        return "empty"


@dataclass(frozen=True)
class Union:
    parts: tuple

    def __str__(self) -> str:
        return "(" + " | ".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Intersection:
    parts: tuple

    def __str__(self) -> str:
        return "(" + " & ".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Complement:
    part: object

    def __str__(self) -> str:
        return f"!{self.part}"


Expr = _U[TangentClassAtom, UpSet, StrictUpSet, Singleton, Whole, Empty, Union, Intersection, Complement]


def _expr_points(expr: Expr) -> Iterator[Point]:
    if isinstance(expr, TangentClassAtom):
        yield expr.anchor
        yield expr.representative
    elif isinstance(expr, (UpSet, StrictUpSet, Singleton)):
        yield expr.point
    elif isinstance(expr, (Union, Intersection)):
        for part in expr.parts:
            yield from _expr_points(part)
    elif isinstance(expr, Complement):
        yield from _expr_points(expr.part)


@dataclass(frozen=True)
class RegionDescriptor:
    """A boolean expression over atoms, evaluated with the order of ``view``."""

    view: OrderView
    expr: Expr

    def __post_init__(self) -> None:
        for p in _expr_points(self.expr):
            canonicalize(self.view.skeleton, p)

    @classmethod
    def tangent(cls, view: OrderView, a: Point, t: Point) -> RegionDescriptor:
        return cls(view, tangent_class(view.skeleton, a, t))

    @classmethod
    def up(cls, view: OrderView, p: Point) -> RegionDescriptor:
        return cls(view, UpSet(p))

    @classmethod
    def strict_up(cls, view: OrderView, p: Point) -> RegionDescriptor:
        return cls(view, StrictUpSet(p))

    @classmethod
    def singleton(cls, view: OrderView, p: Point) -> RegionDescriptor:
        return cls(view, Singleton(p))

    @classmethod
    def whole(cls, view: OrderView) -> RegionDescriptor:
        return cls(view, Whole())

    @classmethod
    def empty(cls, view: OrderView) -> RegionDescriptor:
        return cls(view, Empty())

    def _combine(self, other: RegionDescriptor, kind: type) -> RegionDescriptor:
        if not isinstance(other, RegionDescriptor):
            return NotImplemented
        if other.view != self.view:
            raise RegionError(f"cannot combine regions bound to {self.view} and {other.view}")
        return RegionDescriptor(self.view, kind((self.expr, other.expr)))

    def __or__(self, other: RegionDescriptor) -> RegionDescriptor:
        return self._combine(other, Union)

    def __and__(self, other: RegionDescriptor) -> RegionDescriptor:
        return self._combine(other, Intersection)

    def __invert__(self) -> RegionDescriptor:
        return RegionDescriptor(self.view, Complement(self.expr))

    def __contains__(self, x: Point) -> bool:
        return member(self, x)

    def points(self) -> list[Point]:
        return list(dict.fromkeys(_expr_points(self.expr)))

    def __str__(self) -> str:
        return str(self.expr)


def _eval(expr: Expr, view: OrderView, x: Point) -> bool:
    if isinstance(expr, TangentClassAtom):
        return x in expr
    if isinstance(expr, UpSet):
        return leq(view, expr.point, x)
    if isinstance(expr, StrictUpSet):
        return x != expr.point and leq(view, expr.point, x)
    if isinstance(expr, Singleton):
        return x == expr.point
    if isinstance(expr, Whole):
        return True
    if isinstance(expr, Empty):
        return False
    if isinstance(expr, Union):
        return any(_eval(p, view, x) for p in expr.parts)
    if isinstance(expr, Intersection):
        return all(_eval(p, view, x) for p in expr.parts)
    if isinstance(expr, Complement):
        return not _eval(expr.part, view, x)
    raise RegionError(f"unknown region node {expr!r}")


def member(region: RegionDescriptor, x: Point) -> bool:
    return _eval(region.expr, region.view, x)


# ---------------------------------------------------------------------------
# expression syntax

_TOKEN = re.compile(r"\s*(?:([()|&!,])|([A-Za-z0-9_.@/\-]+))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise RegionError(f"unexpected character at {pos} in {text!r}")
        tokens.append(m.group(1) or m.group(2))
        pos = m.end()
    return tokens


def parse_region(view: OrderView, text: str) -> RegionDescriptor:
    """Parse ``class(A,T)``, ``up(P)``, ``strictup(P)``, ``point(P)``, ``whole``,
    ``empty`` combined with ``|``, ``&``, ``!`` and parentheses."""
    sk = view.skeleton
    tokens = _tokenize(text)
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take(expected: str | None = None) -> str:
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise RegionError(f"expected {expected or 'a token'} in {text!r}, got {tok!r}")
        pos += 1
        return tok

    def pt() -> Point:
        try:
            return canonicalize(sk, take())
        except TreeError as exc:
            raise RegionError(str(exc)) from exc

    def expr() -> Expr:
        parts = [term()]
        while peek() == "|":
            take()
            parts.append(term())
        return parts[0] if len(parts) == 1 else Union(tuple(parts))

    def term() -> Expr:
        parts = [factor()]
        while peek() == "&":
            take()
            parts.append(factor())
        return parts[0] if len(parts) == 1 else Intersection(tuple(parts))

    def factor() -> Expr:
        tok = peek()
        if tok == "!":
            take()
            return Complement(factor())
        if tok == "(":
            take()
            e = expr()
            take(")")
            return e
        name = take()
        if name == "whole":
            return Whole()
        if name == "empty":
            return Empty()
        if name in ("class", "up", "strictup", "point"):
            take("(")
            first = pt()
            if name == "class":
                take(",")
                second = pt()
                take(")")
                try:
                    return tangent_class(sk, first, second)
                except TreeError as exc:
                    raise RegionError(str(exc)) from exc
            take(")")
            return {"up": UpSet, "strictup": StrictUpSet, "point": Singleton}[name](first)
        raise RegionError(f"unknown region atom {name!r} in {text!r}")

    result = expr()
    if peek() is not None:
        raise RegionError(f"trailing tokens in {text!r}: {tokens[pos:]}")
    return RegionDescriptor(view, result)


# ---------------------------------------------------------------------------
# cut decomposition


def _anchors(region: RegionDescriptor, extra: Iterable[Point] = ()) -> list[Point]:
    return [*region.points(), region.view.base, *extra]


def cut_points(region: RegionDescriptor, extra: Iterable[Point] = ()) -> list[Point]:
    """Exactness basis for ``region``: vertices, mentioned points, sub-arc midpoints."""
    return cut_basis(region.view.skeleton, _anchors(region, extra))


def _below(view: OrderView, p: Point, anchors: Sequence[Point]) -> Point:
    """A point just below ``p`` in ``view``: the midpoint of the sub-arc under it."""
    sk = view.skeleton
    d = direction(sk, p, view.base)
    here = _offset_on(sk, d.edge, p)
    assert here is not None
    end = sk.lengths[d.edge] if d.toward == d.edge[1] else 0
    best = end
    for q in anchors:
        off = _offset_on(sk, d.edge, q)
        if off is not None and min(here, end) <= off <= max(here, end) and off != here:
            if abs(off - here) < abs(best - here):
                best = off
    return canonicalize(sk, (d.edge[0], d.edge[1], (here + best) / 2))


# ---------------------------------------------------------------------------
# deciders


def upper_set_violation(region: RegionDescriptor, view: OrderView) -> tuple[Point, Point] | None:
    """A pair ``x <= y`` with ``x`` in the region and ``y`` outside, or None."""
    sk = view.skeleton
    cuts = cut_points(region, extra=[view.base])
    inside = [x for x in cuts if member(region, x)]
    outside = [y for y in cuts if not member(region, y)]
    outside.sort(key=lambda y: distance(sk, view.base, y))
    for y in outside:
        for x in inside:
            if leq(view, x, y):
                return x, y
    return None


def is_upper_set(region: RegionDescriptor, view: OrderView) -> bool:
    return upper_set_violation(region, view) is None


@dataclass(frozen=True)
class DirectedChain:
    """Increasing chain; with ``limit`` set it stands for the chain together with
    the half-open tail climbing from its last element toward the limit, whose
    supremum ``limit`` is not attained."""

    elements: tuple[Point, ...]
    limit: Point | None = None

    @property
    def supremum(self) -> Point:
        return self.limit if self.limit is not None else self.elements[-1]

    def check(self, view: OrderView) -> None:
        if not self.elements:
            raise ChainError("a directed set is non-empty")
        for x, y in zip(self.elements, self.elements[1:]):
            if not lt(view, x, y):
                raise ChainError(f"chain not increasing under {view}: {x} then {y}")
        if self.limit is not None and not lt(view, self.elements[-1], self.limit):
            raise ChainError(f"limit {self.limit} not strictly above {self.elements[-1]}")

    def __str__(self) -> str:
        body = " < ".join(map(str, self.elements))
        return body + (f" -> {self.limit}" if self.limit is not None else "")


def inaccessibility_violation(
    region: RegionDescriptor, view: OrderView, chains: Iterable[DirectedChain]
) -> DirectedChain | None:
    """First chain whose supremum is in the region while the chain avoids it."""
    chains = list(chains)
    for ch in chains:
        ch.check(view)
    sk = view.skeleton
    extra = [view.base]
    for ch in chains:
        extra.extend(ch.elements)
        if ch.limit is not None:
            extra.append(ch.limit)
    fine = cut_points(region, extra=extra)
    memo: dict[Point, bool] = {}

    def mem(x: Point) -> bool:
        if x not in memo:
            memo[x] = member(region, x)
        return memo[x]

    tails: dict[tuple[Point, Point], bool] = {}

    def tail_hits(lo: Point, hi: Point) -> bool:
        if (lo, hi) not in tails:
            path = geodesic(sk, lo, hi)
            tails[(lo, hi)] = any(
                point_on_segment(s, path, include_start=False, include_end=False) and mem(s) for s in fine
            )
        return tails[(lo, hi)]

    for ch in chains:
        if not mem(ch.supremum):
            continue
        if any(mem(x) for x in ch.elements):
            continue
        if ch.limit is not None and tail_hits(ch.elements[-1], ch.limit):
            continue
        return ch
    return None


def is_inaccessible_by_directed_joins(
    region: RegionDescriptor, view: OrderView, chains: Iterable[DirectedChain]
) -> bool:
    return inaccessibility_violation(region, view, chains) is None


@lru_cache(maxsize=512)
def scott_violation(region: RegionDescriptor, view: OrderView) -> tuple[str, Point, Point] | None:
    """Why ``region`` is not Scott-open, as ``(reason, x, y)``, or None.

    ``("upper", x, y)``: ``x <= y``, ``x`` inside, ``y`` outside.
    ``("join", p, q)``: ``p`` inside but the points just below it (sampled by
    ``q``) are not, so the chain climbing to ``p`` never enters the region.
    """
    bad = upper_set_violation(region, view)
    if bad is not None:
        return ("upper", *bad)
    anchors = _anchors(region, [view.base])
    for p in cut_points(region, extra=[view.base]):
        if p == view.base or not member(region, p):
            continue
        q = _below(view, p, anchors)
        if not member(region, q):
            return ("join", p, q)
    return None


def is_scott_open(region: RegionDescriptor, view: OrderView) -> bool:
    """Upper set whose every non-base point has a strict predecessor inside."""
    return scott_violation(region, view) is None


def region_subset(inner: RegionDescriptor, outer: RegionDescriptor, extra: Iterable[Point] = ()) -> bool:
    pts = [*_anchors(inner), *_anchors(outer), *extra]
    return all(member(outer, x) for x in cut_basis(inner.view.skeleton, pts) if member(inner, x))


def regions_disjoint(first: RegionDescriptor, second: RegionDescriptor) -> bool:
    pts = [*_anchors(first), *_anchors(second)]
    return not any(member(first, x) and member(second, x) for x in cut_basis(first.view.skeleton, pts))


def weak_open_witness(region: RegionDescriptor, a: Point, view: OrderView) -> Point:
    """A ``t`` strictly below ``a`` with ``[a]_t`` inside the Scott-open ``region``.

    Prefers the closest vertex or anchor point under ``a`` that lies in the
    region; only when there is none does it fall back to the closest sub-arc
    midpoint.
    """
    if not member(region, a):
        raise RegionError(f"{a} is not in {region}")
    if a == view.base:
        raise RegionError(f"{a} is the base of {view}; it has no strict predecessor")
    if not is_scott_open(region, view):
        raise RegionError(f"{region} is not Scott-open under {view}")
    sk = view.skeleton
    anchors = set(_anchors(region, [a]))
    below = [c for c in cut_points(region, extra=[view.base, a]) if lt(view, c, a) and member(region, c)]
    if not below:
        raise RegionError(f"no predecessor of {a} inside {region}")
    firm = [c for c in below if c.vertex is not None or c in anchors]
    t = max(firm or below, key=lambda c: distance(sk, view.base, c))
    cls = RegionDescriptor(region.view, tangent_class(sk, a, t))
    if not region_subset(cls, region):
        raise RegionError(f"[{a}]_{t} is not contained in {region}")
    return t


def hausdorff_witness(skeleton: TreeSkeleton, p: Point, q: Point) -> tuple[RegionDescriptor, RegionDescriptor]:
    """Disjoint tangent classes around ``p`` and ``q``, split at the midpoint of ``[p, q]``."""
    if p == q:
        raise RegionError("separating a point from itself")
    path = geodesic(skeleton, p, q)
    m = point_along(skeleton, path, path.length / 2)
    view = root_view(skeleton)
    return (
        RegionDescriptor(view, tangent_class(skeleton, p, m)),
        RegionDescriptor(view, tangent_class(skeleton, q, m)),
    )


def chain_family(region: RegionDescriptor, view: OrderView, max_len: int = 6) -> list[DirectedChain]:
    """Every run of up to ``max_len`` consecutive cut points along each
    base-to-leaf path, once ending at its supremum and once with the last
    point held back as an unattained limit."""
    sk = view.skeleton
    cuts = cut_points(region, extra=[view.base])
    ends = [Point(vertex=v) for v in sk.vertices if sk.degree(v) == 1 and Point(vertex=v) != view.base]
    if not ends:
        ends = [view.base]
    family: dict[DirectedChain, None] = {}
    for end in ends:
        path = geodesic(sk, view.base, end)
        on = sorted((c for c in cuts if point_on_segment(c, path)), key=lambda c: distance(sk, view.base, c))
        for i in range(len(on)):
            for n in range(1, max_len + 1):
                run = tuple(on[i : i + n])
                if len(run) < n:
                    break
                family[DirectedChain(run)] = None
                if n >= 2:
                    family[DirectedChain(run[:-1], run[-1])] = None
    return list(family)
