"""Tangent classes ``[a]_t`` and the tangent space at a point.

``a ~_t b`` holds when ``t`` is not on the segment ``[a, b]``; the classes are
the connected components of the realization with ``t`` removed, one per
direction leaving ``t``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .tree import (
    Point,
    TreeError,
    TreeSkeleton,
    _direction_step,
    _on_geodesic,
    _waypoints,
)

__all__ = [
    "Direction",
    "TangentClassAtom",
    "TangentSpace",
    "direction",
    "same_class",
    "tangent_class",
    "tangent_space",
]


@dataclass(frozen=True, slots=True)
class Direction:
    """A way out of a point: the edge taken and the endpoint it heads for."""

    edge: tuple[str, str]
    toward: str

    def __str__(self) -> str:
        other = self.edge[0] if self.toward == self.edge[1] else self.edge[1]
        return f"{other}-{self.toward}"


def direction(skeleton: TreeSkeleton, t: Point, x: Point) -> Direction:
    """First step of the path from ``t`` to ``x``."""
    if x == t:
        raise TreeError(f"no direction from {t} to itself")
    pts = _waypoints(skeleton, t, x)
    return Direction(*_direction_step(skeleton, pts[0], pts[1]))


@dataclass(frozen=True)
class TangentClassAtom:
    """The class ``[representative]_anchor``.

    Equality compares anchor and direction only, which is equality of the
    underlying point sets.
    """

    anchor: Point
    representative: Point = field(compare=False)
    direction: Direction
    skeleton: TreeSkeleton = field(compare=False, repr=False)

    def __contains__(self, x: Point) -> bool:
        if x == self.anchor:
            return False
        return not _on_geodesic(self.skeleton, self.anchor, self.representative, x)

    def __str__(self) -> str:
        return f"class({self.representative},{self.anchor})"


@dataclass(frozen=True)
class TangentSpace:
    anchor: Point
    classes: tuple[TangentClassAtom, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, x: Point) -> TangentClassAtom:
        for atom in self.classes:
            if x in atom:
                return atom
        raise TreeError(f"{x} lies in no class at {self.anchor}")


def same_class(skeleton: TreeSkeleton, a: Point, b: Point, t: Point) -> bool:
    """``a ~_t b``; only defined away from ``t``."""
    if a == t or b == t:
        raise TreeError(f"~_t is defined on points other than t = {t}")
    return not _on_geodesic(skeleton, t, a, b)


def tangent_class(skeleton: TreeSkeleton, a: Point, t: Point) -> TangentClassAtom:
    if a == t:
        raise TreeError(f"[a]_t needs a != t (both are {t})")
    return TangentClassAtom(t, a, direction(skeleton, t, a), skeleton)


def tangent_space(skeleton: TreeSkeleton, t: Point) -> TangentSpace:
    """One class per direction at ``t``, represented by the neighbouring vertex."""
    if t.vertex is not None:
        reps = [Point(vertex=w) for w in skeleton.neighbors(t.vertex)]
    else:
        assert t.edge is not None
        reps = [Point(vertex=t.edge[0]), Point(vertex=t.edge[1])]
    return TangentSpace(t, tuple(tangent_class(skeleton, r, t) for r in reps))
