"""Parametrization ``psi = 1 + distance from the base`` and its metric ``d_psi``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .tangent import TangentClassAtom
from .tree import OrderView, Point, TreeError, distance, meet, root_view, TreeSkeleton

__all__ = ["Parametrization", "psi", "d_psi", "epsilon_witness"]


@dataclass(frozen=True)
class Parametrization:
    """Increasing parametrization of ``view`` with values in ``[1, 1 + depth]``."""

    view: OrderView

    @classmethod
    def of(cls, skeleton: TreeSkeleton) -> Parametrization:
        return cls(root_view(skeleton))

    def __call__(self, x: Point) -> Fraction:
        return psi(self, x)


def psi(param: Parametrization, x: Point) -> Fraction:
    return 1 + distance(param.view.skeleton, param.view.base, x)


def d_psi(param: Parametrization, a: Point, b: Point) -> Fraction:
    """``(1/psi(a^b) - 1/psi(a)) + (1/psi(a^b) - 1/psi(b))``, meet taken in the parametrization's view."""
    m = meet(param.view, a, b)
    inv_m = 1 / psi(param, m)
    return (inv_m - 1 / psi(param, a)) + (inv_m - 1 / psi(param, b))


def epsilon_witness(param: Parametrization, p: Point, atom: TangentClassAtom) -> Fraction:
    """A radius whose open ``d_psi`` ball around ``p`` stays inside ``atom``.

    Any point outside the atom is reached from ``p`` through the anchor, and
    ``d_psi`` adds up along paths, so the distance to the anchor works.
    """
    if p == atom.anchor:
        raise TreeError(f"{p} is the anchor of {atom}")
    if p not in atom:
        raise TreeError(f"{p} is not in {atom}")
    return d_psi(param, p, atom.anchor)
