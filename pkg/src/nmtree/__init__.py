"""Finite rooted non-metric trees and their Scott / weak tree topologies."""
from .metric import Parametrization, d_psi, epsilon_witness, psi
from .regions import (
    DirectedChain,
    RegionDescriptor,
    cut_points,
    hausdorff_witness,
    is_inaccessible_by_directed_joins,
    is_scott_open,
    is_upper_set,
    member,
    parse_region,
    weak_open_witness,
)
from .tangent import TangentClassAtom, TangentSpace, same_class, tangent_class, tangent_space
from .tree import (
    OrderView,
    PathRepr,
    Point,
    TreeError,
    TreeSkeleton,
    canonicalize,
    infimum,
    leq,
    meet,
    parse_point,
    parse_tree,
    point_on_segment,
    reroot,
    root_view,
    segment,
)

__version__ = "0.1.0"
