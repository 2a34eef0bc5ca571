"""Exact computations for subalgebras of K[t], their modules and plane curves."""

from .algebra import AlgebraBasis, compute_algebra_basis, is_algebra_basis, reduce_basis, toric_relations
from .classify import classify_curve, delta_sequence
from .ideals import RelativeIdeal, intersect, kernel_generators, over_ideals, pair_relators
from .kahler import CurveParametrization, curve_invariants, kahler_module, parametrization
from .modbasis import ModuleBasis, compute_module_basis, is_module_basis, module_reduce
from .normalize import normal_form, reparametrize, wronskian
from .numsgp import DegreeMonoid, NotNumericalError, NumericalSemigroup
from .poly import LaurentSeries, Poly, parse_poly, parse_poly_list

__version__ = "0.1.0"

__all__ = [
    "AlgebraBasis",
    "CurveParametrization",
    "DegreeMonoid",
    "LaurentSeries",
    "ModuleBasis",
    "NotNumericalError",
    "NumericalSemigroup",
    "Poly",
    "RelativeIdeal",
    "classify_curve",
    "compute_algebra_basis",
    "compute_module_basis",
    "curve_invariants",
    "delta_sequence",
    "intersect",
    "is_algebra_basis",
    "is_module_basis",
    "kahler_module",
    "kernel_generators",
    "module_reduce",
    "normal_form",
    "over_ideals",
    "pair_relators",
    "parametrization",
    "parse_poly",
    "parse_poly_list",
    "reduce_basis",
    "reparametrize",
    "toric_relations",
    "wronskian",
]
