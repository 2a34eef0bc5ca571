"""Kähler differentials of a polynomial plane curve t ↦ (x(t), y(t))."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .algebra import AlgebraBasis, compute_algebra_basis
from .ideals import RelativeIdeal
from .modbasis import ModuleBasis, compute_module_basis
from .numsgp import NotNumericalError, NumericalSemigroup
from .poly import Poly


class ParametrizationError(ValueError):
    pass


@dataclass(frozen=True)
class CurveParametrization:
    """``x`` has the larger degree ``n``, ``y`` the smaller degree ``m``."""

    x: Poly
    y: Poly

    def __post_init__(self):
        if self.y.degree < 1 or self.x.degree <= self.y.degree:
            raise ParametrizationError(
                f"need 1 <= deg y < deg x, got deg x = {self.x.degree}, deg y = {self.y.degree}"
            )

    @classmethod
    def from_pair(cls, a: Poly, b: Poly) -> "CurveParametrization":
        """Order two polynomials by degree and make them monic."""
        if a.degree < 1 or b.degree < 1:
            raise ParametrizationError("both coordinates must be nonconstant")
        if a.degree == b.degree:
            raise ParametrizationError(f"coordinates have the same degree {a.degree}")
        hi, lo = (a, b) if a.degree > b.degree else (b, a)
        return cls(hi.monic(), lo.monic())

    @property
    def n(self) -> int:
        return self.x.degree

    @property
    def m(self) -> int:
        return self.y.degree

    def reduced(self) -> "CurveParametrization":
        """Strip ``x`` by powers of ``y`` while ``m | n``.

        The algebra K[x, y] and the module x'A + y'A do not change.
        """
        x, y = self.x, self.y
        while x.degree % y.degree == 0:
            x = x - y ** (x.degree // y.degree)
            x = x - Poly.const(x.coeff(0))
            if x.degree < 1:
                raise ParametrizationError("coordinates are algebraically dependent on one of them")
            if x.degree < y.degree:
                x, y = y, x.monic()
            else:
                x = x.monic()
        return CurveParametrization(x, y)


@dataclass
class DifferentialReport:
    gamma: NumericalSemigroup
    ideal: RelativeIdeal
    ne_set: List[int]
    mu: int
    basis: ModuleBasis
    delta: Optional[object] = None  # classify.DeltaSequence when freeness verified
    notes: List[str] = field(default_factory=list)

    @property
    def ne(self) -> int:
        return len(self.ne_set)

    @property
    def nu(self) -> int:
        return self.mu - self.ne

    @property
    def quasi_homogeneous(self) -> bool:
        return self.ne == 0


def curve_algebra(p: CurveParametrization) -> AlgebraBasis:
    A = compute_algebra_basis([p.x, p.y])
    if not A.numerical:
        raise NotNumericalError(
            f"degree monoid {list(A.degree_monoid.minimal_generators)} has gcd {A.degree_monoid.content};"
            " K[t] is not finite over K[x, y]"
        )
    return A


def kahler_module(p: CurveParametrization, algebra: Optional[AlgebraBasis] = None) -> ModuleBasis:
    A = algebra or curve_algebra(p)
    return compute_module_basis([p.x.derivative(), p.y.derivative()], A)


def non_exact_set(I: RelativeIdeal, S: NumericalSemigroup) -> List[int]:
    """Elements ``i`` of ``I`` with ``i + 1`` outside ``S``."""
    return [i for i in range(I.minimum, S.conductor) if i in I and (i + 1) not in S]


def curve_invariants(p: CurveParametrization) -> DifferentialReport:
    A = curve_algebra(p)
    M = kahler_module(p, A)
    S = A.semigroup()
    report = DifferentialReport(S, M.degree_ideal, non_exact_set(M.degree_ideal, S), S.conductor, M)
    from .classify import NotFreeError, delta_sequence

    q = p.reduced()
    try:
        report.delta = delta_sequence(S, q.m, q.n)
    except NotFreeError as exc:
        report.notes.append(f"freeness not verified: {exc}")
    return report


def parametrization(x: Poly, y: Poly) -> CurveParametrization:
    return CurveParametrization.from_pair(x, y)

