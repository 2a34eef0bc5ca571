"""Normal form of a plane parametrization: Y a pure power, then W-driven moves.

With ``Y(t) = t^m (1 + v)`` the new parameter ``T = t (1 + v)^{1/m}`` makes
``Y = T^m`` and ``X = T^n + sum_{p<n} c_p T^p``.  The weighted Wronskian

    W = n Y' X - m X' Y = sum_p m (n - p) c_p T^{p+m-1}

then has degree ``m + λ - 1`` where ``λ`` is the largest exponent below
``n`` with ``c_λ != 0``.  Every move is a ring operation on the pair, so it
is carried out on the polynomials in the original parameter ``t``, where
``W`` is an exact polynomial with the same leading term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .algebra import compute_algebra_basis
from .kahler import CurveParametrization
from .numsgp import NotNumericalError
from .poly import EXACT, LaurentSeries, Poly, Q, compose, series_invert_parameter

QUASI_HOMOGENEOUS = "quasi_homogeneous"
NON_EXACT_WITNESS = "non_exact_witness"
PRECISION_EXHAUSTED = "precision_exhausted"


class PrecisionError(ArithmeticError):
    """The truncation floor is too shallow to see λ."""


class UnsupportedMoveError(ArithmeticError):
    """``m + λ`` lies in the semigroup but is neither ``n`` nor a multiple of ``m``."""


@dataclass
class NormalizedParametrization:
    x1: LaurentSeries
    y1: LaurentSeries
    n: int
    m: int
    lam: Optional[int]
    precision: int
    shift: Q = Q(0)  # t was replaced by t + shift before taking the root

    @property
    def c_lam(self) -> Q:
        return self.x1.coeff(self.lam) if self.lam is not None else Q(0)


@dataclass
class NormalFormStep:
    x: Poly
    y: Poly
    x1: LaurentSeries
    lam: Optional[int]
    c_lam: Q
    w: Poly
    move: str = ""


@dataclass
class NormalFormOutcome:
    kind: str
    witness_degree: Optional[int] = None
    steps: List[NormalFormStep] = field(default_factory=list)
    message: str = ""


def default_precision(p: CurveParametrization) -> int:
    # λ >= 1 - m whenever W != 0, because W is a polynomial in t
    return -(p.m + 1)


def _binomial(a: Q, j: int) -> Q:
    out = Q(1)
    for i in range(j):
        out = out * (a - i) / (i + 1)
    return out


def root_parameter(y: Poly, floor: int) -> LaurentSeries:
    """``t (1 + v)^{1/m}`` for monic ``y = t^m (1 + v)``, known down to ``floor``."""
    m = y.degree
    v = LaurentSeries({e - m: c for e, c in y.items() if e != m})
    target = floor - 1
    acc = LaurentSeries({0: 1}, target)
    if v.is_zero():
        return LaurentSeries({1: 1})
    a = Q(1, m)
    vj = LaurentSeries({0: 1})
    j = 0
    while True:
        j += 1
        vj = vj.mul(v, target)
        if vj.is_zero():
            break
        acc = acc + vj.scale(_binomial(a, j))
    return acc.shift_exponents(1)


def _shifted(p: CurveParametrization):
    m = p.m
    c = -p.y.coeff(m - 1) / m
    if not c:
        return p.x, p.y, Q(0)
    return p.x.shift(c), p.y.shift(c), c


def reparametrize(p: CurveParametrization, precision: Optional[int] = None) -> NormalizedParametrization:
    """Rewrite ``p`` in the parameter ``T`` with ``Y = T^m``.

    The ``t^{m-1}`` coefficient of ``y`` is first removed by a translation
    of ``t``.  ``x1`` is exact for exponents ``>= precision``.
    """
    if precision is None:
        precision = default_precision(p)
    if precision >= 0:
        raise ValueError("precision must be negative")
    n, m = p.n, p.m
    x, y, c0 = _shifted(p)
    inner_floor = precision - n
    q = root_parameter(y, inner_floor)
    if q.is_exact() and len(q.terms) == 1:
        q1 = LaurentSeries({1: 1})
        x1 = LaurentSeries.from_poly(x, precision)
    else:
        q1 = series_invert_parameter(q, inner_floor)
        x1 = compose(x, q1, precision)
    lam = max((e for e, c in x1.items() if e < n), default=None)
    return NormalizedParametrization(x1, LaurentSeries({m: 1}), n, m, lam, precision, c0)


def wronskian(np: NormalizedParametrization) -> LaurentSeries:
    """``n Y1' X1 - m X1' Y1`` in the parameter T."""
    n, m = np.n, np.m
    return (np.y1.derivative() * np.x1).scale(n) - (np.x1.derivative() * np.y1).scale(m)


def curve_wronskian(x: Poly, y: Poly) -> Poly:
    """Same expression in the original parameter, with ``n = deg x`` and ``m = deg y``."""
    n, m = x.degree, y.degree
    return (y.derivative() * x).scale(n) - (x.derivative() * y).scale(m)


def normal_form(p: CurveParametrization, max_precision: Optional[int] = None) -> NormalFormOutcome:
    """Run the moves until ``W = 0`` or ``deg W`` is a non-exact degree.

    ``max_precision`` is the truncation floor for the series; by default it
    is just deep enough for every possible λ.
    """
    q = p.reduced()
    A = compute_algebra_basis([q.x, q.y])
    if not A.numerical:
        raise NotNumericalError(f"degree monoid has gcd {A.degree_monoid.content}")
    S = A.semigroup()
    n, m = q.n, q.m
    floor = default_precision(q) if max_precision is None else max_precision
    x, y = q.x, q.y
    out = NormalFormOutcome(QUASI_HOMOGENEOUS)
    prev_lam = None
    for _ in range(n + m + 2):
        w = curve_wronskian(x, y)
        if w.is_zero():
            np = reparametrize(CurveParametrization(x, y), floor)
            out.steps.append(NormalFormStep(x, y, np.x1, None, Q(0), w, "W = 0"))
            return out
        lam = w.degree - m + 1
        if lam < floor:
            out.kind = PRECISION_EXHAUSTED
            out.message = f"λ = {lam} lies below the floor {floor}"
            return out
        np = reparametrize(CurveParametrization(x, y), floor)
        if np.lam != lam:
            raise ArithmeticError(f"series gives λ={np.lam}, Wronskian gives λ={lam}")
        c = np.c_lam
        if c * m * (n - lam) != w.lc:
            raise ArithmeticError("leading coefficient of W disagrees with c_λ")
        if prev_lam is not None and lam >= prev_lam:
            raise ArithmeticError(f"λ did not decrease: {prev_lam} -> {lam}")
        prev_lam = lam
        step = NormalFormStep(x, y, np.x1, lam, c, w)
        out.steps.append(step)
        s = m + lam
        if s not in S:
            step.move = f"{s} not in the semigroup"
            out.kind = NON_EXACT_WITNESS
            out.witness_degree = s - 1
            return out
        if s == n:
            alpha = Q(m, n) * c
            y = y + alpha
            step.move = f"Y += {alpha}"
        elif s % m == 0:
            theta = s // m
            x = x - (y ** (theta - 1)).scale(c)
            step.move = f"X -= {c}*Y^{theta - 1}"
        else:
            raise UnsupportedMoveError(f"m+λ = {s} is in the semigroup but is neither n = {n} nor a multiple of m = {m}")
    raise ArithmeticError("normal form did not terminate")
