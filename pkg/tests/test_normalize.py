import random

import mpmath
import pytest

from oracles import random_curve

from curvemonoid.kahler import CurveParametrization, curve_invariants
from curvemonoid.normalize import (
    NON_EXACT_WITNESS,
    PRECISION_EXHAUSTED,
    QUASI_HOMOGENEOUS,
    curve_wronskian,
    default_precision,
    normal_form,
    reparametrize,
    root_parameter,
    wronskian,
)
from curvemonoid.numsgp import NotNumericalError
from curvemonoid.poly import LaurentSeries, Poly, Q, parse_poly

mpmath.mp.dps = 60


def curve(x, y):
    return CurveParametrization.from_pair(parse_poly(x), parse_poly(y))


def _numeric_x1(p, shift, T):
    """x evaluated at the root t ~ T of y(t) = T^m, by Newton iteration."""
    x, y = p.x.shift(shift), p.y.shift(shift)
    ev = lambda f, t: sum(mpmath.mpf(c.numerator) / c.denominator * t**e for e, c in f.items())
    t = mpmath.findroot(lambda t: ev(y, t) - mpmath.mpf(T) ** p.m, mpmath.mpf(T))
    return ev(x, t)


def _eval_series(s, T):
    return sum(mpmath.mpf(c.numerator) / c.denominator * mpmath.mpf(T) ** e for e, c in s.items())


def test_quasi_homogeneous_monomial_curve():
    out = normal_form(curve("t^7", "t^4"))
    assert out.kind == QUASI_HOMOGENEOUS and out.witness_degree is None
    assert curve_wronskian(parse_poly("t^7"), parse_poly("t^4")).is_zero()


def test_move_one_example():
    x, y = parse_poly("t^9+t^5"), parse_poly("t^4")
    assert curve_wronskian(x, y) == Poly({8: 16})
    assert curve_wronskian(x, parse_poly("t^4+4/9")) == Poly({4: Q(-80, 9)})
    out = normal_form(curve("t^9+t^5", "t^4"))
    assert out.kind == NON_EXACT_WITNESS and out.witness_degree == 4
    assert out.steps[1].y == parse_poly("t^4+4/9")
    assert out.steps[0].move == "Y += 4/9"


def test_move_two_example():
    p = curve("t^7", "t^4+t")
    assert curve_wronskian(p.x, p.y) == Poly({7: -21})
    np_ = reparametrize(p)
    assert [np_.x1.coeff(e) for e in (7, 6, 5, 4, 3, 2, 1)] == [1, 0, 0, Q(-7, 4), 0, 0, Q(35, 32)]
    assert np_.lam == 4 and np_.c_lam == Q(-7, 4)
    out = normal_form(p)
    assert out.kind == NON_EXACT_WITNESS and out.witness_degree == 4
    first, second = out.steps[:2]
    assert first.move == "X -= -7/4*Y^1"
    assert second.x == parse_poly("t^7+7/4*t^4+7/4*t")
    assert (second.w.degree, second.w.lc) == (4, Q(105, 4))


def test_move_two_series_against_numeric_root():
    p = curve("t^7", "t^4+t")
    np_ = reparametrize(p, -20)
    for T in (30, 80):
        got = _eval_series(np_.x1, T)
        want = _numeric_x1(p, np_.shift, T)
        assert abs(got - want) < mpmath.mpf(10) ** -20
    # the truncation with -1/4 and 7/16 in place of -7/4 and 35/32 misses badly
    alt = LaurentSeries({7: 1, 4: Q(-1, 4), 1: Q(7, 16)})
    assert abs(_eval_series(alt, 30) - _numeric_x1(p, np_.shift, 30)) > 1000


def _random_cases(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = random_curve(rng)
        try:
            curve_invariants(p)
        except NotNumericalError:
            continue
        out.append(p)
    return out


@pytest.mark.parametrize("p", _random_cases(21, 15))
def test_series_against_numeric_root(p):
    np_ = reparametrize(p, -14)
    T = 60
    got = _eval_series(np_.x1, T)
    want = _numeric_x1(p, np_.shift, T)
    assert abs(got - want) <= abs(want) * mpmath.mpf(10) ** -25 + mpmath.mpf(10) ** -8


def test_root_parameter_is_mth_root():
    y = parse_poly("t^3+2*t+5")
    q = root_parameter(y, -10)
    cube = q.mul(q, -9).mul(q, -9)
    assert cube.equal_to_precision(LaurentSeries.from_poly(y), -8)


def test_series_wronskian_leading_term_matches():
    p = curve("t^7", "t^4+t")
    np_ = reparametrize(p, -8)
    W = wronskian(np_)
    lead = max(e for e, c in W.items() if c)
    assert lead == np_.lam + np_.m - 1
    assert W.coeff(lead) == np_.m * (np_.n - np_.lam) * np_.c_lam


@pytest.mark.parametrize("p", _random_cases(31, 60))
def test_outcome_invariants(p):
    rep = curve_invariants(p)
    out = normal_form(p)
    lams = [s.lam for s in out.steps if s.lam is not None]
    assert lams == sorted(lams, reverse=True) and len(set(lams)) == len(lams)
    for s in out.steps:
        if s.lam is not None:
            assert s.w.degree == s.lam + p.reduced().m - 1
    if out.kind == NON_EXACT_WITNESS:
        assert out.witness_degree in rep.ne_set
    else:
        assert out.kind == QUASI_HOMOGENEOUS
        assert rep.ne == 0
        assert out.steps[-1].w.is_zero()


def test_precision_exhausted_with_shallow_floor():
    p = curve("t^6-t", "t^5")
    assert default_precision(p) == -6
    deep = normal_form(p)
    assert [s.lam for s in deep.steps] == [1, -4]
    shallow = normal_form(p, max_precision=-2)
    assert shallow.kind == PRECISION_EXHAUSTED
    assert "below the floor" in shallow.message


def test_reparametrize_rejects_nonnegative_precision():
    with pytest.raises(ValueError):
        reparametrize(curve("t^5", "t^2"), 0)


def test_translation_removes_subleading_term():
    np_ = reparametrize(curve("t^5", "t^2+2*t"), -6)
    assert np_.shift == -1
