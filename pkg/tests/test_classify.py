import random
from dataclasses import replace
from math import gcd

import pytest

from oracles import random_curve

from curvemonoid.classify import NotFreeError, classify_curve, delta_sequence, puiseux_exponents
from curvemonoid.kahler import CurveParametrization, curve_invariants
from curvemonoid.numsgp import NotNumericalError, NumericalSemigroup
from curvemonoid.poly import parse_poly


def report(x, y):
    return curve_invariants(CurveParametrization.from_pair(parse_poly(x), parse_poly(y)))


@pytest.mark.parametrize(
    "gens,m,n,puiseux,decreasing",
    [((4, 6, 7), 4, 6, [-6, -1], True), ((4, 6, 13), 4, 6, [-6, -7], False), ((3, 4), 3, 4, [-4], True)],
)
def test_delta_sequences(gens, m, n, puiseux, decreasing):
    ds = delta_sequence(NumericalSemigroup(gens), m, n)
    assert ds.r == gens
    assert ds.puiseux == puiseux
    assert ds.decreasing_ok == decreasing
    assert puiseux_exponents(ds) == puiseux


def test_gcd_chain():
    ds = delta_sequence(NumericalSemigroup([4, 6, 13]), 4, 6)
    assert ds.free.divisors == (4, 2, 1)
    g, chain = 4, []
    for mk in ds.puiseux:
        g = gcd(g, mk)
        chain.append(g)
    assert chain == [2, 1]


def test_not_free():
    with pytest.raises(NotFreeError):
        delta_sequence(NumericalSemigroup([3, 4, 5]), 3, 4)
    with pytest.raises(NotFreeError):
        delta_sequence(NumericalSemigroup([3, 4]), 4, 3)
    with pytest.raises(NotFreeError):
        delta_sequence(NumericalSemigroup([2, 3]), 2, 4)


@pytest.mark.parametrize(
    "x,y,ne,pattern,family",
    [
        ("t^3+t^2", "t^4", 1, "{F-1}", "(m,n)=(3,4)"),
        ("t^3", "t^4+t", 2, "{F-1,F-n-1}", "(m,n)=(3,4)"),
        ("t^3", "t^4+t^2", 2, "{F-1,F-m-1}", "(m,n)=(3,4)"),
        ("t^5", "t^2+t", 2, "{F-1,F-m-1}", "(m,n)=(2,2p+1), p=2"),
    ],
)
def test_small_ne_families(x, y, ne, pattern, family):
    c = classify_curve(report(x, y))
    assert c.ok, c.violations
    assert (c.ne, c.ne_set_pattern, c.family) == (ne, pattern, family)


def test_unconstrained_and_quasi_homogeneous():
    assert classify_curve(report("t^3+t", "t^4")).family == "unconstrained (ne >= 3)"
    c = classify_curve(report("t^7", "t^4"))
    assert c.ne == 0 and c.ok


def test_violations_are_listed_not_raised():
    rep = report("t^3+t^2", "t^4")
    fake = replace(rep, ne_set=[2])
    c = classify_curve(fake)
    assert not c.ok
    assert any("is not {F-1}" in v for v in c.violations)
    rep2 = report("t^3", "t^4+t")
    c2 = classify_curve(replace(rep2, delta=None))
    assert c2.violations == ["no free arrangement starting (m, n)"]


def _reports(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        try:
            out.append(curve_invariants(random_curve(rng)))
        except NotNumericalError:
            continue
    return out


@pytest.mark.parametrize("rep", _reports(41, 50))
def test_random_delta_sequences(rep):
    ds = rep.delta
    assert ds is not None, rep.notes
    S = rep.gamma
    assert NumericalSemigroup(list(ds.r)) == S
    assert ds.free.divisors[-1] == 1
    # one more generator than there are characteristic exponents
    assert len(ds.puiseux) == ds.h
    assert rep.ne == 0 or rep.ne >= 2 ** (ds.h - 1)
    if rep.ne in (1, 2):
        assert classify_curve(rep).ok
