import random

import pytest

from oracles import default_cap, module_staircase, random_poly

from curvemonoid.algebra import compute_algebra_basis
from curvemonoid.modbasis import (
    compute_module_basis,
    is_module_basis,
    min_s_polynomials,
    module_reduce,
)
from curvemonoid.numsgp import NotNumericalError
from curvemonoid.poly import Poly, Q, parse_poly, parse_poly_list

A = compute_algebra_basis(parse_poly_list("t^6+t,t^4"))


def test_worked_example():
    M = compute_module_basis(parse_poly_list("t^3,t^4"), A)
    assert M.render() == "[ t^3, t^4, t^5, t^6 ]"
    assert list(M.degree_ideal.min_gens) == [3, 4, 5, 6]
    assert is_module_basis(M.gens, A) == (True, None)


def test_reduction_example():
    # t^3 (t^7 + 1/2 t^2) - t^4 (t^6+t) leaves -1/2 t^5
    s = parse_poly("t^3") * parse_poly("t^7+1/2*t^2") - parse_poly("t^4") * parse_poly("t^6+t")
    assert s == parse_poly("-1/2*t^5")
    red = module_reduce(s, parse_poly_list("t^3,t^4"), A)
    assert red.raw_remainder == parse_poly("-1/2*t^5")
    assert red.remainder == parse_poly("t^5")


def test_starting_set_is_not_a_basis():
    ok, witness = is_module_basis(parse_poly_list("t^3,t^4"), A)
    assert not ok and witness.degree in (5, 6)
    assert any(p for p in min_s_polynomials(parse_poly_list("t^3,t^4"), A))


def test_needs_numerical_algebra():
    B = compute_algebra_basis(parse_poly_list("t^4,t^6"))
    with pytest.raises(NotNumericalError):
        compute_module_basis([Poly.monomial(1)], B)


def test_rejects_zero_generator():
    with pytest.raises(ValueError):
        compute_module_basis([Poly()], A)
    with pytest.raises(ValueError):
        compute_module_basis([], A)


def test_constant_generator_gives_whole_algebra():
    M = compute_module_basis([Poly.const(3)], A)
    assert M.render() == "[ 1 ]"


def _random_case(rng):
    while True:
        gens = [random_poly(rng, rng.randint(2, 9), constant=True) for _ in range(rng.randint(1, 3))]
        B = compute_algebra_basis(gens)
        if B.numerical:
            break
    F = [random_poly(rng, rng.randint(0, 8), constant=True) for _ in range(rng.randint(1, 3))]
    return gens, B, F


@pytest.mark.parametrize("seed", range(30))
def test_random_bases(seed):
    rng = random.Random(seed)
    gens, B, F = _random_case(rng)
    M = compute_module_basis(F, B)
    assert is_module_basis(M.gens, B) == (True, None)
    S = B.semigroup()
    degs = [g.degree for g in M.gens]
    assert degs == sorted(degs)
    # minimal: no leading degree is reachable from another one
    assert all((a - b) not in S for a in degs for b in degs if a != b)
    for g in M.gens:
        assert g.is_monic()
    # the input and random A-combinations of it lie in the module
    for f in F:
        assert module_reduce(f, M.gens, B).remainder.is_zero()
    combo = Poly()
    for f in F:
        combo = combo + f * B.gens[rng.randrange(len(B.gens))].scale(rng.choice([1, -2, Q(1, 3)]))
    combo = combo + F[0].scale(5)
    assert module_reduce(combo, M.gens, B).remainder.is_zero()


@pytest.mark.parametrize("seed", range(20))
def test_degree_ideal_matches_staircase(seed):
    rng = random.Random(500 + seed)
    gens, B, F = _random_case(rng)
    M = compute_module_basis(F, B)
    S = B.semigroup()
    bound = max(f.degree for f in F) + S.conductor + 2 * S.multiplicity
    truth = {d for d in range(bound + 1) if d in M.degree_ideal}
    assert module_staircase(gens, F, bound, default_cap(bound, gens + F)) == truth


@pytest.mark.parametrize("seed", range(10))
def test_order_of_generators_does_not_matter(seed):
    rng = random.Random(900 + seed)
    _, B, F = _random_case(rng)
    assert compute_module_basis(F, B).gens == compute_module_basis(F[::-1], B).gens
