import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_factorizations, algebra_staircase, default_cap, random_poly

from curvemonoid.algebra import (
    NotABasisError,
    algebra_remainder,
    compute_algebra_basis,
    is_algebra_basis,
    reduce_basis,
    toric_relations,
)
from curvemonoid.numsgp import DegreeMonoid
from curvemonoid.poly import Poly, Q, parse_poly, parse_poly_list


def test_basic_example():
    A = compute_algebra_basis(parse_poly_list("t^6+t,t^4"))
    assert A.render() == "[ t^4, t^6+t, t^7+1/2*t^2 ]"
    assert A.numerical and A.reduced and A.minimal
    assert A.degrees == [4, 6, 7]


def test_monomials_are_already_a_basis():
    A = compute_algebra_basis([Poly.monomial(3), Poly.monomial(5)])
    assert A.render() == "[ t^3, t^5 ]"
    assert is_algebra_basis(A.gens) == (True, None)


def test_non_numerical_algebra():
    A = compute_algebra_basis(parse_poly_list("t^4,t^6"))
    assert not A.numerical
    assert A.degree_monoid.content == 2


def test_constants_and_scalars_are_dropped():
    A = compute_algebra_basis(parse_poly_list("3, 2*t^2, t^3+5"))
    assert A.render() == "[ t^2, t^3 ]"


def test_no_generators():
    with pytest.raises(ValueError):
        compute_algebra_basis([parse_poly("7")])


def test_remainder_example():
    gens = parse_poly_list("t^4,t^6+t")
    res = algebra_remainder(parse_poly("t^12+t^7"), gens)
    # t^12 = (t^6+t)^2 - 2t^7 - t^2 so the remainder keeps -t^7 - t^2
    assert res.remainder == parse_poly("-t^7-t^2")
    assert res.quotient_part + res.remainder == parse_poly("t^12+t^7")


def test_remainder_requires_monic():
    with pytest.raises(ValueError):
        algebra_remainder(parse_poly("t"), parse_poly_list("2*t^2"))


def test_reduce_basis_checks_input():
    with pytest.raises(NotABasisError):
        reduce_basis(parse_poly_list("t^4,t^6+t"))


def test_toric_relations_examples():
    assert toric_relations([3, 4]) == [((4, 0), (0, 3))]
    assert len(toric_relations([4, 6, 7])) == 2
    assert toric_relations([5]) == []


def _connected_by_moves(facts, relations):
    """Whether the binomials connect all factorizations of one degree."""
    facts = list(facts)
    if len(facts) <= 1:
        return True
    pool = set(facts)
    seen = {facts[0]}
    stack = [facts[0]]
    while stack:
        z = stack.pop()
        for a, b in relations:
            for src, dst in ((a, b), (b, a)):
                if all(x >= y for x, y in zip(z, src)):
                    w = tuple(x - y + v for x, y, v in zip(z, src, dst))
                    if w in pool and w not in seen:
                        seen.add(w)
                        stack.append(w)
    return seen == pool


def _betti_count(degs, bound):
    # classical count: factorization graph, edges when supports meet
    total = 0
    for b in range(1, bound + 1):
        facts = list(all_factorizations(degs, b))
        if len(facts) < 2:
            continue
        comp = list(range(len(facts)))

        def find(i):
            while comp[i] != i:
                i = comp[i]
            return i

        for i in range(len(facts)):
            for j in range(i + 1, len(facts)):
                if any(x and y for x, y in zip(facts[i], facts[j])):
                    comp[find(i)] = find(j)
        total += len({find(i) for i in range(len(facts))}) - 1
    return total


degree_vectors = st.lists(st.integers(2, 9), min_size=2, max_size=3, unique=True)


@settings(max_examples=40, deadline=None)
@given(degree_vectors)
def test_toric_relations_generate_and_are_minimal(degs):
    rels = toric_relations(degs)
    bound = 2 * max(degs) * min(degs)
    for b in range(bound + 1):
        assert _connected_by_moves(all_factorizations(degs, b), rels), b
    assert len(rels) == _betti_count(degs, bound)


def _check_basis(A, gens):
    ok, witness = is_algebra_basis(A.gens)
    assert ok, witness
    mon = A.degree_monoid
    for k, g in enumerate(A.gens):
        assert g.is_monic()
        assert all(e not in mon for e in g.tail().terms)
        others = DegreeMonoid([h.degree for j, h in enumerate(A.gens) if j != k]) if len(A.gens) > 1 else None
        assert others is None or g.degree not in others
    for g in gens:
        r = algebra_remainder(g - Poly.const(g.coeff(0)), A.gens).remainder
        assert r.is_zero()


@pytest.mark.parametrize("seed", range(40))
def test_random_bases_are_certified(seed):
    rng = random.Random(seed)
    gens = [random_poly(rng, rng.randint(1, 10), constant=True) for _ in range(rng.randint(1, 3))]
    A = compute_algebra_basis(gens)
    _check_basis(A, gens)


@pytest.mark.parametrize("seed", range(20))
def test_degree_monoid_matches_staircase(seed):
    rng = random.Random(100 + seed)
    gens = [random_poly(rng, rng.randint(1, 9), constant=True) for _ in range(rng.randint(1, 3))]
    A = compute_algebra_basis(gens)
    mon = A.degree_monoid
    bound = mon.content * mon.reduced.conductor + 2 * min(A.degrees)
    truth = {d for d in range(bound + 1) if d in mon}
    assert algebra_staircase(gens, bound, default_cap(bound, gens)) == truth


@pytest.mark.parametrize("seed", range(15))
def test_basis_does_not_depend_on_input_order(seed):
    rng = random.Random(200 + seed)
    gens = [random_poly(rng, rng.randint(1, 9), constant=True) for _ in range(3)]
    renders = {compute_algebra_basis([gens[i] for i in order]).render() for order in permutations(range(3))}
    assert len(renders) == 1


@pytest.mark.parametrize("seed", range(15))
def test_idempotent(seed):
    rng = random.Random(300 + seed)
    gens = [random_poly(rng, rng.randint(1, 9), constant=True) for _ in range(2)]
    A = compute_algebra_basis(gens)
    assert compute_algebra_basis(A.gens).gens == A.gens
    assert reduce_basis(A.gens).gens == A.gens


def test_scaling_generators_does_not_matter():
    a = compute_algebra_basis(parse_poly_list("t^6+t,t^4"))
    b = compute_algebra_basis([parse_poly("t^6+t").scale(Q(-3, 2)), parse_poly("t^4").scale(5)])
    assert a.gens == b.gens
