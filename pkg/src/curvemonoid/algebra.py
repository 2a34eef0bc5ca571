"""Bases of subalgebras K[f_1, ..., f_s] of K[t]."""

from __future__ import annotations

from dataclasses import dataclass, field
from .poly import Q
from typing import Dict, List, Optional, Sequence, Tuple

from .numsgp import DegreeMonoid, Factorizer
from .poly import Poly

Relation = Tuple[Tuple[int, ...], Tuple[int, ...]]


class NotABasisError(ValueError):
    pass


@dataclass
class DivisionResult:
    quotient_part: Poly
    remainder: Poly
    trace: List[Tuple[Q, Tuple[int, ...]]] = field(default_factory=list)


@dataclass
class AlgebraBasis:
    gens: List[Poly]
    degree_monoid: DegreeMonoid
    reduced: bool = False
    minimal: bool = False

    @property
    def degrees(self) -> List[int]:
        return [g.degree for g in self.gens]

    @property
    def numerical(self) -> bool:
        return self.degree_monoid.is_numerical

    def semigroup(self):
        return self.degree_monoid.semigroup()

    def render(self) -> str:
        from .poly import render_list

        return render_list(self.gens)


class _Products:
    """Memoized products ``Π f_i^{a_i}``."""

    def __init__(self, gens: Sequence[Poly]):
        self.gens = list(gens)
        self._powers: List[List[Poly]] = [[Poly.const(1)] for _ in self.gens]

    def power(self, i: int, k: int) -> Poly:
        pw = self._powers[i]
        while len(pw) <= k:
            pw.append(pw[-1] * self.gens[i])
        return pw[k]

    def product(self, exps: Sequence[int]) -> Poly:
        out = Poly.const(1)
        for i, k in enumerate(exps):
            if k:
                out = out * self.power(i, k)
        return out


def _clean_gens(gens: Sequence[Poly]) -> List[Poly]:
    out = []
    for g in gens:
        if g.degree >= 1:
            out.append(g.monic())
    return out


def _check_monic(gens: Sequence[Poly]) -> None:
    if not gens:
        raise ValueError("need at least one generator")
    for g in gens:
        if g.degree < 1 or not g.is_monic():
            raise ValueError(f"generator {g} must be monic of positive degree")


def algebra_remainder(f: Poly, gens: Sequence[Poly], _fac=None, _prod=None) -> DivisionResult:
    """Write ``f = g + r`` with ``g`` in the algebra and ``supp(r)`` outside the degree monoid.

    When the leading degree has several factorizations the lexicographically
    smallest exponent vector (over the given generator order) is used.
    Constants always go to ``g``.
    """
    _check_monic(gens)
    fac = _fac or Factorizer([g.degree for g in gens])
    prod = _prod or _Products(gens)
    g: Dict[int, Q] = {}
    r: Dict[int, Q] = {}
    trace = []
    rest = dict(f.items())
    d = f.degree
    while d >= 0:
        c = rest.pop(d, 0)
        if not c:
            d -= 1
            continue
        exps = fac.lex_min(d)
        if exps is None:
            r[d] = c
            d -= 1
            continue
        trace.append((c, exps))
        for e, v in prod.product(exps).items():
            g[e] = g.get(e, 0) + c * v
            if e != d:
                rest[e] = rest.get(e, 0) - c * v
        d -= 1
    return DivisionResult(Poly(g), Poly(r), trace)


def _betti_bound(degrees: Sequence[int]) -> int:
    mon = DegreeMonoid(degrees)
    c = mon.content
    return (mon.reduced.frobenius + 2 * max(degrees) // c) * c


def _components(vertices: List[int], linked) -> List[List[int]]:
    seen = set()
    out = []
    for v in vertices:
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in vertices:
                if b not in seen and linked(a, b):
                    seen.add(b)
                    stack.append(b)
        out.append(sorted(comp))
    return sorted(out)


def toric_relations(gens) -> List[Relation]:
    """Binomial generators ``X^α - X^β`` of the kernel of ``X_i ↦ t^{d_i}``.

    Accepts monic polynomials or a plain degree vector.  Computed as a
    minimal presentation: at each degree ``b`` the generators ``i`` with
    ``b - d_i`` in the monoid form a graph, joined when ``b - d_i - d_j`` is
    in the monoid; each extra connected component costs one relation.
    """
    degrees = [g if isinstance(g, int) else g.degree for g in gens]
    if any(d <= 0 for d in degrees):
        raise ValueError("degrees must be positive")
    if len(degrees) < 2:
        return []
    fac = Factorizer(degrees)
    mon = DegreeMonoid(degrees)
    bound = _betti_bound(degrees)
    k = len(degrees)
    out: List[Relation] = []
    for b in range(1, bound + 1):
        if b not in mon:
            continue
        verts = [i for i in range(k) if (b - degrees[i]) in mon]
        if len(verts) < 2:
            continue
        comps = _components(verts, lambda i, j: (b - degrees[i] - degrees[j]) in mon)
        if len(comps) < 2:
            continue
        reps = []
        for comp in comps:
            i = comp[0]
            z = list(fac.lex_min(b - degrees[i]))
            z[i] += 1
            reps.append(tuple(z))
        for z in reps[1:]:
            out.append((reps[0], z))
    for alpha, beta in out:
        assert sum(a * d for a, d in zip(alpha, degrees)) == sum(b * d for b, d in zip(beta, degrees))
    return out


def algebra_s_polynomials(gens: Sequence[Poly], relations: Sequence[Relation], _prod=None) -> List[Poly]:
    prod = _prod or _Products(gens)
    return [prod.product(alpha) - prod.product(beta) for alpha, beta in relations]


def is_algebra_basis(gens: Sequence[Poly]) -> Tuple[bool, Optional[Poly]]:
    """Basis test; on failure the second item is a nonzero remainder."""
    _check_monic(gens)
    fac = Factorizer([g.degree for g in gens])
    prod = _Products(gens)
    for s in algebra_s_polynomials(gens, toric_relations(gens), prod):
        r = algebra_remainder(s, gens, fac, prod).remainder
        if not r.is_zero():
            return False, r
    return True, None


def _autoreduce(gens: List[Poly]) -> List[Poly]:
    """Replace each generator by its remainder modulo the others until stable.

    ``f - r`` lies in the algebra of the others, so the algebra is unchanged;
    zero and constant remainders are dropped.
    """
    basis = sorted(gens, key=lambda p: p.degree)
    changed = True
    while changed:
        changed = False
        for k, f in enumerate(basis):
            others = basis[:k] + basis[k + 1:]
            if not others:
                break
            r = algebra_remainder(f, others).remainder
            if r != f:
                basis = others + ([r.monic()] if r.degree >= 1 else [])
                basis.sort(key=lambda p: p.degree)
                changed = True
                break
    return basis


def _complete(gens: List[Poly]) -> List[Poly]:
    """Add the remainder of the lowest-degree S-polynomial that does not vanish, then restart."""
    basis = _autoreduce(gens)
    while True:
        degs = [g.degree for g in basis]
        fac = Factorizer(degs)
        prod = _Products(basis)
        rels = sorted(toric_relations(basis), key=lambda ab: sum(a * d for a, d in zip(ab[0], degs)))
        added = None
        for s in algebra_s_polynomials(basis, rels, prod):
            r = algebra_remainder(s, basis, fac, prod).remainder
            if r:
                added = r.monic()
                break
        if added is None:
            return basis
        basis = _autoreduce(basis + [added])


def reduce_basis(basis: Sequence[Poly], check: bool = True) -> AlgebraBasis:
    """Unique minimal reduced basis of the algebra spanned by ``basis``."""
    gens = _clean_gens(basis)
    if check:
        ok, _ = is_algebra_basis(gens)
        if not ok:
            raise NotABasisError("input is not a basis of the algebra it generates")
    kept: List[Poly] = []
    for g in sorted(gens, key=lambda p: p.degree):
        if not kept or g.degree not in DegreeMonoid([k.degree for k in kept]):
            kept.append(g)
    fac = Factorizer([g.degree for g in kept])
    prod = _Products(kept)
    out = []
    for g in kept:
        tail = algebra_remainder(g.tail(), kept, fac, prod).remainder
        out.append(g.leading_monomial() + tail)
    return AlgebraBasis(out, DegreeMonoid([g.degree for g in out]), reduced=True, minimal=True)


def compute_algebra_basis(gens: Sequence[Poly]) -> AlgebraBasis:
    """Complete ``gens`` to a basis and return the minimal reduced one.

    ``degree_monoid.content > 1`` flags an algebra of infinite colength.
    """
    clean = _clean_gens(gens)
    if not clean:
        raise ValueError("need at least one nonconstant generator")
    return reduce_basis(_complete(clean), check=False)

