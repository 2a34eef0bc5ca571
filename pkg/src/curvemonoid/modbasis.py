"""Bases of modules F_1 A + ... + F_r A over a subalgebra A of K[t]."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .algebra import AlgebraBasis, _Products
from .ideals import RelativeIdeal, pair_relators
from .numsgp import Factorizer, NotNumericalError
from .poly import Poly, render_list


@dataclass
class ModuleReduction:
    coefficients: List[Poly]
    remainder: Poly  # monic, or zero
    raw_remainder: Poly  # F = Σ coefficients[i]·modgens[i] + raw_remainder


@dataclass
class ModuleBasis:
    algebra: AlgebraBasis
    gens: List[Poly]
    degree_ideal: RelativeIdeal
    trace: List[str] = field(default_factory=list)

    def render(self) -> str:
        return render_list(self.gens)


class _Context:
    """Semigroup, factorizer and product cache shared by one computation."""

    def __init__(self, algebra: AlgebraBasis):
        if not algebra.numerical:
            raise NotNumericalError("module bases need a numerical semigroup of degrees")
        self.algebra = algebra
        self.S = algebra.semigroup()
        self.fac = Factorizer(algebra.degrees)
        self.prod = _Products(algebra.gens)
        self._elements = {}
        self._multiples = {}

    def element(self, s: int) -> Poly:
        """Monic element of A of degree ``s`` from the lex-minimal factorization."""
        if s not in self._elements:
            exps = self.fac.lex_min(s)
            if exps is None:
                raise AssertionError(f"{s} has no factorization over {self.algebra.degrees}")
            self._elements[s] = self.prod.product(exps)
        return self._elements[s]

    def multiple(self, s: int, F: Poly) -> Poly:
        key = (s, F)
        if key not in self._multiples:
            self._multiples[key] = self.element(s) * F
        return self._multiples[key]


def _divide(F: Poly, modgens: Sequence[Poly], ctx: _Context, full: bool, track: bool):
    """Shared division loop on a mutable coefficient map.

    Stops at the first irreducible leading term unless ``full`` is set, in
    which case irreducible terms are moved to the remainder and the loop
    goes on.  Returns ``(remainder terms, cofactors or None)``.
    """
    degs = [g.degree for g in modgens]
    lcs = [g.lc for g in modgens]
    coeffs = [Poly() for _ in modgens] if track else None
    r = dict(F.items())
    done = {}
    d = F.degree
    while d >= 0:
        c = r.pop(d, 0)
        if not c:
            d -= 1
            continue
        k = next((i for i, a in enumerate(degs) if (d - a) in ctx.S), None)
        if k is None:
            done[d] = c
            if not full:
                done.update(r)
                break
            d -= 1
            continue
        q = c / lcs[k]
        s = d - degs[k]
        if track:
            coeffs[k] = coeffs[k] + ctx.element(s).scale(q)
        for e, v in ctx.multiple(s, modgens[k]).items():
            if e == d:
                continue
            nv = r.get(e, 0) - q * v
            if nv:
                r[e] = nv
            else:
                r.pop(e, None)
        d -= 1
    return Poly(done), coeffs


def _reduce(F: Poly, modgens: Sequence[Poly], ctx: _Context, track: bool = False) -> ModuleReduction:
    r, coeffs = _divide(F, modgens, ctx, full=False, track=track)
    return ModuleReduction(coeffs, r.monic() if r else r, r)


def module_reduce(F: Poly, modgens: Sequence[Poly], algebra: AlgebraBasis) -> ModuleReduction:
    """Top-reduce ``F`` by the module generators.

    The first generator whose degree fits is used at every step, with the
    lexicographically smallest factorization of the cofactor degree.
    """
    if any(g.is_zero() for g in modgens):
        raise ValueError("module generators must be nonzero")
    return _reduce(F, modgens, _Context(algebra), track=True)


def _s_polys(a: Poly, b: Poly, ctx: _Context) -> List[Tuple[Tuple[int, int], Poly]]:
    out = []
    for alpha, beta in sorted(pair_relators(a.degree, b.degree, ctx.S)):
        out.append(((alpha, beta), ctx.multiple(alpha, a) - ctx.multiple(beta, b)))
    return out


def min_s_polynomials(modgens: Sequence[Poly], algebra: AlgebraBasis) -> List[Poly]:
    ctx = _Context(algebra)
    gens = [g.monic() for g in modgens]
    out = []
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            out.extend(p for _, p in _s_polys(gens[i], gens[j], ctx))
    return out


def is_module_basis(modgens: Sequence[Poly], algebra: AlgebraBasis) -> Tuple[bool, Optional[Poly]]:
    ctx = _Context(algebra)
    gens = [g.monic() for g in modgens]
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            for _, p in _s_polys(gens[i], gens[j], ctx):
                r = _reduce(p, gens, ctx).remainder
                if r:
                    return False, r
    return True, None


def _reduce_tail(F: Poly, modgens: Sequence[Poly], ctx: _Context) -> Poly:
    """Leading term of ``F`` plus the full remainder of its tail."""
    return F.leading_monomial() + _divide(F.tail(), modgens, ctx, full=True, track=False)[0]


def _inter_reduce(gens: List[Poly], ctx: _Context, trace: List[str]) -> List[Poly]:
    changed = True
    while changed:
        changed = False
        for k, a in enumerate(gens):
            others = gens[:k] + gens[k + 1:]
            if not others:
                break
            rd = _reduce(a, others, ctx).remainder
            if rd != a:
                gens = others if rd.is_zero() else others + [rd]
                trace.append(f"inter-reduce {a.render()} -> {rd.render()}")
                changed = True
                break
    return gens


class _Completion:
    """Pair processing with full interreduction after every new generator.

    Each relator of each pair is one queue entry, taken lowest syzygy degree
    first and first-in first-out among equal degrees.  Generators are kept
    under stable ids so that tail updates do not invalidate queued pairs.
    """

    def __init__(self, gens: List[Poly], ctx: _Context):
        self.ctx = ctx
        self.polys: dict = {}
        self.queue: list = []
        self.count = 0
        self.trace: List[str] = []
        for g in gens:
            self._insert(g)

    @property
    def gens(self) -> List[Poly]:
        return list(self.polys.values())

    def _insert(self, h: Poly) -> None:
        ctx = self.ctx
        hid = self.count
        self.count += 1
        for gid, g in self.polys.items():
            for alpha, beta in sorted(pair_relators(g.degree, h.degree, ctx.S)):
                heapq.heappush(self.queue, (g.degree + alpha, self.count, gid, hid, alpha, beta))
                self.count += 1
        self.polys[hid] = h

    def add(self, h: Poly) -> None:
        ctx = self.ctx
        h = _reduce_tail(h, self.gens, ctx)
        covered = [gid for gid, g in self.polys.items() if (g.degree - h.degree) in ctx.S]
        dropped = [self.polys.pop(gid) for gid in covered]
        self._insert(h)
        self.trace.append(f"new generator {h.render()} of degree {h.degree}")
        gens = self.gens
        for gid, g in self.polys.items():
            if g.degree > h.degree:
                self.polys[gid] = _reduce_tail(g, gens, ctx)
        for g in dropped:
            self.trace.append(f"drop {g.render()}, its degree lies in {h.degree}+S")
            r = _reduce(g, self.gens, ctx).remainder
            if r:
                self.add(r)

    def run(self) -> None:
        ctx = self.ctx
        while self.queue:
            _, _, ia, ib, alpha, beta = heapq.heappop(self.queue)
            if ia not in self.polys or ib not in self.polys:
                continue
            a, b = self.polys[ia], self.polys[ib]
            sp = ctx.multiple(alpha, a) - ctx.multiple(beta, b)
            rd = _reduce(sp, self.gens, ctx).remainder
            self.trace.append(f"S({a.render()}, {b.render()}) at {(alpha, beta)} = {sp.render()} -> {rd.render()}")
            if rd:
                self.add(rd)

    def certify(self) -> bool:
        """Re-check every pair of the final set; requeue everything on failure."""
        ids = list(self.polys)
        g = self.gens
        for i in range(len(g)):
            for j in range(i + 1, len(g)):
                for _, sp in _s_polys(g[i], g[j], self.ctx):
                    if _reduce(sp, g, self.ctx).remainder:
                        for b in range(len(ids)):
                            for a in range(b):
                                x, y = self.polys[ids[a]], self.polys[ids[b]]
                                for alpha, beta in sorted(pair_relators(x.degree, y.degree, self.ctx.S)):
                                    heapq.heappush(self.queue, (x.degree + alpha, self.count, ids[a], ids[b], alpha, beta))
                                    self.count += 1
                        return False
        return True


def compute_module_basis(modgens: Sequence[Poly], algebra: AlgebraBasis) -> ModuleBasis:
    ctx = _Context(algebra)
    if not modgens or any(g.is_zero() for g in modgens):
        raise ValueError("module generators must be a nonempty list of nonzero polynomials")
    job = _Completion([g.monic() for g in modgens], ctx)
    job.run()
    while not job.certify():
        job.run()
    gens = _inter_reduce(job.gens, ctx, job.trace)
    gens = [_reduce_tail(g, gens, ctx) for g in gens]
    gens.sort(key=lambda p: p.degree)
    ideal = RelativeIdeal(ctx.S, [g.degree for g in gens])
    return ModuleBasis(algebra, gens, ideal, job.trace)
