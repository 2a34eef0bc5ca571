"""Numerical semigroups and finitely generated submonoids of N."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple


class NotNumericalError(ValueError):
    """The generators have gcd > 1, so the monoid has infinitely many gaps."""


def apery_set(gens: Sequence[int], modulus: int) -> List[Optional[int]]:
    """Smallest element of <gens> in each residue class mod ``modulus``.

    Dijkstra over the residues; unreachable classes are ``None``.
    """
    dist: List[Optional[int]] = [None] * modulus
    dist[0] = 0
    heap = [(0, 0)]
    steps = sorted({g % modulus: g for g in sorted(set(gens), reverse=True)}.items())
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for step_res, g in steps:
            if step_res == 0:
                continue
            nr = (r + step_res) % modulus
            nd = d + g
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


def _minimal_generators(gens: Sequence[int]) -> List[int]:
    gens = sorted(set(g for g in gens if g > 0))
    if not gens:
        return []
    m = gens[0]
    kept = [m]
    for g in gens[1:]:
        ap = apery_set(kept, m)
        w = ap[g % m]
        if w is None or g < w:
            kept.append(g)
    return kept


class NumericalSemigroup:
    """A submonoid of N with finite complement.

    Membership is O(1) through the Apéry set with respect to the multiplicity.
    """

    def __init__(self, generators: Sequence[int]):
        gens = [int(g) for g in generators]
        if not gens or any(g <= 0 for g in gens):
            raise ValueError("generators must be a nonempty list of positive integers")
        if reduce(gcd, gens) != 1:
            raise NotNumericalError(f"gcd of {sorted(set(gens))} is not 1")
        self.minimal_generators: Tuple[int, ...] = tuple(_minimal_generators(gens))
        self.multiplicity = self.minimal_generators[0]
        self.apery: Tuple[int, ...] = tuple(apery_set(self.minimal_generators, self.multiplicity))
        self.frobenius = max(self.apery) - self.multiplicity
        self.conductor = self.frobenius + 1

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self.apery[n % self.multiplicity]

    def contains(self, n: int) -> bool:
        return n in self

    @property
    def gaps(self) -> Tuple[int, ...]:
        return tuple(x for x in range(self.frobenius + 1) if x not in self)

    @property
    def genus(self) -> int:
        m = self.multiplicity
        return sum((w - i) // m for i, w in enumerate(self.apery))

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def is_symmetric(self) -> bool:
        f = self.frobenius
        return all((a in self) != ((f - a) in self) for a in range(f + 1))

    def small_elements(self) -> List[int]:
        """Elements up to the conductor (the usual ``{0,3,4,6,→}`` listing)."""
        return [x for x in range(self.conductor + 1) if x in self]

    def elements_up_to(self, bound: int) -> List[int]:
        return [x for x in range(bound + 1) if x in self]

    def __eq__(self, other) -> bool:
        return isinstance(other, NumericalSemigroup) and self.minimal_generators == other.minimal_generators

    def __hash__(self) -> int:
        return hash(self.minimal_generators)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self.minimal_generators)})"

    def describe(self) -> str:
        shown = [x for x in range(self.conductor + 2) if x in self]
        return "{" + ",".join(str(x) for x in shown) + ",→}"


class DegreeMonoid:
    """Submonoid of N generated by positive integers, possibly with gcd > 1.

    ``n`` belongs to it iff ``content | n`` and ``n/content`` lies in the
    reduced numerical semigroup.
    """

    def __init__(self, generators: Sequence[int]):
        gens = [int(g) for g in generators]
        if not gens or any(g <= 0 for g in gens):
            raise ValueError("generators must be a nonempty list of positive integers")
        self.generators: Tuple[int, ...] = tuple(gens)
        self.content = reduce(gcd, gens)
        self.reduced = NumericalSemigroup([g // self.content for g in gens])

    @property
    def minimal_generators(self) -> Tuple[int, ...]:
        return tuple(g * self.content for g in self.reduced.minimal_generators)

    @property
    def is_numerical(self) -> bool:
        return self.content == 1

    def __contains__(self, n: int) -> bool:
        if n < 0 or n % self.content:
            return False
        return (n // self.content) in self.reduced

    def semigroup(self) -> NumericalSemigroup:
        if not self.is_numerical:
            raise NotNumericalError(f"degree monoid has content {self.content}")
        return self.reduced

    def __repr__(self) -> str:
        return f"DegreeMonoid({list(self.minimal_generators)}, content={self.content})"


def monoid_from_generators(gens: Sequence[int]) -> DegreeMonoid:
    return DegreeMonoid(gens)


def membership(monoid, n: int) -> bool:
    return n in monoid


def semigroup_invariants(s: NumericalSemigroup) -> Dict[str, object]:
    return {
        "minimal_generators": list(s.minimal_generators),
        "gaps": list(s.gaps),
        "genus": s.genus,
        "frobenius": s.frobenius,
        "conductor": s.conductor,
        "multiplicity": s.multiplicity,
        "is_symmetric": s.is_symmetric(),
    }


# ------------------------------------------------------------ factorizations


class Factorizer:
    """Factorizations of integers over a fixed, ordered generator list.

    Reachability tables for every suffix of the list are grown on demand so
    that depth-first searches can prune dead branches.
    """

    def __init__(self, gens: Sequence[int]):
        self.gens: Tuple[int, ...] = tuple(int(g) for g in gens)
        if any(g <= 0 for g in self.gens):
            raise ValueError("generators must be positive")
        self._reach: List[bytearray] = [bytearray(b"\x01") for _ in range(len(self.gens) + 1)]

    def _grow(self, bound: int) -> None:
        size = len(self._reach[0])
        if bound < size:
            return
        new_size = max(bound + 1, 2 * size)
        k = len(self.gens)
        self._reach[k].extend(b"\x00" * (new_size - len(self._reach[k])))
        for i in range(k - 1, -1, -1):
            g = self.gens[i]
            below = self._reach[i + 1]
            row = self._reach[i]
            old = len(row)
            row.extend(b"\x00" * (new_size - old))
            for n in range(old, new_size):
                row[n] = 1 if below[n] or (n >= g and row[n - g]) else 0

    def reachable(self, n: int, start: int = 0) -> bool:
        """Is ``n`` a nonnegative combination of ``gens[start:]``?"""
        if n < 0:
            return False
        self._grow(n)
        return bool(self._reach[start][n])

    def __contains__(self, n: int) -> bool:
        return self.reachable(n)

    def lex_min(self, n: int) -> Optional[Tuple[int, ...]]:
        """Lexicographically smallest factorization of ``n``, or None."""
        if not self.reachable(n):
            return None
        out = []
        rest = n
        for i, g in enumerate(self.gens):
            k = 0
            while not self.reachable(rest - k * g, i + 1):
                k += 1
            out.append(k)
            rest -= k * g
        return tuple(out)

    def iter_factorizations(self, n: int) -> Iterator[Tuple[int, ...]]:
        """All factorizations of ``n`` in lexicographic order."""
        if not self.reachable(n):
            return
        k = len(self.gens)
        vec = [0] * k

        def rec(i: int, rest: int):
            if i == k:
                if rest == 0:
                    yield tuple(vec)
                return
            g = self.gens[i]
            c = 0
            while c * g <= rest:
                if self.reachable(rest - c * g, i + 1):
                    vec[i] = c
                    yield from rec(i + 1, rest - c * g)
                c += 1
            vec[i] = 0

        yield from rec(0, n)


def factorizations(gens, n: int) -> set:
    """Set of exponent vectors of ``n`` over ``gens``.

    ``gens`` may be a generator list or a semigroup (its minimal generators
    are used, in increasing order).
    """
    if isinstance(gens, (NumericalSemigroup, DegreeMonoid)):
        gens = gens.minimal_generators
    if n < 0:
        return set()
    return set(Factorizer(gens).iter_factorizations(n))


# ------------------------------------------------------------- free monoids


@dataclass(frozen=True)
class FreeStructure:
    arrangement: Tuple[int, ...]
    divisors: Tuple[int, ...]  # d_1, ..., d_{h+1}
    quotients: Tuple[int, ...]  # e_1, ..., e_h

    @property
    def h(self) -> int:
        return len(self.arrangement) - 1

    @property
    def frobenius(self) -> int:
        r = self.arrangement
        return sum((e - 1) * ri for e, ri in zip(self.quotients, r[1:])) - r[0]

    def apery(self) -> List[int]:
        """Apéry set with respect to the first generator."""
        out = [0]
        for e, ri in zip(self.quotients, self.arrangement[1:]):
            out = [a + k * ri for a in out for k in range(e)]
        return sorted(out)


def free_structure(s: Optional[NumericalSemigroup], arrangement: Sequence[int]) -> Optional[FreeStructure]:
    """Check freeness of ``<arrangement>`` for the given order.

    Returns None for a not-free verdict.  When ``s`` is given, the
    arrangement must generate it and the closed Frobenius formula is
    cross-checked against ``s``.
    """
    r = tuple(int(x) for x in arrangement)
    if not r or any(x <= 0 for x in r):
        raise ValueError("arrangement must be positive integers")
    divisors = [r[0]]
    for x in r[1:]:
        divisors.append(gcd(divisors[-1], x))
    if divisors[-1] != 1:
        return None
    if any(a <= b for a, b in zip(divisors, divisors[1:])):
        return None
    quotients = tuple(a // b for a, b in zip(divisors, divisors[1:]))
    for i in range(1, len(r)):
        prefix = DegreeMonoid(r[:i])
        if quotients[i - 1] * r[i] not in prefix:
            return None
    fs = FreeStructure(r, tuple(divisors), quotients)
    if s is not None:
        if NumericalSemigroup(r) != s:
            raise ValueError(f"arrangement {r} does not generate {s}")
        if fs.frobenius != s.frobenius:
            raise AssertionError("closed Frobenius formula disagrees with the Apéry computation")
    return fs


def standard_representation(fs: FreeStructure, s: int) -> Tuple[int, ...]:
    """Unique ``(λ_0, ..., λ_h)`` with ``s = Σ λ_i r_i`` and ``0 <= λ_i < e_i`` for i >= 1."""
    r, d, e = fs.arrangement, fs.divisors, fs.quotients
    lam = [0] * len(r)
    rest = s
    for i in range(fs.h, 0, -1):
        # rest is a multiple of d_{i+1}; choose λ_i so that rest - λ_i r_i is a multiple of d_i
        unit = r[i] // d[i]
        target = (rest // d[i]) % e[i - 1]
        lam[i] = (target * pow(unit, -1, e[i - 1])) % e[i - 1] if e[i - 1] > 1 else 0
        rest -= lam[i] * r[i]
    lam[0] = rest // r[0]
    assert lam[0] * r[0] == rest
    return tuple(lam)
