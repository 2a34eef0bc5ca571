"""Relative ideals of numerical semigroups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Set, Tuple

from .numsgp import NumericalSemigroup


def minimals(S: NumericalSemigroup, elements: Iterable[int]) -> List[int]:
    """Minimal elements with respect to ``x <=_S y  iff  y - x in S``."""
    pts = sorted(set(elements))
    out: List[int] = []
    for x in pts:
        if not any((x - a) in S for a in out):
            out.append(x)
    return out


class RelativeIdeal:
    """``I = (a_1 + S) ∪ ... ∪ (a_l + S)`` stored by its minimal generators."""

    def __init__(self, ambient: NumericalSemigroup, gens: Sequence[int]):
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        self.ambient = ambient
        self.min_gens: Tuple[int, ...] = tuple(minimals(ambient, gens))

    def __contains__(self, n: int) -> bool:
        return any((n - a) in self.ambient for a in self.min_gens)

    @property
    def minimum(self) -> int:
        return self.min_gens[0]

    @property
    def bound(self) -> int:
        """Every integer >= bound belongs to the ideal."""
        return self.min_gens[0] + self.ambient.conductor

    def complement(self) -> List[int]:
        """Integers in ``[min(I), bound)`` missing from the ideal."""
        return [x for x in range(self.minimum, self.bound) if x not in self]

    def elements_up_to(self, n: int) -> List[int]:
        return [x for x in range(self.minimum, n + 1) if x in self]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RelativeIdeal)
            and self.ambient == other.ambient
            and self.min_gens == other.min_gens
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.min_gens))

    def __repr__(self) -> str:
        return f"RelativeIdeal({list(self.min_gens)} + {self.ambient!r})"


@dataclass(frozen=True)
class KernelRelator:
    i: int
    j: int
    alpha: int
    beta: int


def ideal_from_generators(S: NumericalSemigroup, gens: Sequence[int]) -> RelativeIdeal:
    return RelativeIdeal(S, list(gens))


def _check_ambient(I: RelativeIdeal, J: RelativeIdeal) -> None:
    if I.ambient != J.ambient:
        raise ValueError(f"ideals live in different semigroups: {I.ambient!r} vs {J.ambient!r}")


def intersect(I: RelativeIdeal, J: RelativeIdeal) -> RelativeIdeal:
    _check_ambient(I, J)
    S = I.ambient
    lo = max(I.minimum, J.minimum)
    hi = max(I.min_gens[-1], J.min_gens[-1]) + S.conductor + S.multiplicity
    return RelativeIdeal(S, [x for x in range(lo, hi + 1) if x in I and x in J])


def pair_relators(a: int, b: int, S: NumericalSemigroup) -> Set[Tuple[int, int]]:
    """``R(a,b)``: pairs ``(x-a, x-b)`` for the minimal generators ``x`` of ``(a+S)∩(b+S)``."""
    both = intersect(RelativeIdeal(S, [a]), RelativeIdeal(S, [b]))
    return {(x - a, x - b) for x in both.min_gens}


def kernel_generators(I: RelativeIdeal) -> Set[KernelRelator]:
    out = set()
    a = I.min_gens
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            for alpha, beta in pair_relators(a[i], a[j], I.ambient):
                assert a[i] + alpha == a[j] + beta
                out.add(KernelRelator(i, j, alpha, beta))
    return out


def over_ideals(I: RelativeIdeal) -> List[RelativeIdeal]:
    """All ideals ``J`` of the ambient semigroup with ``I ⊆ J ⊆ ℕ``.

    The input comes first, the rest are sorted by minimal generators.
    """
    S = I.ambient
    if I.minimum < 0:
        raise ValueError("over-ideals are only enumerated inside ℕ")
    seen = {I.min_gens}
    frontier = [I]
    found = [I]
    while frontier:
        nxt = []
        for J in frontier:
            for x in range(0, J.bound):
                if x in J:
                    continue
                K = RelativeIdeal(S, list(J.min_gens) + [x])
                if K.min_gens not in seen:
                    seen.add(K.min_gens)
                    found.append(K)
                    nxt.append(K)
        frontier = nxt
    return [I] + sorted(found[1:], key=lambda K: K.min_gens)
