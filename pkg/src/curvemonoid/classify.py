"""Free structure of the value semigroup and the ne ∈ {1, 2} classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import List, Optional, Tuple

from .kahler import DifferentialReport
from .numsgp import DegreeMonoid, FreeStructure, NumericalSemigroup, free_structure


class NotFreeError(ValueError):
    pass


@dataclass
class DeltaSequence:
    free: FreeStructure
    puiseux: List[int]
    decreasing_ok: bool = True  # r_k d_k > r_{k+1} d_{k+1}

    @property
    def h(self) -> int:
        return self.free.h

    @property
    def r(self) -> Tuple[int, ...]:
        return self.free.arrangement


@dataclass
class Classification:
    ne: int
    family: str
    ne_set_pattern: Optional[str] = None
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _extend(gamma: NumericalSemigroup, prefix: List[int], candidates: List[int]) -> Optional[List[int]]:
    d = 0
    for x in prefix:
        d = gcd(d, x)
    if d == 1:
        return prefix if NumericalSemigroup(prefix) == gamma else None
    mon = DegreeMonoid(prefix)
    for c in candidates:
        nd = gcd(d, c)
        if nd == d:
            continue
        e = d // nd
        if (e * c) not in mon:
            continue
        out = _extend(gamma, prefix + [c], candidates)
        if out is not None:
            return out
    return None


def delta_sequence(gamma: NumericalSemigroup, m: int, n: int) -> DeltaSequence:
    """Arrangement ``(m, n, r_2, ..., r_h)`` making ``gamma`` free.

    Remaining minimal generators are tried in increasing order first; other
    elements below the conductor are tried only if that fails.
    """
    if not (0 < m < n) or m not in gamma or n not in gamma:
        raise NotFreeError(f"need 0 < m < n with m, n in the semigroup, got m={m}, n={n}")
    if gcd(m, n) == m:
        raise NotFreeError(f"m={m} divides n={n}")
    mins = [g for g in gamma.minimal_generators if g not in (m, n)]
    others = [x for x in range(1, gamma.conductor + max(m, n)) if x in gamma and x not in mins and x not in (m, n)]
    found = _extend(gamma, [m, n], mins)
    if found is None:
        found = _extend(gamma, [m, n], mins + others)
    if found is None:
        raise NotFreeError(f"{gamma!r} is not free for any arrangement starting ({m}, {n})")
    fs = free_structure(gamma, found)
    if fs is None:
        raise NotFreeError(f"arrangement {found} is not free")
    r, d = fs.arrangement, fs.divisors
    decreasing = all(r[k] * d[k] > r[k + 1] * d[k + 1] for k in range(1, fs.h)) if fs.h > 1 else True
    ds = DeltaSequence(fs, [], decreasing)
    ds.puiseux = puiseux_exponents(ds)
    return ds


def puiseux_exponents(ds: DeltaSequence) -> List[int]:
    r, d, e = ds.free.arrangement, ds.free.divisors, ds.free.quotients
    ms = [-r[1]]
    for k in range(1, ds.h):
        ms.append(ms[-1] + r[k] * e[k - 1] - r[k + 1])
    g = r[0]
    for k, mk in enumerate(ms, start=1):
        g = gcd(g, mk)
        if g != d[k]:
            raise AssertionError(f"gcd chain {g} != d_{k + 1} = {d[k]}")
    return ms


def _family_ne1(m: int, n: int) -> Optional[str]:
    if m == 2 and n % 2 == 1:
        return f"(m,n)=(2,2p+1), p={(n - 1) // 2}"
    if (m, n) in ((3, 4), (3, 5)):
        return f"(m,n)=({m},{n})"
    return None


def _family_ne2_h1(m: int, n: int) -> Optional[str]:
    fam = _family_ne1(m, n)
    if fam:
        return fam
    if (m, n) == (4, 5):
        return "(m,n)=(4,5)"
    if m == 3 and gcd(3, n) == 1:
        return f"(m,n)=(3,n), n={n}"
    return None


def _family_ne2_h2(m: int, n: int, r2: int) -> Optional[str]:
    if r2 % 2 == 0:
        return None
    p, q = None, (r2 - 1) // 2
    if m == 4 and n % 4 == 2 and n >= 6:
        p = (n - 2) // 4
        if 8 * p + 4 > r2:
            return f"(m,n,r2)=(4,4p+2,2q+1), p={p}, q={q}"
    if (m, n) == (6, 8) and q <= 11:
        return f"(m,n,r2)=(6,8,2p+1), p={q}"
    if (m, n) == (6, 10) and q <= 14:
        return f"(m,n,r2)=(6,10,2p+1), p={q}"
    if (m, n) == (4, 6) and q <= 5:
        return f"(m,n,r2)=(4,6,2p+1), p={q}"
    return None


def classify_curve(report: DifferentialReport, ds: Optional[DeltaSequence] = None) -> Classification:
    """Check the ne ∈ {1, 2} constraints; mismatches are listed, never raised."""
    ds = ds or report.delta
    ne = report.ne
    if ne == 0:
        return Classification(0, "quasi-homogeneous (ne=0)")
    if ne >= 3:
        return Classification(ne, "unconstrained (ne >= 3)")
    out = Classification(ne, "none")
    if ds is None:
        out.violations.append("no free arrangement starting (m, n)")
        return out
    F = report.gamma.frobenius
    r = ds.r
    m, n, h = r[0], r[1], ds.h
    ne_set = set(report.ne_set)
    if ne == 1:
        if h != 1:
            out.violations.append(f"ne=1 but h={h}")
        if ne_set == {F - 1}:
            out.ne_set_pattern = "{F-1}"
        else:
            out.violations.append(f"NE={sorted(ne_set)} is not {{F-1}}={{{F - 1}}}")
        fam = _family_ne1(m, n)
    else:
        shapes = {"{F-1,F-m-1}": {F - 1, F - m - 1}, "{F-1,F-n-1}": {F - 1, F - n - 1}}
        if h == 2:
            shapes["{F-1,F-r2-1}"] = {F - 1, F - r[2] - 1}
        out.ne_set_pattern = next((k for k, v in shapes.items() if v == ne_set), None)
        if h > 2:
            out.violations.append(f"ne=2 but h={h}")
        if out.ne_set_pattern is None:
            out.violations.append(f"NE={sorted(ne_set)} matches none of {sorted(shapes)}")
        if h == 1:
            fam = _family_ne2_h1(m, n)
        elif h == 2:
            fam = _family_ne2_h2(m, n, r[2])
        else:
            fam = None
    if fam is None:
        out.violations.append(f"arrangement {r} is in no listed family for ne={ne}")
    else:
        out.family = fam
    return out
