"""Exact univariate polynomials and truncated Laurent series over Q.

Both types are immutable and keep a sparse ``{exponent: rational}`` map with
no stored zero coefficients.
"""

from __future__ import annotations

import math
import numbers
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from gmpy2 import mpq

# coefficients are gmpy2 rationals; ints and fractions.Fraction are accepted
Q = mpq
Number = Union[int, numbers.Rational]

MAX_EXPONENT = 1_000_000


class PolySyntaxError(ValueError):
    """Raised by :func:`parse_poly`; ``pos`` is the 0-based offset."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


def _clean(terms: Mapping[int, Number]) -> Dict[int, Q]:
    return {e: Q(c) for e, c in terms.items() if c != 0}


def _fmt_coeff(c: Q) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class Poly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, Number]] = None):
        terms = _clean(terms or {})
        for e in terms:
            if e < 0:
                raise ValueError("negative exponent in Poly")
        self._terms = terms
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: Number = 1) -> "Poly":
        return cls({exponent: coeff})

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls({0: c})

    @property
    def terms(self) -> Dict[int, Q]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def degree(self) -> int:
        """Degree of a nonzero polynomial; -1 for zero."""
        return max(self._terms) if self._terms else -1

    @property
    def lc(self) -> Q:
        if not self._terms:
            return Q(0)
        return self._terms[self.degree]

    def coeff(self, e: int) -> Q:
        return self._terms.get(e, Q(0))

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self._terms))

    def leading_monomial(self) -> "Poly":
        return Poly({self.degree: self.lc}) if self._terms else Poly()

    def tail(self) -> "Poly":
        d = self.degree
        return Poly({e: c for e, c in self._terms.items() if e != d})

    def monic(self) -> "Poly":
        if not self._terms:
            return self
        return self.scale(1 / self.lc)

    def is_monic(self) -> bool:
        return self.lc == 1

    def scale(self, c: Number) -> "Poly":
        c = Q(c)
        if c == 0:
            return Poly()
        return Poly({e: v * c for e, v in self._terms.items()})

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) - c
        return Poly(out)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, numbers.Rational):
            return self.scale(other)
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        out: Dict[int, Q] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self) -> "Poly":
        return Poly({e - 1: c * e for e, c in self._terms.items() if e})

    def __call__(self, x):
        """Evaluate at a number or compose with another polynomial."""
        if isinstance(x, Poly):
            result = Poly()
            d = self.degree
            for e in range(d, -1, -1):
                result = result * x + self.coeff(e)
            return result
        return sum((c * Q(x) ** e for e, c in self._terms.items()), Q(0))

    def shift(self, c: Number) -> "Poly":
        """Return p(t + c)."""
        return self(Poly({1: 1, 0: c}))

    def __eq__(self, other) -> bool:
        if isinstance(other, numbers.Rational):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def render(self, var: str = "t") -> str:
        """Canonical text: descending exponents, ``c*t^e``, reduced fractions."""
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = _fmt_coeff(a)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if a == 1 else f"{_fmt_coeff(a)}*{power}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Poly({self.render()!r})"


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, numbers.Rational):
        return Poly.const(x)
    return NotImplemented


T = Poly({1: 1})


# ---------------------------------------------------------------- parsing


class _Parser:
    def __init__(self, text: str, var: str):
        self.text = text
        self.var = var
        self.pos = 0

    def error(self, msg: str):
        raise PolySyntaxError(msg, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def power(self) -> int:
        if self.peek() != self.var:
            self.error(f"expected {self.var!r}")
        self.pos += 1
        if self.peek() == "^":
            self.pos += 1
            start = self.pos
            e = self.nat()
            if e > MAX_EXPONENT:
                self.pos = start
                self.error(f"exponent exceeds {MAX_EXPONENT}")
            return e
        return 1

    def term(self) -> Tuple[int, Q]:
        ch = self.peek()
        if ch.isdigit():
            c = Q(self.nat())
            if self.peek() == "/":
                self.pos += 1
                den_pos = self.pos
                den = self.nat()
                if den == 0:
                    self.pos = den_pos
                    self.error("zero denominator")
                c /= den
            if self.peek() == "*":
                self.pos += 1
                return self.power(), c
            return 0, c
        if ch == self.var:
            return self.power(), Q(1)
        self.error("expected a coefficient or a power")

    def expr(self) -> Poly:
        terms: Dict[int, Q] = {}
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            e, c = self.term()
            terms[e] = terms.get(e, 0) + sign * c
            ch = self.peek()
            if ch == "":
                break
            if ch not in "+-":
                self.error("unexpected character")
            sign = -1 if ch == "-" else 1
            self.pos += 1
        return Poly(terms)


def parse_poly(text: str, var: str = "t") -> Poly:
    """Parse ``expr := term (('+'|'-') term)*`` in the variable ``var``.

    >>> parse_poly("t^7+1/2*t^2").terms
    {7: mpq(1,1), 2: mpq(1,2)}
    """
    p = _Parser(text, var)
    if p.peek() == "":
        p.error("empty expression")
    return p.expr()


def parse_poly_list(text: str, var: str = "t") -> list:
    """Comma separated polynomials; optional surrounding brackets."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    out = []
    offset = 0
    for chunk in s.split(","):
        try:
            out.append(parse_poly(chunk, var))
        except PolySyntaxError as exc:
            raise PolySyntaxError("syntax error", text, offset + exc.pos) from None
        offset += len(chunk) + 1
    return out


def render_list(items: Iterable) -> str:
    """GAP-style list rendering: ``[ a, b ]`` and ``[  ]`` when empty."""
    items = [x.render() if isinstance(x, (Poly, LaurentSeries)) else str(x) for x in items]
    if not items:
        return "[  ]"
    return "[ " + ", ".join(items) + " ]"


# ------------------------------------------------------------ Laurent series

EXACT = -math.inf


class LaurentSeries:
    """Laurent series in one variable, known for exponents ``>= floor``.

    ``floor == EXACT`` marks a finite, exactly known series.  Products keep
    the conservative floor ``max(lead_a + floor_b, lead_b + floor_a)``.
    """

    __slots__ = ("_terms", "floor")

    def __init__(self, terms: Optional[Mapping[int, Number]] = None, floor=EXACT):
        terms = _clean(terms or {})
        if floor != EXACT:
            terms = {e: c for e, c in terms.items() if e >= floor}
        self._terms = terms
        self.floor = floor

    @classmethod
    def from_poly(cls, p: Poly, floor=EXACT) -> "LaurentSeries":
        return cls(p.terms, floor)

    @classmethod
    def monomial(cls, e: int, c: Number = 1) -> "LaurentSeries":
        return cls({e: c})

    @property
    def terms(self) -> Dict[int, Q]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_exact(self) -> bool:
        return self.floor == EXACT

    def is_zero(self) -> bool:
        """No known terms (the series may still be nonzero below the floor)."""
        return not self._terms

    @property
    def lead(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    @property
    def lc(self) -> Q:
        return self._terms[self.lead] if self._terms else Q(0)

    def coeff(self, e: int) -> Q:
        if self.floor != EXACT and e < self.floor:
            raise ValueError(f"coefficient of exponent {e} is below the floor {self.floor}")
        return self._terms.get(e, Q(0))

    def truncate(self, floor) -> "LaurentSeries":
        return LaurentSeries(self._terms, max(floor, self.floor))

    def __neg__(self):
        return LaurentSeries({e: -c for e, c in self._terms.items()}, self.floor)

    def scale(self, c: Number) -> "LaurentSeries":
        c = Q(c)
        return LaurentSeries({e: v * c for e, v in self._terms.items()}, self.floor)

    def __add__(self, other):
        other = _as_series(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentSeries(out, max(self.floor, other.floor))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_series(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _top(self):
        # largest exponent that may carry a nonzero coefficient
        return self.lead if self._terms else self.floor - 1

    def mul(self, other, floor=EXACT) -> "LaurentSeries":
        other = _as_series(other)
        if (not self._terms and self.is_exact()) or (not other._terms and other.is_exact()):
            return LaurentSeries({}, floor)
        f = max(self._top() + other.floor, other._top() + self.floor, floor)
        out: Dict[int, Q] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                if e >= f:
                    out[e] = out.get(e, 0) + c1 * c2
        return LaurentSeries(out, f)

    def __mul__(self, other):
        if isinstance(other, numbers.Rational):
            return self.scale(other)
        other = _as_series(other)
        if other is NotImplemented:
            return other
        return self.mul(other)

    __rmul__ = __mul__

    def power(self, k: int, floor=EXACT) -> "LaurentSeries":
        if k < 0:
            return self.inverse(floor).power(-k, floor)
        result = LaurentSeries({0: 1})
        for _ in range(k):
            result = result.mul(self, floor)
        return result

    def inverse(self, floor) -> "LaurentSeries":
        """1/self, computed down to ``floor`` (must be finite)."""
        if not self._terms:
            raise ZeroDivisionError("inverse of a series with no known terms")
        lead, lc = self.lead, self.lc
        # self = lc*T^lead*(1+u), u has negative exponents
        u = LaurentSeries(
            {e - lead: c / lc for e, c in self._terms.items() if e != lead},
            self.floor - lead,
        )
        target = floor + lead  # floor for (1+u)^-1
        neg_u = -u
        acc = LaurentSeries({0: 1})
        term = LaurentSeries({0: 1})
        while True:
            term = term.mul(neg_u, target)
            acc = acc + term
            if not term._terms:
                break
        out = LaurentSeries({e - lead: c / lc for e, c in acc._terms.items()}, acc.floor - lead)
        return out.truncate(floor)

    def derivative(self) -> "LaurentSeries":
        f = self.floor - 1 if self.floor != EXACT else EXACT
        return LaurentSeries({e - 1: c * e for e, c in self._terms.items() if e}, f)

    def shift_exponents(self, k: int) -> "LaurentSeries":
        f = self.floor + k if self.floor != EXACT else EXACT
        return LaurentSeries({e + k: c for e, c in self._terms.items()}, f)

    def below(self, e: int) -> "LaurentSeries":
        """Known terms with exponent strictly below ``e``."""
        return LaurentSeries({k: c for k, c in self._terms.items() if k < e}, self.floor)

    def __eq__(self, other) -> bool:
        other = _as_series(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms and self.floor == other.floor

    def equal_to_precision(self, other, floor) -> bool:
        a = self.truncate(floor)
        b = _as_series(other).truncate(floor)
        return a._terms == b._terms

    def render(self, var: str = "T", show_floor: bool = True) -> str:
        body = Poly.render(_RenderShim(self._terms), var)
        if show_floor and self.floor != EXACT:
            # everything at or above the floor is known, the error starts one below
            err = f"O({var}^{self.floor - 1})"
            return f"{body}+{err}" if self._terms else err
        return body

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentSeries({self.render()!r})"


class _RenderShim:
    """Lets :meth:`Poly.render` format negative exponents."""

    def __init__(self, terms):
        self._terms = terms


def _as_series(x):
    if isinstance(x, LaurentSeries):
        return x
    if isinstance(x, Poly):
        return LaurentSeries.from_poly(x)
    if isinstance(x, numbers.Rational):
        return LaurentSeries({0: x})
    return NotImplemented


def compose(outer: Union[Poly, LaurentSeries], inner: LaurentSeries, floor: int) -> LaurentSeries:
    """``outer(inner)`` down to ``floor`` for ``inner = c*T + lower terms``.

    The unknown part of ``outer`` below its own floor stays below it after
    substitution, so the result floor is at least ``outer.floor``.
    """
    if isinstance(outer, Poly):
        outer = LaurentSeries.from_poly(outer)
    if inner.lead != 1:
        raise ValueError("inner series must have leading exponent 1")
    exps = sorted(outer._terms)
    if not exps:
        return LaurentSeries({}, max(floor, outer.floor))
    # inner^k is multiplied by inner up to top - k more times, each pass
    # lifting the unknown part by one, so powers are kept that much deeper.
    work = floor - max(exps[-1], 0)
    result = LaurentSeries({}, max(floor, outer.floor))
    pos_cache = {0: LaurentSeries({0: 1})}
    neg_cache = {}
    for e in exps:
        c = outer._terms[e]
        if e >= 0:
            k = max(pos_cache)
            while k < e:
                pos_cache[k + 1] = pos_cache[k].mul(inner, work)
                k += 1
            piece = pos_cache[e]
        else:
            if not neg_cache:
                neg_cache[-1] = inner.inverse(floor)
            k = min(neg_cache)
            while k > e:
                neg_cache[k - 1] = neg_cache[k].mul(neg_cache[-1], floor)
                k -= 1
            piece = neg_cache[e]
        result = result + piece.scale(c)
    return result.truncate(floor)


def series_invert_parameter(q: LaurentSeries, precision: int) -> LaurentSeries:
    """Return ``q1 = T + b1/T + b2/T^2 + ...`` with ``q(q1(T)) = T`` to ``precision``.

    ``q`` must be ``t + (terms of exponent <= -1)``.  Coefficients are fixed
    one exponent at a time, highest first; each correction only disturbs
    strictly lower exponents of the composition.
    """
    if q.lead != 1 or q.lc != 1 or 0 in q._terms:
        raise ValueError("parameter series must be t + (terms of exponent <= -1)")
    if precision > 0:
        raise ValueError("precision must be <= 0")
    if q.floor != EXACT and q.floor > precision:
        raise ValueError(f"q is only known down to {q.floor}, need {precision}")
    ident = LaurentSeries({1: 1})
    corrections: Dict[int, Q] = {1: Q(1)}
    # The inverse is needed one notch deeper than the target so that the
    # composition error is resolved down to `precision`.
    while True:
        q1 = LaurentSeries(corrections, precision)
        err = compose(q, q1, precision) - ident
        err = err.truncate(precision)
        if not err._terms:
            return q1
        k = err.lead
        if k >= 1:
            raise ArithmeticError("inversion failed to converge")
        corrections[k] = corrections.get(k, 0) - err.lc
