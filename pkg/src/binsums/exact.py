"""Exact arithmetic: binomials, rationals, Laurent polynomials in z and dense
polynomials in a shift symbol x.

Rationals are :class:`fractions.Fraction`; everything else here is built on
top of them. No floating point is used anywhere.
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def binomial(n: int, r: int) -> int:
    """C(n, r), with C(n, r) = 0 whenever r < 0 or r > n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer literal. Decimals are rejected."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


Scalar = Union[int, Fraction]


class LaurentPoly:
    """Element of Q[z, 1/z], stored sparsely as ``{exponent: coefficient}``.

    Instances are immutable and hashable. Zero coefficients are never stored,
    so the zero polynomial has empty ``terms``. Integers and Fractions mix in
    freely as constants.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if coeff:
                    clean[int(exp)] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, c: Scalar = 1) -> "LaurentPoly":
        return cls({exp: c})

    @classmethod
    def _coerce(cls, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.constant(other)
        return None

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coeff(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def items(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._terms.items())

    def degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def valuation(self) -> int | None:
        return min(self._terms) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by z**d."""
        return LaurentPoly({e + d: c for e, c in self._terms.items()})

    def evaluate(self, z0: Scalar) -> Fraction:
        z0 = _as_fraction(z0)
        if z0 == 0:
            if self._terms and min(self._terms) < 0:
                raise ZeroDivisionError("negative power of z at z = 0")
            return self.coeff(0)
        return sum((c * z0**e for e, c in self._terms.items()), Fraction(0))

    def format(self, var: str = "z") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            parts.append(_signed_term(c, mono))
        return _join_terms(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly({self.format()!s})"

    def to_json(self) -> list:
        return [[e, format_rational(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentPoly":
        terms: dict[int, Fraction] = {}
        for exp, coeff in data:
            if not isinstance(exp, int):
                raise ValueError(f"exponent must be an integer, got {exp!r}")
            terms[exp] = terms.get(exp, 0) + parse_rational(str(coeff))
        return cls(terms)


Z = LaurentPoly.monomial(1)


def laurent_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def laurent_eval(p: LaurentPoly, z0: Scalar) -> Fraction:
    """Exact value of ``p`` at a nonzero rational ``z0``."""
    z0 = _as_fraction(z0)
    if z0 == 0:
        raise ValueError("cannot evaluate a Laurent polynomial at z = 0")
    return p.evaluate(z0)


def _signed_term(c: Fraction, mono: str) -> str:
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    if not mono:
        return f"{sign} {format_rational(mag)}"
    if mag == 1:
        return f"{sign} {mono}"
    return f"{sign} {format_rational(mag)}*{mono}"


def _join_terms(parts: list[str]) -> str:
    text = " ".join(parts)
    if text.startswith("+ "):
        return text[2:]
    return "-" + text[2:]


Coeff = Union[Fraction, LaurentPoly]


class XPoly:
    """Dense polynomial ``c0 + c1 x + ... + cd x^d``.

    Coefficients live in Q (Fraction) or in Q[z, 1/z] (LaurentPoly); mixing
    the two is allowed since LaurentPoly absorbs rational constants. Trailing
    zeros are stripped, so ``coeffs == ()`` is the zero polynomial.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, LaurentPoly) else _as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def x(cls) -> "XPoly":
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> "XPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = XPoly([other])
        if not isinstance(other, XPoly):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return XPoly([-c for c in self.coeffs])

    def __add__(self, other):
        other = _as_xpoly(other)
        if other is None:
            return NotImplemented
        n = max(len(self), len(other))
        return XPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_xpoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_xpoly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scalar_mul(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return XPoly()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return XPoly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scalar_mul(other)
        return NotImplemented

    def scalar_mul(self, c) -> "XPoly":
        return XPoly([c * a for a in self.coeffs])

    def map_coeffs(self, fn: Callable) -> "XPoly":
        return XPoly([fn(c) for c in self.coeffs])

    def __call__(self, x0):
        """Horner evaluation at ``x0``."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def format(self, var: str = "x", coeff_var: str = "z") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if isinstance(c, LaurentPoly):
                items = c.items()
                if len(items) == 1:
                    e, lc = items[0]
                    inner = "" if e == 0 else (coeff_var if e == 1 else f"{coeff_var}^{e}")
                    mono = "*".join(p for p in (inner, mono) if p)
                    parts.append(_signed_term(lc, mono))
                else:
                    body = f"({c.format(coeff_var)})"
                    parts.append("+ " + "*".join(p for p in (body, mono) if p))
            else:
                parts.append(_signed_term(c, mono))
        return _join_terms(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"XPoly({self.format()})"

    def to_json(self) -> list:
        return [
            c.to_json() if isinstance(c, LaurentPoly) else format_rational(c)
            for c in self.coeffs
        ]

    @classmethod
    def from_json(cls, data: Iterable) -> "XPoly":
        out = []
        for c in data:
            out.append(LaurentPoly.from_json(c) if isinstance(c, list) else parse_rational(str(c)))
        return cls(out)


def _as_xpoly(other) -> XPoly | None:
    if isinstance(other, XPoly):
        return other
    if isinstance(other, (int, Fraction, LaurentPoly)):
        return XPoly([other])
    return None


def xpoly_add(p: XPoly, q: XPoly) -> XPoly:
    return p + q


def xpoly_sub(p: XPoly, q: XPoly) -> XPoly:
    return p - q


def xpoly_mul(p: XPoly, q: XPoly) -> XPoly:
    return p * q


def xpoly_scalar_mul(c, p: XPoly) -> XPoly:
    return p.scalar_mul(c)


def to_json_value(value):
    """Serialization shared by the CLI and reports."""
    if isinstance(value, LaurentPoly):
        return value.to_json()
    if isinstance(value, XPoly):
        return value.to_json()
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    raise TypeError(f"no exact serialization for {type(value).__name__}")


def dumps(value) -> str:
    return json.dumps(to_json_value(value))
