"""Polynomial families p_m, q_m (shift-operator annihilators) and the
Fibonacci / Lucas polynomials, with their closed forms.

All four families obey a two-term recurrence

    P_n = (x - b) P_{n-1} - a^2 P_{n-2}      (p, q)
    P_n = x P_{n-1} + s P_{n-2}              (fib, lucas)

and differ only in their two initial members.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .exact import LaurentPoly, XPoly, _as_fraction, binomial

FAMILIES = ("p", "q", "fib", "lucas")


class PolyFamilyCache:
    """Memoized members of one family at fixed parameters.

    ``params`` is ``(a, b)`` for the p and q families and ``(s,)`` for
    fib and lucas.
    """

    def __init__(self, family: str, params: tuple):
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
        self.family = family
        self.params = tuple(_as_fraction(p) for p in params)
        x = XPoly.x()
        if family in ("p", "q"):
            a, b = self.params
            shift = x - b
            self._step = (shift, -(a * a))
            first = [XPoly([1]), x + (a - b)] if family == "p" else [XPoly([2]), shift]
        else:
            (s,) = self.params
            self._step = (x, s)
            first = [XPoly(), XPoly([1])] if family == "fib" else [XPoly([2]), x]
        self._polys: list[XPoly] = first
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> XPoly:
        if n < 0:
            raise ValueError(f"index must be >= 0, got {n}")
        if n >= len(self._polys):
            mul, add = self._step
            with self._lock:
                while len(self._polys) <= n:
                    self._polys.append(mul * self._polys[-1] + add * self._polys[-2])
        return self._polys[n]

    def __len__(self):
        return len(self._polys)


_caches: dict[tuple, PolyFamilyCache] = {}
_caches_lock = threading.Lock()


def family_cache(family: str, *params) -> PolyFamilyCache:
    key = (family,) + tuple(_as_fraction(p) for p in params)
    cache = _caches.get(key)
    if cache is None:
        with _caches_lock:
            cache = _caches.setdefault(key, PolyFamilyCache(family, key[1:]))
    return cache


def p_poly(m: int, a, b) -> XPoly:
    """Monic degree-m annihilator with p_0 = 1 and p_1 = x + a - b."""
    return family_cache("p", a, b)[m]


def q_poly(m: int, a, b) -> XPoly:
    """Same recurrence as :func:`p_poly` but q_0 = 2 and q_1 = x - b."""
    return family_cache("q", a, b)[m]


def fib_poly(n: int, s) -> XPoly:
    return family_cache("fib", s)[n]


def lucas_poly(n: int, s) -> XPoly:
    return family_cache("lucas", s)[n]


def fib_poly_closed(n: int) -> XPoly:
    """F_n(x, s) = sum_k C(n-1-k, k) s^k x^(n-2k-1), coefficients in Q[s].

    Coefficients of the returned XPoly are LaurentPoly objects in s (all
    exponents non-negative).
    """
    if n < 1:
        raise ValueError(f"closed form needs n >= 1, got {n}")
    coeffs: list = [LaurentPoly()] * n
    k = 0
    while n - 2 * k - 1 >= 0:
        coeffs[n - 2 * k - 1] = LaurentPoly.monomial(k, binomial(n - 1 - k, k))
        k += 1
    return XPoly(coeffs)


def lucas_poly_closed(n: int) -> XPoly:
    """L_n(x, s) = sum_k C(n-k, k) * n/(n-k) * s^k x^(n-2k), coefficients in Q[s]."""
    if n < 1:
        raise ValueError(f"closed form needs n >= 1, got {n}")
    coeffs: list = [LaurentPoly()] * (n + 1)
    k = 0
    while n - 2 * k >= 0:
        c = binomial(n - k, k) * Fraction(n, n - k)
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral Lucas coefficient {c} at n={n}, k={k}")
        coeffs[n - 2 * k] = LaurentPoly.monomial(k, c)
        k += 1
    return XPoly(coeffs)


def specialize(poly: XPoly, value) -> XPoly:
    """Evaluate every LaurentPoly coefficient of ``poly`` at ``value``."""
    value = _as_fraction(value)
    return poly.map_coeffs(lambda c: c.evaluate(value) if isinstance(c, LaurentPoly) else c)


def family_poly(family: str, n: int, a=0, b=0, s=-1) -> XPoly:
    """Dispatch used by the CLI: p, q, fib, lucas, fib-closed, lucas-closed."""
    if family == "p":
        return p_poly(n, a, b)
    if family == "q":
        return q_poly(n, a, b)
    if family == "fib":
        return fib_poly(n, s)
    if family == "lucas":
        return lucas_poly(n, s)
    if family == "fib-closed":
        return fib_poly_closed(n)
    if family == "lucas-closed":
        return lucas_poly_closed(n)
    raise ValueError(f"unknown family {family!r}")
