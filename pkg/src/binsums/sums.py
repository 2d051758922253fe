"""The binomial sums a(n, m, k, z) = sum_j z^j C(n, floor((n - m j + k) / 2)).

The sum over j is finite because C(n, r) vanishes outside 0 <= r <= n.
With symbolic z the value is a LaurentPoly; with a rational z it is a
Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .exact import LaurentPoly, _as_fraction, binomial

SYMBOLIC = "symbolic"


def j_support(n: int, m: int, k: int) -> list[int]:
    """All j with 0 <= floor((n - m j + k) / 2) <= n, ascending.

    Bounds come from 0 <= n - m j + k <= 2n + 1; the exact range test is
    then applied to each candidate.
    """
    if m < 1:
        raise ValueError(f"modulus m must be >= 1, got {m}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    hi = (n + k) // m
    lo = -((n + 1 - k) // m)  # ceil((k - n - 1) / m)
    return [j for j in range(lo, hi + 1) if 0 <= (n - m * j + k) // 2 <= n]


@lru_cache(maxsize=None)
def _symbolic(n: int, m: int, k: int) -> LaurentPoly:
    return LaurentPoly({j: binomial(n, (n - m * j + k) // 2) for j in j_support(n, m, k)})


def a_value(n: int, m: int, k: int, z=SYMBOLIC) -> Union[LaurentPoly, Fraction]:
    """a(n, m, k, z); ``z`` is ``"symbolic"`` or a nonzero rational."""
    if isinstance(z, str) and z == SYMBOLIC:
        return _symbolic(n, m, k)
    z = _as_fraction(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    return sum(
        (z**j * binomial(n, (n - m * j + k) // 2) for j in j_support(n, m, k)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def a_signed(n: int, m: int, k: int) -> int:
    """a(n, m, k, -1) in integer arithmetic."""
    total = 0
    for j in j_support(n, m, k):
        term = binomial(n, (n - m * j + k) // 2)
        total += -term if j % 2 else term
    return total


@dataclass(frozen=True)
class SumSpec:
    n: int
    m: int
    k: int
    z: Union[str, Fraction] = SYMBOLIC

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if not (isinstance(self.z, str) and self.z == SYMBOLIC):
            z = _as_fraction(self.z)
            if z == 0:
                raise ValueError("z must be nonzero")
            object.__setattr__(self, "z", z)

    @property
    def symbolic(self) -> bool:
        return isinstance(self.z, str)

    def value(self):
        return a_value(self.n, self.m, self.k, self.z)


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class SchurClass:
    """Closed form of a(n, 5, k) for one residue class of k mod 10.

    ``tag`` is one of ``"F_{n+1}"``, ``"F_n"``, ``"zero"`` or
    ``"negated-shift"``; in the last case the value is minus the value of
    class ``base`` (residue shifted by 5).
    """

    residue: int
    tag: str
    base: int | None = None

    def sign_and_base_tag(self) -> tuple[int, str]:
        if self.tag == "negated-shift":
            base = schur_classify(self.base)
            return -1, base.tag
        return 1, self.tag

    def evaluate(self, n: int) -> int:
        sign, tag = self.sign_and_base_tag()
        if tag == "F_{n+1}":
            return sign * fibonacci(n + 1)
        if tag == "F_n":
            return sign * fibonacci(n)
        return 0


_SCHUR_TAGS = {0: "F_{n+1}", 1: "F_{n+1}", 2: "F_n", 9: "F_n", 3: "zero", 8: "zero"}


def schur_classify(k: int) -> SchurClass:
    r = k % 10
    if r in _SCHUR_TAGS:
        return SchurClass(r, _SCHUR_TAGS[r])
    return SchurClass(r, "negated-shift", (r + 5) % 10)

