"""Kernel tables s(n, k, a, b) and the derived functions t(n, k), v(n, k).

The table is defined by s(0, k) = [k = 0] and

    s(n, k) = a*s(n-1, k-1) + b*s(n-1, k) + a*s(n-1, k+1).

Row n is supported on [-n, n] and is stored as a dense list with offset -n.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import _as_fraction, binomial


@dataclass(frozen=True)
class KernelParams:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))


def _as_params(params) -> KernelParams:
    if isinstance(params, KernelParams):
        return params
    a, b = params
    return KernelParams(a, b)


class KernelTable:
    """Rows of s(n, k, a, b), grown on demand and cached.

    Parameters
    ----------
    params : KernelParams or (a, b)
    n_max : int, optional
        Rows to build eagerly.
    """

    def __init__(self, params, n_max: int = 0):
        self.params = _as_params(params)
        self._rows: list[list[Fraction]] = [[Fraction(1)]]
        self._lock = threading.Lock()
        self.extend(n_max)

    @property
    def n_built(self) -> int:
        return len(self._rows) - 1

    def extend(self, n: int) -> None:
        if n <= self.n_built:
            return
        a, b = self.params.a, self.params.b
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                width = len(prev)
                # prev index i holds k = i - (n-1); new index i holds k = i - n
                row = []
                for i in range(width + 2):
                    left = prev[i - 2] if 0 <= i - 2 < width else 0
                    mid = prev[i - 1] if 0 <= i - 1 < width else 0
                    right = prev[i] if i < width else 0
                    row.append(a * left + b * mid + a * right)
                self._rows.append(row)

    def dense_row(self, n: int) -> list[Fraction]:
        """Row n as a list indexed by k + n, k = -n..n."""
        if n < 0:
            raise ValueError(f"row index must be >= 0, got {n}")
        self.extend(n)
        return list(self._rows[n])

    def row(self, n: int) -> dict[int, Fraction]:
        """Nonzero entries of row n as ``{k: s(n, k)}``."""
        return {i - n: v for i, v in enumerate(self.dense_row(n)) if v}

    def value(self, n: int, k: int) -> Fraction:
        if n < 0:
            raise ValueError(f"row index must be >= 0, got {n}")
        if abs(k) > n:
            return Fraction(0)
        self.extend(n)
        return self._rows[n][k + n]

    def __getitem__(self, nk):
        n, k = nk
        return self.value(n, k)


@lru_cache(maxsize=None)
def kernel_table(params) -> KernelTable:
    """Shared cached table for ``params``."""
    return KernelTable(_as_params(params))


def kernel_row(params, n: int) -> dict[int, Fraction]:
    return kernel_table(_as_params(params)).row(n)


def kernel_value(params, n: int, k: int) -> Fraction:
    return kernel_table(_as_params(params)).value(n, k)


def t_value(n: int, k: int) -> int:
    """(-1)^k * C(n, floor((n + k) / 2))."""
    sign = -1 if k % 2 else 1
    return sign * binomial(n, (n + k) // 2)


def v_value(n: int, k: int) -> int:
    """C(n, floor((n + k) / 2)); v(0, k) = [k in {0, 1}]."""
    return binomial(n, (n + k) // 2)
