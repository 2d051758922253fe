"""Mechanical verification of the operator identities and annihilating
recurrences over finite parameter grids.

Every suite returns a :class:`VerificationReport`. Nothing is asserted here:
a failing grid point is recorded with its parameters, the expected value and
the computed value, and the suite carries on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .exact import LaurentPoly, XPoly, Z, _as_fraction, to_json_value
from .kernel import KernelParams, kernel_table
from .polyfam import fib_poly, lucas_poly, p_poly, q_poly
from .sums import a_signed, a_value, schur_classify

DEFAULT_PARAMS = ((-1, 0), (1, 0), (1, 1), (2, -3))
MAX_RECORDED_FAILURES = 100

SequenceAccessor = Callable[[int], object]


def apply_shift_poly(p: XPoly, f: SequenceAccessor, n: int):
    """(p(E) f)(n) = sum_i p_i f(n + i)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    total = Fraction(0)
    for i, c in enumerate(p.coeffs):
        if c != 0:
            total = total + c * f(n + i)
    return total


@dataclass
class VerificationReport:
    suite: str
    grid: dict
    cases: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def check(self, params: dict, expected, actual) -> bool:
        self.cases += 1
        if expected == actual:
            return True
        self.failure_count += 1
        if len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append((params, expected, actual))
        return False

    def merge(self, other: "VerificationReport") -> None:
        self.cases += other.cases
        self.failure_count += other.failure_count
        room = MAX_RECORDED_FAILURES - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])

    def to_dict(self) -> dict:
        failures = sorted(self.failures, key=lambda f: sorted(f[0].items()))
        return {
            "suite": self.suite,
            "grid": self.grid,
            "cases": self.cases,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures_truncated": self.failure_count > len(self.failures),
            "failures": [
                {"params": p, "expected": to_json_value(e), "actual": to_json_value(a)}
                for p, e, a in failures
            ],
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}: {self.cases} cases, {self.failure_count} failures"


def _params_list(params) -> list[KernelParams]:
    return [p if isinstance(p, KernelParams) else KernelParams(*p) for p in params]


def _grid_params(params) -> list[list[str]]:
    return [[str(p.a), str(p.b)] for p in params]


def operator_on_kernel(poly: XPoly, params, k: int):
    """poly(E) applied to s(., k, a, b) at n = 0."""
    table = kernel_table(params)
    return apply_shift_poly(poly, lambda i: table.value(i, k), 0)


def verify_lemma1(m_max: int = 12, params=DEFAULT_PARAMS, k_margin: int = 5) -> VerificationReport:
    """p_m(E, a, b) s(0, k, a, b) == a^m [|k| <= m]."""
    params = _params_list(params)
    report = VerificationReport(
        "lemma1", {"m_max": m_max, "params": _grid_params(params), "k_margin": k_margin}
    )
    for kp in params:
        for m in range(m_max + 1):
            poly = p_poly(m, kp.a, kp.b)
            for k in range(-(m + k_margin), m + k_margin + 1):
                expected = kp.a**m if abs(k) <= m else Fraction(0)
                actual = operator_on_kernel(poly, kp, k)
                report.check({"a": str(kp.a), "b": str(kp.b), "m": m, "k": k}, expected, actual)
    return report


def verify_corollary4(m: int, a, b, k_range: Iterable[int]) -> VerificationReport:
    """sum_j p_m(E, a, b) s(0, k - (2m+1) j, a, b) == a^m for each k.

    The j-window is deliberately wider than the single contributing copy.
    """
    kp = KernelParams(a, b)
    k_range = list(k_range)
    period = 2 * m + 1
    poly = p_poly(m, kp.a, kp.b)
    report = VerificationReport(
        "corollary4",
        {"m": m, "a": str(kp.a), "b": str(kp.b), "k_min": min(k_range, default=0),
         "k_max": max(k_range, default=0)},
    )
    reach = m + period
    for k in k_range:
        j_lo = -((reach - k) // period)
        j_hi = (k + reach) // period
        total = sum(
            (operator_on_kernel(poly, kp, k - period * j) for j in range(j_lo, j_hi + 1)),
            Fraction(0),
        )
        report.check({"a": str(kp.a), "b": str(kp.b), "m": m, "k": k}, kp.a**m, total)
    return report


def verify_corollary4_grid(m_max: int = 8, params=DEFAULT_PARAMS, k_max: int = 30) -> VerificationReport:
    params = _params_list(params)
    report = VerificationReport(
        "corollary4", {"m_max": m_max, "params": _grid_params(params), "k_max": k_max}
    )
    for kp in params:
        for m in range(m_max + 1):
            report.merge(verify_corollary4(m, kp.a, kp.b, range(-k_max, k_max + 1)))
    return report


def lemma2_left(m: int, params, k: int):
    """q_m(E, a, b) s(0, k, a, b)."""
    kp = params if isinstance(params, KernelParams) else KernelParams(*params)
    return operator_on_kernel(q_poly(m, kp.a, kp.b), kp, k)


def verify_lemma2(m_max: int = 12, params=DEFAULT_PARAMS, k_margin: int = 5) -> VerificationReport:
    """q_m(E, a, b) s(0, k, a, b) == a^m [|k| = m] for 1 <= m <= m_max.

    m = 0 is excluded: there the left side is 2 [k = 0], not [k = 0].
    """
    if m_max < 1:
        raise ValueError("lemma 2 is checked from m = 1; m_max must be >= 1")
    params = _params_list(params)
    report = VerificationReport(
        "lemma2", {"m_max": m_max, "params": _grid_params(params), "k_margin": k_margin}
    )
    for kp in params:
        for m in range(1, m_max + 1):
            for k in range(-(m + k_margin), m + k_margin + 1):
                expected = kp.a**m if abs(k) == m else Fraction(0)
                report.check(
                    {"a": str(kp.a), "b": str(kp.b), "m": m, "k": k},
                    expected,
                    lemma2_left(m, kp, k),
                )
    return report


def _annihilation(name, operator_for, sequence_for, m_range, n_max, k_range) -> VerificationReport:
    k_range = list(k_range)
    m_range = list(m_range)
    report = VerificationReport(
        name,
        {"m_min": min(m_range, default=0), "m_max": max(m_range, default=0), "n_max": n_max,
         "k_min": min(k_range, default=0), "k_max": max(k_range, default=0)},
    )
    for m in m_range:
        op = operator_for(m)
        for k in k_range:
            seq = sequence_for(m, k)
            for n in range(n_max - m + 1):
                actual = apply_shift_poly(op, seq, n)
                report.check({"m": m, "k": k, "n": n}, 0, actual)
    return report


def theorem1_operator(m: int) -> XPoly:
    return fib_poly(m + 1, -1) - fib_poly(m, -1)


def theorem3_operator(m: int) -> XPoly:
    lifted = lucas_poly(m, -1).map_coeffs(LaurentPoly.constant)
    return lifted - (Z + LaurentPoly.monomial(-1))


def verify_theorem1(m_max: int = 8, n_max: int = 40, k_range=range(-20, 21)) -> VerificationReport:
    """(F_{m+1}(E,-1) - F_m(E,-1)) a(n, 2m+1, k) == 0 for n <= n_max - m."""
    return _annihilation(
        "thm1", theorem1_operator,
        lambda m, k: (lambda n: a_signed(n, 2 * m + 1, k)),
        range(1, m_max + 1), n_max, k_range,
    )


def verify_theorem2(m_max: int = 8, n_max: int = 40, k_range=range(-20, 21)) -> VerificationReport:
    """L_m(E, -1) a(n, 2m, k) == 0 for n <= n_max - m."""
    return _annihilation(
        "thm2", lambda m: lucas_poly(m, -1),
        lambda m, k: (lambda n: a_signed(n, 2 * m, k)),
        range(1, m_max + 1), n_max, k_range,
    )


def verify_theorem3(m_max: int = 6, n_max: int = 30, k_range=range(-12, 13)) -> VerificationReport:
    """(L_m(E, -1) - (z + 1/z)) a(n, m, k, z) == 0 in Q[z, 1/z]."""
    return _annihilation(
        "thm3", theorem3_operator,
        lambda m, k: (lambda n: a_value(n, m, k)),
        range(1, m_max + 1), n_max, k_range,
    )


def verify_shift_law(m_max: int = 6, n_max: int = 30, k_range=range(-12, 13)) -> VerificationReport:
    """a(n, m, k + m, z) == z * a(n, m, k, z)."""
    k_range = list(k_range)
    report = VerificationReport(
        "shift_law", {"m_max": m_max, "n_max": n_max, "k_min": min(k_range), "k_max": max(k_range)}
    )
    for m in range(1, m_max + 1):
        for k in k_range:
            for n in range(n_max + 1):
                report.check({"m": m, "k": k, "n": n}, a_value(n, m, k).shift(1), a_value(n, m, k + m))
    return report


def verify_schur(n_max: int = 60, k_range=range(-10, 10)) -> VerificationReport:
    """a(n, 5, k) against its mod-10 class, plus a(n, 5, k+5) == -a(n, 5, k)."""
    k_range = list(k_range)
    report = VerificationReport(
        "schur", {"n_max": n_max, "k_min": min(k_range), "k_max": max(k_range)}
    )
    for k in k_range:
        cls = schur_classify(k)
        for n in range(n_max + 1):
            value = a_signed(n, 5, k)
            report.check({"k": k, "n": n, "check": "class"}, cls.evaluate(n), value)
            report.check({"k": k, "n": n, "check": "sign"}, -value, a_signed(n, 5, k + 5))
    return report


def theorem2_decomposition(n: int, m: int, k: int) -> Fraction:
    """a(n, 2m, k) rebuilt from the four s(., ., 1, 0) sums.

    sum_j [s(n, k-4mj) - s(n, k-2m-4mj)] + sum_j [s(n, k-1-4mj) - s(n, k-1-2m-4mj)]
    """
    table = kernel_table(KernelParams(1, 0))
    step = 4 * m
    j_lo = -((n + abs(k) + 2 * m + 1) // step) - 1
    j_hi = (n + abs(k) + 2 * m + 1) // step + 1
    total = Fraction(0)
    for j in range(j_lo, j_hi + 1):
        for shift in (0, 1):
            total += table.value(n, k - shift - step * j)
            total -= table.value(n, k - shift - 2 * m - step * j)
    return total


def verify_theorem2_decomposition(n_max: int = 20, m_max: int = 4, k_range=range(-12, 13)) -> VerificationReport:
    k_range = list(k_range)
    report = VerificationReport(
        "thm2_decomposition",
        {"n_max": n_max, "m_max": m_max, "k_min": min(k_range, default=0), "k_max": max(k_range, default=0)},
    )
    for m in range(1, m_max + 1):
        for k in k_range:
            for n in range(n_max + 1):
                report.check({"m": m, "k": k, "n": n}, a_signed(n, 2 * m, k), theorem2_decomposition(n, m, k))
    return report


def lattice_path_count(n: int, m: int) -> int:
    """Paths with floor(n/2) steps (1,1) and floor((n+1)/2) steps (1,-1),
    in any order, whose heights all satisfy -m-1 < y < m.

    DP over (ups used, downs used); the height is ups - downs.
    """
    if n < 0 or m < 1:
        raise ValueError(f"need n >= 0 and m >= 1, got n={n}, m={m}")
    ups, downs = n // 2, (n + 1) // 2
    counts = {(0, 0): 1}
    for _ in range(n):
        nxt: dict[tuple[int, int], int] = {}
        for (u, d), c in counts.items():
            for du, dd in ((1, 0), (0, 1)):
                nu, nd = u + du, d + dd
                if nu > ups or nd > downs:
                    continue
                if not (-m - 1 < nu - nd < m):
                    continue
                nxt[nu, nd] = nxt.get((nu, nd), 0) + c
        counts = nxt
    return counts.get((ups, downs), 0)


def verify_paths(n_max: int = 24, m_max: int = 4) -> VerificationReport:
    report = VerificationReport("paths", {"n_max": n_max, "m_max": m_max})
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            report.check({"m": m, "n": n}, a_signed(n, 2 * m + 1, 0), lattice_path_count(n, m))
    return report


def _k_range(k_max):
    return range(-k_max, k_max + 1)


SUITES = ("lemma1", "corollary4", "lemma2", "thm1", "thm2", "thm3", "paths")


def run_suite(name: str, m_max=None, n_max=None, k_max=None, k_margin=None) -> VerificationReport:
    """Run one suite by CLI name; ``None`` overrides fall back to defaults."""
    def pick(value, default):
        return default if value is None else value

    if name == "lemma1":
        return verify_lemma1(pick(m_max, 12), DEFAULT_PARAMS, pick(k_margin, 5))
    if name == "corollary4":
        return verify_corollary4_grid(pick(m_max, 8), DEFAULT_PARAMS, pick(k_max, 30))
    if name == "lemma2":
        return verify_lemma2(pick(m_max, 12), DEFAULT_PARAMS, pick(k_margin, 5))
    if name == "thm1":
        return verify_theorem1(pick(m_max, 8), pick(n_max, 40), _k_range(pick(k_max, 20)))
    if name == "thm2":
        return verify_theorem2(pick(m_max, 8), pick(n_max, 40), _k_range(pick(k_max, 20)))
    if name == "thm3":
        return verify_theorem3(pick(m_max, 6), pick(n_max, 30), _k_range(pick(k_max, 12)))
    if name == "paths":
        return verify_paths(n_max=pick(n_max, 24), m_max=pick(m_max, 4))
    raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")


def sequence_from_values(values) -> SequenceAccessor:
    """Accessor over a precomputed list (zero past the end)."""
    values = [v if isinstance(v, LaurentPoly) else _as_fraction(v) for v in values]
    return lambda n: values[n] if n < len(values) else Fraction(0)

