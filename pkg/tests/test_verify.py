import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binsums.exact import LaurentPoly, XPoly
from binsums.kernel import KernelParams
from binsums.polyfam import fib_poly, lucas_poly, p_poly
from binsums.sums import a_signed, a_value
from binsums.verify import (
    MAX_RECORDED_FAILURES,
    VerificationReport,
    apply_shift_poly,
    lattice_path_count,
    lemma2_left,
    operator_on_kernel,
    run_suite,
    sequence_from_values,
    theorem2_decomposition,
    theorem3_operator,
    verify_corollary4,
    verify_lemma1,
    verify_lemma2,
    verify_paths,
    verify_schur,
    verify_shift_law,
    verify_theorem1,
    verify_theorem2,
    verify_theorem2_decomposition,
    verify_theorem3,
)

from .strategies import rationals

x = XPoly.x()
T = XPoly([-1, -1, 1])


def brute_strip_paths(n, m):
    ups, downs = n // 2, (n + 1) // 2
    count = 0
    for positions in itertools.combinations(range(n), ups):
        y, ok = 0, True
        up_set = set(positions)
        for i in range(n):
            y += 1 if i in up_set else -1
            if not (-m - 1 < y < m):
                ok = False
                break
        count += ok
    return count


class TestApplyShift:
    def test_identity(self):
        f = lambda n: Fraction(n * n + 3)
        for n in range(5):
            assert apply_shift_poly(XPoly([1]), f, n) == f(n)

    def test_fibonacci_operator_kills_a5(self):
        assert apply_shift_poly(T, lambda n: a_value(n, 5, 0, -1), 0) == 0

    def test_constant_sequence(self):
        for n in range(4):
            assert apply_shift_poly(T, lambda _: 1, n) == -1

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            apply_shift_poly(T, lambda n: 0, -1)


sequences = st.lists(rationals, min_size=20, max_size=20)
small_polys = st.lists(rationals, max_size=5).map(XPoly)


@settings(max_examples=1000, deadline=None)
@given(small_polys, small_polys, rationals, sequences, st.integers(min_value=0, max_value=10))
def test_operator_linearity(p, q, c, values, n):
    f = sequence_from_values(values)
    assert apply_shift_poly(p + q, f, n) == apply_shift_poly(p, f, n) + apply_shift_poly(q, f, n)
    assert apply_shift_poly(p.scalar_mul(c), f, n) == c * apply_shift_poly(p, f, n)


@settings(max_examples=1000, deadline=None)
@given(small_polys, small_polys, sequences, st.integers(min_value=0, max_value=10))
def test_operator_composition(p, q, values, n):
    f = sequence_from_values(values)
    g = lambda i: apply_shift_poly(q, f, i)
    assert apply_shift_poly(p * q, f, n) == apply_shift_poly(p, g, n)


def test_operator_on_laurent_sequence():
    f = lambda n: a_value(n, 2, 1)
    op = theorem3_operator(2)
    assert isinstance(op[0], LaurentPoly)
    assert apply_shift_poly(op, f, 3) == 0


class TestLemma1:
    def test_spot_values(self):
        poly = p_poly(2, -1, 0)
        assert operator_on_kernel(poly, KernelParams(-1, 0), 0) == 1
        assert operator_on_kernel(poly, KernelParams(-1, 0), 3) == 0
        for k in range(-2, 3):
            assert operator_on_kernel(poly, KernelParams(-1, 0), k) == 1
        assert operator_on_kernel(p_poly(0, 5, 7), KernelParams(5, 7), 0) == 1

    def test_default_grid(self):
        report = verify_lemma1()
        assert report.passed and report.cases > 1000

    def test_rational_parameters(self):
        assert verify_lemma1(6, [(Fraction(1, 2), Fraction(-2, 3)), (0, 4)], 3).passed


class TestCorollary4:
    def test_examples(self):
        assert verify_corollary4(2, -1, 0, range(-10, 11)).passed
        assert verify_corollary4(0, 1, 0, range(-5, 6)).passed
        assert verify_corollary4(1, 2, 1, [0]).passed

    def test_wrong_period_fails(self):
        # tiling by period 2m+2 leaves gaps where the sum drops to zero
        kp = KernelParams(-1, 0)
        poly = p_poly(2, -1, 0)
        sums = {
            sum(operator_on_kernel(poly, kp, k - 6 * j) for j in range(-4, 5))
            for k in range(-10, 11)
        }
        assert sums == {0, 1}


class TestLemma2:
    def test_spot_values(self):
        assert lemma2_left(1, (-1, 0), 1) == -1
        assert lemma2_left(2, (1, 0), 0) == 0
        assert lemma2_left(2, (1, 0), 2) == 1

    def test_default_grid(self):
        assert verify_lemma2().passed

    def test_m_zero_discrepancy(self):
        for params in [(-1, 0), (1, 0), (1, 1), (2, -3)]:
            for k in range(-4, 5):
                assert lemma2_left(0, params, k) == (2 if k == 0 else 0)

    def test_requires_m_at_least_one(self):
        with pytest.raises(ValueError):
            verify_lemma2(0)


class TestTheorems:
    def test_theorem1_m2(self):
        report = verify_theorem1(2, 40, [0])
        assert report.passed

    def test_theorem1_m1_is_constant(self):
        for k in range(-5, 6):
            assert {a_signed(n, 3, k) for n in range(30)} == {a_signed(0, 3, k)}

    def test_theorem1_m3_k7(self):
        assert verify_theorem1(3, 33, [7]).passed

    def test_theorem2_m2_sequence(self):
        assert [a_signed(n, 4, 0) for n in range(8)] == [1, 1, 2, 2, 4, 4, 8, 8]
        assert lucas_poly(2, -1) == XPoly([-2, 0, 1])

    def test_theorem2_m1_vanishes(self):
        assert all(a_signed(n, 2, k) == 0 for n in range(1, 30) for k in range(-6, 7))

    def test_theorem2_m3_k2(self):
        assert verify_theorem2(3, 33, [2]).passed

    def test_theorem3_m1_hand_expansion(self):
        c = LaurentPoly({1: 1, -1: 1})
        assert a_value(1, 1, 0) - c * a_value(0, 1, 0) == 0

    def test_theorem3_m2(self):
        assert verify_theorem3(2, 22, [0]).passed

    def test_theorem3_at_minus_one(self):
        # specialized at z = -1 the eigenvalue is -2
        for m in range(1, 7):
            op = lucas_poly(m, -1) + 2
            for k in range(-6, 7):
                for n in range(20):
                    assert apply_shift_poly(op, lambda i: a_signed(i, m, k), n) == 0

    def test_wrong_operator_is_caught(self):
        # F_{m+1} alone (missing -F_m) must not annihilate a(n, 2m+1, k)
        report = VerificationReport("probe", {})
        op = fib_poly(3, -1)
        for n in range(10):
            report.check({"n": n}, 0, apply_shift_poly(op, lambda i: a_signed(i, 5, 0), n))
        assert not report.passed

    def test_default_grids(self):
        for name in ("thm1", "thm2", "thm3"):
            assert run_suite(name).passed


def test_shift_law_suite():
    assert verify_shift_law(4, 15, range(-6, 7)).passed


def test_schur_suite():
    assert verify_schur().passed


def test_theorem2_decomposition():
    assert theorem2_decomposition(4, 2, 0) == a_signed(4, 4, 0)
    assert verify_theorem2_decomposition().passed


class TestLatticePaths:
    def test_examples(self):
        assert lattice_path_count(0, 3) == 1
        assert lattice_path_count(4, 2) == 5

    def test_matches_brute_force(self):
        for n in range(15):
            for m in range(1, 5):
                assert lattice_path_count(n, m) == brute_strip_paths(n, m)

    def test_matches_sums(self):
        assert verify_paths(24, 4).passed

    def test_rejects_bad_strip(self):
        with pytest.raises(ValueError):
            lattice_path_count(3, 0)


class TestReport:
    def test_failures_are_capped(self):
        report = VerificationReport("cap", {})
        for i in range(250):
            report.check({"i": i}, 0, 1)
        assert report.failure_count == 250
        assert len(report.failures) == MAX_RECORDED_FAILURES
        doc = report.to_dict()
        assert doc["failures_truncated"] and not doc["passed"]
        assert doc["failures"][0] == {"params": {"i": 0}, "expected": "0", "actual": "1"}

    def test_pass_flag_tracks_failures(self):
        report = VerificationReport("ok", {})
        report.check({}, Fraction(1, 2), Fraction(2, 4))
        assert report.passed and report.failures == []
        assert report.summary() == "PASS ok: 1 cases, 0 failures"

    def test_laurent_failure_serialization(self):
        report = VerificationReport("laurent", {})
        report.check({"n": 0}, LaurentPoly(), LaurentPoly({-1: 1}))
        assert report.to_dict()["failures"][0]["actual"] == [[-1, "1"]]

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("lemma3")
