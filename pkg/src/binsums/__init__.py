"""Exact binomial sums a(n, m, k, z), kernel tables and shift-operator
annihilators, with machinery to verify the recurrences they satisfy."""

from .exact import (
    LaurentPoly,
    Rational,
    XPoly,
    Z,
    binomial,
    format_rational,
    laurent_eval,
    laurent_mul,
    parse_rational,
)
from .kernel import KernelParams, KernelTable, kernel_row, kernel_value, t_value, v_value
from .polyfam import (
    fib_poly,
    fib_poly_closed,
    lucas_poly,
    lucas_poly_closed,
    p_poly,
    q_poly,
)
from .sums import SYMBOLIC, SchurClass, SumSpec, a_signed, a_value, j_support, schur_classify
from .verify import VerificationReport, apply_shift_poly, lattice_path_count

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memoized table, polynomial and sum."""
    from . import kernel, polyfam, sums

    kernel.kernel_table.cache_clear()
    polyfam._caches.clear()
    sums._symbolic.cache_clear()
    sums.a_signed.cache_clear()
