"""
Annihilating recurrences, numerically and with symbolic z
==========================================================

Fibonacci differences kill the odd-modulus sums, Lucas polynomials kill the
even-modulus ones, and with z kept symbolic L_m(E, -1) - (z + 1/z) kills
a(n, m, k, z) for every m.
"""

from binsums import LaurentPoly, a_signed, a_value, apply_shift_poly, fib_poly, lucas_poly
from binsums.verify import theorem3_operator, verify_theorem1, verify_theorem2, verify_theorem3

m = 3
op = fib_poly(m + 1, -1) - fib_poly(m, -1)
print("F_4(x,-1) - F_3(x,-1) =", op)
print([str(apply_shift_poly(op, lambda n: a_signed(n, 2 * m + 1, 4), n)) for n in range(10)])

print("L_2(x,-1) =", lucas_poly(2, -1))
print("a(n, 4, 0):", [a_signed(n, 4, 0) for n in range(12)])

# symbolic z
print("a(3, 2, 1, z) =", a_value(3, 2, 1))
op3 = theorem3_operator(2)
print("operator:", op3)
residues = [apply_shift_poly(op3, lambda n: a_value(n, 2, 1), n) for n in range(8)]
print("all zero in Q[z, 1/z]:", all(r == LaurentPoly() for r in residues))

for report in (verify_theorem1(), verify_theorem2(), verify_theorem3()):
    print(report.summary())
