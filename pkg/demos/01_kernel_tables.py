"""
Kernel tables and the operator E^2 - E - 1
==========================================

Builds s(n, k) for a = -1, b = 0, shows how t(n, k) splits into two
shifted copies of it, and applies T = E^2 - E - 1 to row 0.
"""

from binsums import KernelParams, KernelTable, apply_shift_poly, p_poly, t_value

table = KernelTable(KernelParams(-1, 0))

# rows of s(n, k) for k = -3..3
for n in range(4):
    print(f"s({n}, k):", [str(table.value(n, k)) for k in range(-3, 4)])

# t(n, k) = s(n, k) - s(n, k - 1)
for n in range(4):
    print(f"t({n}, k):", [t_value(n, k) for k in range(-3, 4)])

# T is p_2(x, -1, 0); T s(0, k) is 1 exactly when |k| <= 2
T = p_poly(2, -1, 0)
print("T =", T)
print([str(apply_shift_poly(T, lambda i, k=k: table.value(i, k), 0)) for k in range(-4, 5)])
