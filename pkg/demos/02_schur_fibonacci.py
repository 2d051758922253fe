"""
a(n, 5, k) and the Fibonacci numbers
====================================

The alternating sum a(n, 5, k) depends only on k mod 10: it is F_{n+1},
F_n or 0, up to a sign flip when k moves by 5.
"""

from binsums import a_signed, schur_classify

for k in range(10):
    cls = schur_classify(k)
    values = [a_signed(n, 5, k) for n in range(10)]
    label = cls.tag if cls.base is None else f"-({schur_classify(cls.base).tag})"
    print(f"k={k}: {label:>10}  {values}")

# exact integers all the way out
print("a(60, 5, 0) =", a_signed(60, 5, 0))
