"""
Lattice paths in a strip
========================

a(n, 2m+1, 0) counts paths with floor(n/2) up steps and ceil(n/2) down
steps that stay strictly inside -m-1 < y < m. The path count below comes
from a DP that never looks at binomial coefficients.
"""

from binsums import a_signed, lattice_path_count

for m in range(1, 5):
    dp = [lattice_path_count(n, m) for n in range(12)]
    sums = [a_signed(n, 2 * m + 1, 0) for n in range(12)]
    print(f"m={m}", dp, "match" if dp == sums else "MISMATCH")
