"""
Sign and l-quotient of a partition
==================================

Power-sum plethysm on the Schur basis is controlled by the l-sign and the
l-quotient.  Partitions are entered decreasing; the algorithm reads them
increasing and zero-padded.
"""

from plethyon import ell_quotient_a, format_partition, psi_gl
from plethyon.partitions import increasing_view

mu = (6, 6, 4, 4, 4, 3, 2, 1)
print("increasing view:", increasing_view(mu, 8))

q = ell_quotient_a(mu, 3, 8)
print("sign:", q.sign)
print("3-quotient:", [format_partition(p) for p in q.quotient])

# one more zero part rotates the quotient and keeps the sign
q9 = ell_quotient_a(mu, 3, 9)
print("at rank 9:", q9.sign, [format_partition(p) for p in q9.quotient])

# p_3 o s_(2,1), stable in the number of variables
for nu, c in psi_gl((2, 1), 3).sorted_items():
    print(f"{c:+d} s{format_partition(nu)}")
