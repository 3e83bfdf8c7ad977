"""
Plethysm of orthogonal and symplectic characters
================================================

psi_so / psi_sp give rank-free answers.  Below we compare one of them with
a brute-force Weyl character computation and with the Levi branching route.
"""

from plethyon import GroupLabel, a_so, a_so_via_levi, psi_oracle, psi_so, psi_sp
from plethyon.plethysm import candidate_partitions

la, ell = (2, 1), 2
print("p_2 o s^so_(2,1) =", psi_so(la, ell))
print("p_2 o s^sp_(2,1) =", psi_sp(la, ell))

n = 7
exact = psi_oracle(GroupLabel("so_odd", n), la, ell)
print("agrees with SO_15 characters:", dict(exact) == dict(psi_so(la, ell).restricted(n)))

# Levi route: sign times a branching multiplicity
for mu in candidate_partitions((1,), 3):
    if len(mu) <= 3:
        print(mu, a_so((1,), mu, 3), a_so_via_levi((1,), mu, 3, 3))
