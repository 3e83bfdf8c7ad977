"""
The type-B quotient: sign, Levi subgroup and weight
===================================================

For SO_{2n+1} the role of the l-quotient is played by a Levi subgroup
GL_{r_1} x ... (x SO_{2r+1}) and a dominant weight of it.
"""

from plethyon import sign_levi_weight
from plethyon.quotient_b import is_stable, predicted_padding, w_tilde_table

# even l
d = sign_levi_weight((9, 7, 6, 5, 5, 2), 2, 6)
print(d.sign, d.levi_name(), d.raw_weights, "alpha =", d.alphas)
print("eta o w0:", w_tilde_table(d.w0))

# odd l: one orthogonal block appears
d = sign_levi_weight((9, 7, 6, 5, 5, 1), 3, 6)
print(d.sign, d.levi_name(), d.raw_weights, "so part:", d.so_weight)

# a partition whose weight keeps growing as zeros are added
mu = (9, 6, 5, 5, 1)
for n in (5, 6, 7):
    print(n, sign_levi_weight(mu, 2, n).raw_weights[0])
print("stable:", is_stable(mu, 2, 5))
print("predicted after two zeros:", predicted_padding(sign_levi_weight(mu, 2, 5))[0])
