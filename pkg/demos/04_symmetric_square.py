"""
Symmetric and antisymmetric squares
===================================

S^2 V(la) and Lambda^2 V(la) from 1/2 (s_la^2 +- p_2 o s_la).
"""

from plethyon import GroupLabel, split_square, weyl_dimension

for family, group in (("so", "so_odd"), ("sp", "sp")):
    r = split_square((1,), family)
    print(family, "S^2:", r.plus, "Lambda^2:", r.minus)

la = (2, 1)
r = split_square(la, "sp")
g = GroupLabel("sp", 7)
dim = lambda e: sum(c * weyl_dimension(g, mu) for mu, c in e.items())
d = weyl_dimension(g, la)
print(dim(r.plus), d * (d + 1) // 2)
print(dim(r.minus), d * (d - 1) // 2)
