"""The index-2 subgroup count and where the certificates come from.

A group has [G : G^2] - 1 subgroups of index two, where G^2 is generated by
the squares.  The count multiplies over direct products (and over cyclic
semidirect products), which makes groups with exactly zero or one index-2
subgroup easy to manufacture -- and those feed the emptiness certificates.
"""

from hopfgalois import catalog
from hopfgalois.groups import direct_product, make_cyclic
from hopfgalois.subgroups import index_two_count, squares_subgroup, z2_u2

for name in ("A4", "SL(2,3)", "C2xA4", "C12xC2", "C3xD4", "C4xS3"):
    g = catalog.lookup(name)
    sq = squares_subgroup(g)
    print(f"I2({name:8s}) = {index_two_count(g)}   "
          f"(squares subgroup has index {g.order // sq.order})")

# The product rule in action: I2(G1 x G2) = I2 I2' + I2 + I2'.
c3 = make_cyclic(3)
c4 = make_cyclic(4)
g = direct_product(direct_product(c3, c3), c4)
print("I2(C3 x C3 x C4) =", index_two_count(g))

# z2(n) counts groups of order n with no index-2 subgroup, u2(n) those with
# exactly one; each (z2-group, u2-group) pair is a certified-empty pairing.
for n in (12, 24):
    z2, u2 = z2_u2(catalog.groups_of_order(n))
    print(f"n={n}: z2={z2}, u2={u2} -> {z2 * u2} guaranteed empty pairings")
