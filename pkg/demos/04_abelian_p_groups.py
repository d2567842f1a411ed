"""Abelian p-groups: type counts, characteristic subgroups, and why a cyclic
group almost never pairs with a non-cyclic abelian p-group.

The number of subgroups of each type is a polynomial in p built from
Gaussian binomials; characteristic subgroups of the group of type lam are
indexed by bounded nondecreasing tuples.  Because the cyclic group has
exactly one subgroup per order, any order with two or more characteristic
subgroups on the other side forces emptiness, and the fraction of types hit
by that argument climbs toward one.
"""

from hopfgalois import catalog
from hopfgalois.partitions import (
    Partition,
    alpha,
    canonical_tuples,
    format_ratio,
    gaussian_binomial,
    has_multiple_char_order,
    nc_np_table,
    partitions,
)
from hopfgalois.subgroups import all_subgroups

# Gaussian binomials count subspaces; they are the atoms of everything here.
print("2-dim subspaces of F2^4:", gaussian_binomial(4, 2, 2))

# Subgroups of C2 x C8 by type, against a direct enumeration.
lam = Partition((1, 3))
g = catalog.abelian_p_group(2, lam.parts)
print("total subgroups of C2 x C8:", len(all_subgroups(g)))
for r in range(lam.n + 1):
    mus = partitions(r) if r else [Partition(())]
    print(f"  order 2^{r}: "
          + ", ".join(f"type {mu.parts}: {alpha(lam, mu, 2)}" for mu in mus
                      if alpha(lam, mu, 2)))

# Characteristic subgroups correspond to canonical tuples; two tuples at one
# order r force R(C_{p^4}, [C_p x C_{p^3}]) to be empty.
for r in range(lam.n + 1):
    entries = [t.entries for t in canonical_tuples(lam, r)]
    print(f"canonical tuples of {lam.parts} at r={r}: {entries}")
print("first repeated order:", has_multiple_char_order(lam))

# The fraction nc/np of types with a repeated characteristic order.
print()
print("n,nc,np,ratio")
for (n, nc, np_, q) in nc_np_table(12):
    print(f"{n},{nc},{np_},{format_ratio(q)}")
