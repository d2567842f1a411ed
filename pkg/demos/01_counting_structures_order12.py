"""Counting Hopf-Galois structures on degree-12 extensions.

A Galois extension with group G carries one Hopf-Galois structure for every
regular subgroup of Perm(G) normalized by the left translations, and the
structures sort into types by the isomorphism class of that subgroup.  The
counting happens inside holomorphs: the number of type-M structures on a
G-extension is |Aut(G)|/|Aut(M)| times the number of regular subgroups of
Hol(M) isomorphic to G.
"""

from hopfgalois import catalog
from hopfgalois.groups import automorphism_group
from hopfgalois.holomorph import count_R, holomorph, regular_subgroups_iso_to
from hopfgalois.obstruction import census

# Single cells first: the dihedral extension admits 14 quaternionic
# structures, while the alternating group admits none at all of that type.
print("R(D6,[Q3])  =", count_R("D6", "Q3"))
print("R(A4,[Q3])  =", count_R("A4", "Q3"))

# The machinery behind the count: Hol(Q3) lives inside Sym(12) and its
# regular subgroups are enumerated explicitly.
q3 = catalog.lookup("Q3")
hol = holomorph(q3)
print(f"Hol(Q3): order {hol.order} = {q3.order} * |Aut(Q3)| "
      f"= {q3.order} * {len(automorphism_group(q3))}")
for m_name in ("Q3", "C12", "D6", "C6xC2"):
    records = regular_subgroups_iso_to(hol, catalog.lookup(m_name))
    print(f"  regular copies of {m_name:6s} inside Hol(Q3): {len(records)}")

# The full 5x5 table over the groups of order 12.
print()
print(census(12).to_csv())
