#!/usr/bin/env python3
# Explicit families with prescribed Frobenius number: one member per subset
# of a candidate interval, so the family sizes grow like 2**|interval|.

from fractions import Fraction

from numsgps import (
    FamilySpec,
    as_family_candidates,
    family_as_enumerate,
    family_counts,
    family_general_member,
    general_family_candidates,
    is_almost_symmetric,
    pseudo_frobenius,
    type_of,
)

# The almost-symmetric family at (F, k): pick any subset of the candidate
# interval, mirror-close the top block, and every choice is almost
# symmetric with one common type.
F, k = 31, 1
print(f"candidates for F={F}, k={k}:", list(as_family_candidates(F, k)))
members = family_as_enumerate(F, k)
print(f"{len(members)} members, all almost symmetric:",
      all(is_almost_symmetric(S) for S in members))
print("common type:", sorted({type_of(S) for S in members}))
for S in members[:3]:
    print("  ", S)

# The general family needs an exact rational cut ratio beta in (2/5, 1/2)
# whose products with F and 2F miss the integers; the type is then k+1 for
# odd F and k+2 for even F.
beta = Fraction(43, 100)
F, k = 29, 2
print(f"\ngeneral family at F={F}, k={k}, beta={beta}")
print("candidates:", list(general_family_candidates(F, beta)))
S = family_general_member(FamilySpec(F, k, (13,), beta))
print("one member:", S)
print("PF:", pseudo_frobenius(S), " type:", type_of(S), "= k+1")

# family_counts lines the family size up against the exact counts at the
# same (F, type) when F is small enough to enumerate outright.
for line in family_counts(19, 1, exact_limit=24).lines():
    print(line)
