#!/usr/bin/env python3
# The reflection transform, pseudo-Frobenius numbers, and transform chains.

from numsgps import (
    TransformReport,
    a_star,
    adjoin_frobenius,
    associated,
    b_set,
    big_L,
    from_generators,
    is_almost_symmetric,
    is_closed,
    pseudo_frobenius,
    t_chain,
    t_set,
    type_of,
)

S = from_generators([5, 7, 9])
print("S =", S)

# Pseudo-Frobenius numbers: gaps that every nonzero member pushes back in.
print("PF(S) =", pseudo_frobenius(S), " type t =", type_of(S))

# The reflection transform keeps x when F - x falls outside S.
T = t_set(S)
print("T(S) =", T, " closed?", is_closed(T))

# S is almost symmetric exactly when its reflection is closed; here the
# type 2 sits strictly below its upper bound 2g - F = 3, and indeed the
# reflection is not closed.
print("almost symmetric?", is_almost_symmetric(S))

# The reflection of a non-closed set still has an associated semigroup,
# and for the reflection of a semigroup it recovers S together with PF(S).
print("A(T(S)) =", associated(T))
print("a_star(S) =", a_star(S))

# Iterating the reflection always lands on the naturals after L steps.
print("\nL(S) =", big_L(S))
for i, X in enumerate(t_chain(S)):
    print(f"  T^{i}:", X)

# Filling in the largest gap moves one step up the semigroup tree and the
# type never drops: t(S + F) = t(S) + t(T(S)) - 1.
parent = adjoin_frobenius(S)
print("\nS with F filled in:", parent, " type:", type_of(parent))
print("B(S) =", b_set(S), " (gaps whose mirror is also a gap)")

# One lazy report bundles everything; fields are computed on first use.
rep = TransformReport(S)
print("\nreport flags:", rep.flags)
