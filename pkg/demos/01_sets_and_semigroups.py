#!/usr/bin/env python3
# Building numerical sets and semigroups, and reading off their basic data.

from numsgps import (
    NATURALS,
    from_gaps,
    from_generators,
    is_closed,
    m_index,
    f_index,
    minimal_generators,
    profile,
)

# A numerical set is any cofinite subset of the naturals containing 0.
# It is described by its finite list of missing values, the "gaps".
H = from_gaps([1, 3, 4, 6, 8])
print("H =", H)
print("gaps:", H.gaps())
print("closed under addition?", is_closed(H))  # 2 + 2 = 4 is a gap, so no

# Semigroups are the closed ones; the usual way in is a generating set.
S = from_generators([5, 7, 9])
print("\nS = <5,7,9> =", S)
F, g, m, n = profile(S)
print(f"largest gap F={F}, number of gaps g={g}, smallest positive member m={m}")
print(f"members up to F (including 0): n={n}")
print("minimal generators recovered:", minimal_generators(S))

# Membership is O(1) on the bit mask, and the set behaves like a set.
print("\n12 in S?", 12 in S, "   13 in S?", 13 in S, "   10**9 in S?", 10**9 in S)
print("members up to 20:", S.members_upto(20))

# Indexed access to members and gaps.
print("positive members:", [m_index(S, i) for i in range(1, 6)])
print("gaps from the top:", [f_index(S, i) for i in range(1, 5)])

# The whole set of naturals is the degenerate case with no gaps.
print("\nthe naturals:", NATURALS, "profile:", profile(NATURALS))
