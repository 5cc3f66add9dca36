#!/usr/bin/env python3
# The exhaustive check harness: every structural identity, swept over every
# semigroup and numerical set within small bounds, with failing witnesses
# reported in the runnable gaps= encoding.

from numsgps.verify import SweepBounds, check_bijection_frobenius, run_all

results = run_all(SweepBounds.fast())
for result in results:
    print(result.summary())

ok = sum(r.passed for r in results)
print(f"\n{ok}/{len(results)} checks passed")

# Checks are plain functions, so a single one can run at custom bounds:
# here the count of semigroups with Frobenius F and type F-4 is pinned to
# the mirror count 3 for every F up to 60.
result = check_bijection_frobenius(4, range(11, 61))
print("\n" + result.summary())
