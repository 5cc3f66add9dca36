#!/usr/bin/env python3
# Exhaustive counts by Frobenius number and by genus, split by type parity.

import time

from numsgps import build_tables, enumerate_by_frobenius, enumerate_by_genus

# Counts of semigroups per genus: the tree enumerator visits each exactly once.
print("semigroups per genus:", [enumerate_by_genus(g) for g in range(11)])

# Counts per Frobenius number via the direct membership DFS.
print("semigroups per F:    ", [enumerate_by_frobenius(F) for F in range(1, 12)])

# One build produces three tables: all semigroups by (F, t), the almost
# symmetric ones by (F, t), and all semigroups by (genus, t).
start = time.perf_counter()
tables = build_tables(max_F=20, max_g=14, workers=1)
print(f"\nbuilt tables up to F=20, g=14 in {time.perf_counter() - start:.2f}s")

print("\n F   odd-t  even-t      g   odd-t  even-t")
for F in range(2, 15):
    fo, fe = tables.by_frobenius.parity[F]
    go, ge = tables.by_genus.parity.get(F, ("-", "-"))
    print(f"{F:3d} {fo:6} {fe:7}    {F:3d} {go:6} {ge:7}")

# Individual cells: the number of semigroups with Frobenius number 19 and
# type 17 say, or of genus 12 and type 3.
print("\ncount(F=19, t=17) =", tables.by_frobenius.count(19, 17))
print("count(g=12, t=3) =", tables.by_genus.count(12, 3))
print("almost symmetric count(F=19, t=15) =",
      tables.almost_symmetric_by_frobenius.count(19, 15))

# Row sums recover the plain per-index counts.
print("\nrow sum at F=19:", tables.by_frobenius.total(19),
      "= direct count:", enumerate_by_frobenius(19))
