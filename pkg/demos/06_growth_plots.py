#!/usr/bin/env python3
# Growth pictures: the odd-type share per index, and the normalized
# logarithms of the fixed-type counts, whose flattening curves suggest
# per-type growth exponents.

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from numsgps import build_tables

MAX_F, MAX_G = 26, 18
tables = build_tables(MAX_F, MAX_G)

fig, axes = plt.subplots(1, 3, figsize=(15, 4))

# Share of odd types at each Frobenius number and genus.
for table, hi, label in ((tables.by_frobenius, MAX_F, "by F"),
                         (tables.by_genus, MAX_G, "by genus")):
    xs = range(2, hi + 1)
    ys = []
    for i in xs:
        odd, even = table.parity[i]
        ys.append(odd / (odd + even))
    axes[0].plot(xs, ys, marker="o", markersize=3, label=label)
axes[0].axhline(0.5, color="gray", linewidth=0.5)
axes[0].set_title("odd-type share")
axes[0].legend()

# log2(count of type-t semigroups with Frobenius F) / F, odd F only.
for t in (2, 3, 4, 5):
    xs, ys = [], []
    for F in range(3, MAX_F + 1, 2):
        c = tables.by_frobenius.count(F, t)
        if c:
            xs.append(F)
            ys.append(math.log2(c) / F)
    axes[1].plot(xs, ys, marker="o", markersize=3, label=f"t={t}")
axes[1].set_title("log2 count / F (odd F)")
axes[1].legend()

# log_phi(count of type-t semigroups with genus g) / g.
phi = (1 + math.sqrt(5)) / 2
for t in (1, 2, 3, 4, 5):
    xs, ys = [], []
    for g in range(1, MAX_G + 1):
        c = tables.by_genus.count(g, t)
        if c:
            xs.append(g)
            ys.append(math.log(c) / math.log(phi) / g)
    axes[2].plot(xs, ys, marker="o", markersize=3, label=f"t={t}")
axes[2].set_title("log_phi count / g")
axes[2].legend()

fig.tight_layout()
fig.savefig("growth_plots.png", dpi=120)
print("wrote growth_plots.png")
