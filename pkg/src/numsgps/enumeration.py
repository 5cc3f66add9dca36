"""Exhaustive generation of semigroups by genus or Frobenius number.

Two complementary enumerators feed the counting tables: a depth-first
walk of the usual semigroup tree (children remove one minimal generator
above the Frobenius number) and, per Frobenius number, a direct DFS over
membership of [1, F-1] that propagates sum-closure as it goes.  Both are
deterministic, and parallel table builds merge worker tallies by plain
addition, so partitioned runs reproduce serial results bit for bit.
Visitor callbacks must be pure or synchronize internally: enumerators may
call them from worker-local traversal state.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from .core import (
    NATURALS,
    CapacityError,
    NumericalSemigroup,
    NumericalSet,
    bit_indices,
    capacity,
    minimal_generators,
)
from .transforms import _pf_bits, associated

__all__ = [
    "children",
    "enumerate_by_genus",
    "enumerate_by_frobenius",
    "enumerate_numerical_sets",
    "sets_with_gap_sum",
    "sets_with_assoc_genus",
    "sparse_semigroups_by_frobenius",
    "CountTable",
    "TableSet",
    "build_tables",
]


def children(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Semigroups obtained by removing one minimal generator above F(S)."""
    F = S.frobenius
    out = []
    for x in minimal_generators(S):
        if x > F:
            if x > capacity():
                raise CapacityError(f"child frobenius {x} exceeds capacity")
            out.append(NumericalSemigroup._trusted(x, S.gap_mask | (1 << x)))
    return out


def _walk_genus(max_g: int, visit) -> None:
    # Preorder walk of the semigroup tree down to genus max_g; the node at
    # depth d has genus d, and every semigroup appears exactly once.
    stack = [(NATURALS, 0)]
    while stack:
        S, d = stack.pop()
        visit(S, d)
        if d < max_g:
            for child in reversed(children(S)):
                stack.append((child, d + 1))


def enumerate_by_genus(g: int, visitor=None) -> int:
    """Visit every semigroup of genus exactly g once; return the count."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    count = 0

    def visit(S, d):
        nonlocal count
        if d == g:
            count += 1
            if visitor is not None:
                visitor(S)

    _walk_genus(g, visit)
    return count


def _frobenius_member_masks(F: int):
    # Yields the membership mask over [1, F-1] of every semigroup with
    # Frobenius number exactly F.  `sums` carries the pairwise sums of the
    # chosen members (truncated at F); a position hit by `sums` is forced
    # in, and any sum landing exactly on F kills the branch.
    if F == 1:
        yield 0
        return
    fbit = 1 << F
    full = (1 << (F + 1)) - 1
    stack = [(1, 0, 0)]
    while stack:
        p, mem, sums = stack.pop()
        dead = False
        while p < F:
            bit = 1 << p
            ext = ((mem | bit) << p) & full
            if sums & bit:
                if ext & fbit:
                    dead = True
                    break
                mem |= bit
                sums |= ext
            elif not (ext & fbit):
                stack.append((p + 1, mem | bit, sums | ext))
            p += 1
        if not dead:
            yield mem


def enumerate_by_frobenius(F: int, visitor=None) -> int:
    """Visit every semigroup with Frobenius number exactly F once."""
    if F < 1:
        raise ValueError("frobenius must be >= 1")
    window = (1 << (F + 1)) - 1
    count = 0
    for mem in _frobenius_member_masks(F):
        count += 1
        if visitor is not None:
            visitor(NumericalSemigroup._trusted(F, window & ~(mem | 1)))
    return count


def enumerate_numerical_sets(F: int, visitor=None) -> int:
    """Visit every numerical set with Frobenius number exactly F.

    These are the 2**(F-1) gap subsets of [1, F-1] together with F itself.
    """
    if F < 1:
        raise ValueError("frobenius must be >= 1")
    total = 1 << (F - 1)
    if visitor is not None:
        top = 1 << F
        for k in range(total):
            visitor(NumericalSet(F, (k << 1) | top))
    return total


def sets_with_gap_sum(alpha: int) -> list[NumericalSet]:
    """All numerical sets T with g(T) + g(A(T)) == alpha.

    Complete because F(T) = F(A(T)) <= 2 g(A(T)) - 1 <= 2*alpha - 3 for a
    qualifying set, so the brute-force search space is finite.
    """
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    found: list[NumericalSet] = []

    def check(H):
        if H.genus + associated(H).genus == alpha:
            found.append(H)

    for F in range(1, max(0, 2 * alpha - 3) + 1):
        enumerate_numerical_sets(F, check)
    return found


def sets_with_assoc_genus(alpha: int) -> list[NumericalSet]:
    """All numerical sets T with g(A(T)) == alpha (search space F <= 2*alpha - 1)."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    if alpha == 0:
        return [NATURALS]
    found: list[NumericalSet] = []

    def check(H):
        if associated(H).genus == alpha:
            found.append(H)

    for F in range(1, 2 * alpha):
        enumerate_numerical_sets(F, check)
    return found


def sparse_semigroups_by_frobenius(F: int, max_n: int) -> list[NumericalSemigroup]:
    """Semigroups with Frobenius number F and at most max_n members in [0, F].

    Since t(S) <= 2 g(S) - F(S) = F + 2 - 2 n(S), this list is complete
    for every type >= F + 2 - 2 * max_n, which is what makes large-type
    counts affordable without a full enumeration.
    """
    if F < 1:
        raise ValueError("frobenius must be >= 1")
    if max_n < 1:
        return []
    window = (1 << (F + 1)) - 1
    out: list[NumericalSemigroup] = []

    def descend(mask, top, picked):
        out.append(NumericalSemigroup._trusted(F, window & ~(mask | 1)))
        if picked + 1 >= max_n:
            return
        for x in range(top - 1, 0, -1):
            bit = 1 << x
            ext = ((mask | bit) << x) & window
            if ext & ~mask:
                continue
            descend(mask | bit, x, picked + 1)

    descend(0, F, 0)
    return out


@dataclass
class CountTable:
    """Sparse (index, type) -> count table with a parity rollup."""

    axis: str  # "frobenius" or "genus"
    rows: dict[tuple[int, int], int]
    parity: dict[int, tuple[int, int]]

    @classmethod
    def from_rows(cls, axis: str, rows: dict[tuple[int, int], int]) -> "CountTable":
        return cls(axis, dict(rows), cls.parity_of(rows))

    @staticmethod
    def parity_of(rows: dict[tuple[int, int], int]) -> dict[int, tuple[int, int]]:
        par: dict[int, tuple[int, int]] = {}
        for (idx, t), c in rows.items():
            odd, even = par.get(idx, (0, 0))
            if t % 2:
                odd += c
            else:
                even += c
            par[idx] = (odd, even)
        return par

    def count(self, index: int, t: int) -> int:
        return self.rows.get((index, t), 0)

    def total(self, index: int) -> int:
        return sum(c for (i, _t), c in self.rows.items() if i == index)

    def indices(self) -> list[int]:
        return sorted({i for i, _t in self.rows})


@dataclass
class TableSet:
    """The three tables one table build produces."""

    by_frobenius: CountTable
    almost_symmetric_by_frobenius: CountTable
    by_genus: CountTable


def _merge(target: dict, extra: dict) -> None:
    for key, c in extra.items():
        target[key] = target.get(key, 0) + c


def _frobenius_rows(F: int) -> tuple[dict, dict]:
    window = (1 << (F + 1)) - 1
    rows: dict[tuple[int, int], int] = {}
    as_rows: dict[tuple[int, int], int] = {}
    for mem in _frobenius_member_masks(F):
        t = _pf_bits(F, mem | 1).bit_count()
        key = (F, t)
        rows[key] = rows.get(key, 0) + 1
        g = F - mem.bit_count()
        if t == 2 * g - F:
            as_rows[key] = as_rows.get(key, 0) + 1
    return rows, as_rows


def _genus_rows_range(root_frobenius: int, root_gap_mask: int,
                      root_depth: int, max_g: int, include_root: bool) -> dict:
    rows: dict[tuple[int, int], int] = {}
    root = NumericalSemigroup._trusted(root_frobenius, root_gap_mask)
    stack = [(root, root_depth)] if include_root else [
        (c, root_depth + 1) for c in children(root)]
    while stack:
        S, d = stack.pop()
        if d >= 1:
            t = _pf_bits(S.frobenius, S.member_mask()).bit_count()
            key = (d, t)
            rows[key] = rows.get(key, 0) + 1
        if d < max_g:
            stack.extend((c, d + 1) for c in children(S))
    return rows


def _frobenius_task(F: int) -> tuple[dict, dict]:
    return _frobenius_rows(F)


def _genus_task(args: tuple[int, int, int, int]) -> dict:
    frobenius, gap_mask, depth, max_g = args
    return _genus_rows_range(frobenius, gap_mask, depth, max_g, include_root=False)


def build_tables(max_F: int, max_g: int, workers: int = 1) -> TableSet:
    """Count semigroups by (F, type), (F, type) restricted to almost
    symmetric ones, and (genus, type), up to the given bounds.

    With workers > 1 the Frobenius axis is partitioned by F value and the
    genus tree by subtrees below a fixed frontier depth; tallies merge by
    addition, so the result is independent of the worker count.
    """
    if max_F < 1 or max_g < 1:
        raise ValueError("bounds must be >= 1")
    frob_rows: dict[tuple[int, int], int] = {}
    as_rows: dict[tuple[int, int], int] = {}
    genus_rows: dict[tuple[int, int], int] = {}

    if workers <= 1:
        for F in range(1, max_F + 1):
            rows, asr = _frobenius_rows(F)
            _merge(frob_rows, rows)
            _merge(as_rows, asr)
        _merge(genus_rows, _genus_rows_range(-1, 0, 0, max_g, include_root=True))
    else:
        # Frontier depth 7 gives a few dozen genus subtrees to spread out.
        frontier = min(max_g, 7)
        frontier_nodes: list[tuple[int, int, int, int]] = []

        def visit(S, d):
            if d >= 1:
                t = _pf_bits(S.frobenius, S.member_mask()).bit_count()
                key = (d, t)
                genus_rows[key] = genus_rows.get(key, 0) + 1
            if d == frontier:
                frontier_nodes.append((S.frobenius, S.gap_mask, d, max_g))

        _walk_genus(frontier, visit)
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            for rows, asr in pool.map(_frobenius_task, range(1, max_F + 1)):
                _merge(frob_rows, rows)
                _merge(as_rows, asr)
            if frontier < max_g:
                for rows in pool.map(_genus_task, frontier_nodes):
                    _merge(genus_rows, rows)

    return TableSet(
        CountTable.from_rows("frobenius", frob_rows),
        CountTable.from_rows("frobenius", as_rows),
        CountTable.from_rows("genus", genus_rows),
    )
