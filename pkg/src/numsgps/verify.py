"""Exhaustive small-bound checks for the structural identities.

Each check sweeps every semigroup (or numerical set) within a bound and
verifies one group of identities exactly, recording failing witnesses in
the ``gaps=`` text encoding so a bug report is runnable as-is.  The
sweeps are exhaustive rather than sampled: at these sizes enumeration is
stronger than any property-based generator.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .core import (
    NATURALS,
    NumericalSemigroup,
    NumericalSet,
    as_semigroup,
    bit_indices,
    format_set_spec,
    is_closed,
    f_index,
    m_index,
    profile,
)
from .enumeration import (
    children,
    enumerate_by_genus,
    sets_with_assoc_genus,
    sets_with_gap_sum,
    sparse_semigroups_by_frobenius,
)
from .transforms import (
    _ordinary_or_naturals,
    a_star,
    adjoin_frobenius,
    associated,
    b_set,
    big_L,
    is_almost_symmetric,
    is_max_ed,
    is_ordinary,
    is_staircase,
    is_symmetric,
    ordinarization,
    pseudo_frobenius,
    semigroup_from_t_set,
    shifted_t_power,
    t_chain,
    t_set,
    type_of,
)

__all__ = [
    "CheckResult",
    "SweepBounds",
    "check_type_bounds",
    "check_as_equivalence",
    "check_bijection_frobenius",
    "check_bijection_genus",
    "check_corollary_T1",
    "check_chain_theorems",
    "check_staircase",
    "check_theorem_1_4",
    "check_numerical_set_theorems",
    "run_all",
]

WITNESS_CAP = 20


@dataclass
class CheckResult:
    """Outcome of one exhaustive check."""

    name: str
    domain: str
    cases: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)
    failure_count: int = 0
    skipped: int = 0
    millis: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, witness: NumericalSet, detail: str) -> None:
        self.failure_count += 1
        if len(self.failures) < WITNESS_CAP:
            self.failures.append((format_set_spec(witness), detail))

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = (
            f"{status} {self.name} [{self.domain}] cases={self.cases}"
            f" failures={self.failure_count} skipped={self.skipped}"
            f" ms={self.millis:.0f}"
        )
        for spec, detail in self.failures[:3]:
            line += f"\n  witness {spec}: {detail}"
        return line


def _semigroups_upto_genus(max_g: int) -> Iterator[NumericalSemigroup]:
    # Every semigroup with 1 <= genus <= max_g, once.
    stack = [(NATURALS, 0)]
    while stack:
        S, d = stack.pop()
        if d >= 1:
            yield S
        if d < max_g:
            for child in reversed(children(S)):
                stack.append((child, d + 1))


def _numerical_sets_upto(max_F: int) -> Iterator[NumericalSet]:
    for F in range(1, max_F + 1):
        top = 1 << F
        for k in range(1 << (F - 1)):
            yield NumericalSet(F, (k << 1) | top)


def check_type_bounds(max_g: int) -> CheckResult:
    """g/(F+1-g) <= t <= 2g - F for every semigroup in the sweep."""
    res = CheckResult("type_bounds", f"semigroups g<={max_g}")
    for S in _semigroups_upto_genus(max_g):
        res.cases += 1
        F, g, _m, n = profile(S)
        t = type_of(S)
        if not (g <= t * n and t <= 2 * g - F):
            res.fail(S, f"t={t} outside [g/n, 2g-F] with g={g} n={n} F={F}")
    return res


def _gap_addition_law(S: NumericalSet) -> bool:
    # Whenever two gaps sum above F, the excess over F is again a gap.
    F = S.frobenius
    gm = S.gap_mask
    window = (1 << (F + 1)) - 1
    for x in bit_indices(gm):
        over = ((gm << x) >> F) & window & ~1
        if over & ~gm:
            return False
    return True


def check_as_equivalence(max_g: int) -> CheckResult:
    """The four equivalent views of the type attaining its upper bound."""
    res = CheckResult("as_equivalence", f"semigroups g<={max_g}")
    for S in _semigroups_upto_genus(max_g):
        res.cases += 1
        F, g = S.frobenius, S.genus
        pf = pseudo_frobenius(S)
        t = len(pf)
        T = t_set(S)
        AT = associated(T)
        almost = t == 2 * g - F
        if almost != is_closed(T):
            res.fail(S, "t == 2g-F disagrees with closure of the t_set")
        if almost != _gap_addition_law(S):
            res.fail(S, "gap addition law disagrees with almost symmetry")
        pf_mask = 0
        for p in pf:
            pf_mask |= 1 << p
        if AT.gap_mask != S.gap_mask & ~pf_mask:
            res.fail(S, "associated(t_set(S)) is not S union PF(S)")
        if t != g - AT.genus:
            res.fail(S, f"t={t} != g - g(A(T)) = {g - AT.genus}")
        if 2 * g - F - t != AT.genus - T.genus:
            res.fail(S, "deficiency 2g-F-t != g(A(T)) - g(T)")
    return res


def check_bijection_frobenius(alpha: int, F_values: Iterable[int]) -> CheckResult:
    """Counts of type F-alpha match the mirror sets with gap sum alpha."""
    F_values = sorted(F_values)
    if not F_values:
        raise ValueError("empty Frobenius range")
    if F_values[0] <= 4 * alpha - 6:
        raise ValueError(f"every F must exceed 4*alpha - 6 = {4 * alpha - 6}")
    targets = sets_with_gap_sum(alpha)
    expected = len(targets)
    res = CheckResult(
        f"bijection_frobenius(alpha={alpha})",
        f"F in {F_values[0]}..{F_values[-1]}, expected count {expected}",
    )
    max_n = alpha // 2 + 1
    for F in F_values:
        res.cases += 1
        lhs = {S for S in sparse_semigroups_by_frobenius(F, max_n)
               if type_of(S) == F - alpha}
        if len(lhs) != expected:
            res.fail(NumericalSet(F, 1 << F) if F >= 1 else NATURALS,
                     f"F={F}: count {len(lhs)} != {expected}")
        mirrored = set()
        for T in targets:
            S = semigroup_from_t_set(T, F)
            if t_set(S) != T or S.frobenius != F or type_of(S) != F - alpha:
                res.fail(T, f"F={F}: mirror construction round trip failed")
            mirrored.add(S)
        if mirrored != lhs:
            res.fail(NumericalSet(F, 1 << F),
                     f"F={F}: mirrored semigroups differ from direct enumeration")
    return res


def check_bijection_genus(alpha: int, g_values: Iterable[int]) -> CheckResult:
    """Counts of type g-alpha match the sets whose associated genus is alpha."""
    g_values = sorted(g_values)
    if not g_values:
        raise ValueError("empty genus range")
    if g_values[0] < max(3 * alpha - 1, 1):
        raise ValueError(f"every g must be at least max(3*alpha - 1, 1) = {max(3 * alpha - 1, 1)}")
    targets = sets_with_assoc_genus(alpha)
    expected = len(targets)
    res = CheckResult(
        f"bijection_genus(alpha={alpha})",
        f"g in {g_values[0]}..{g_values[-1]}, expected count {expected}",
    )
    for g in g_values:
        res.cases += 1
        lhs = set()
        for F in range(g, g + alpha + 1):
            for S in sparse_semigroups_by_frobenius(F, F + 1 - g):
                if S.genus == g and type_of(S) == g - alpha:
                    lhs.add(S)
        if len(lhs) != expected:
            res.fail(NATURALS, f"g={g}: count {len(lhs)} != {expected}")
        mirrored = set()
        for T in targets:
            F = g + T.genus
            S = semigroup_from_t_set(T, F)
            if S.genus != g or type_of(S) != g - alpha or t_set(S) != T:
                res.fail(T, f"g={g}: mirror construction round trip failed")
            mirrored.add(S)
        if mirrored != lhs:
            res.fail(NATURALS, f"g={g}: mirrored semigroups differ from enumeration")
    return res


def check_corollary_T1(beta: int, F_values: Iterable[int]) -> CheckResult:
    """Almost symmetric count at type F-2*beta equals the genus-beta count."""
    F_values = sorted(F_values)
    if not F_values:
        raise ValueError("empty Frobenius range")
    if F_values[0] <= 8 * beta - 6:
        raise ValueError(f"every F must exceed 8*beta - 6 = {8 * beta - 6}")
    genus_count = enumerate_by_genus(beta)
    res = CheckResult(
        f"corollary_T1(beta={beta})",
        f"F in {F_values[0]}..{F_values[-1]}, expected count {genus_count}",
    )
    for F in F_values:
        res.cases += 1
        count = sum(
            1
            for S in sparse_semigroups_by_frobenius(F, beta + 1)
            if S.genus == F - beta and type_of(S) == F - 2 * beta
        )
        if count != genus_count:
            res.fail(NumericalSet(F, 1 << F), f"F={F}: count {count} != {genus_count}")
    return res


def check_chain_theorems(max_g: int) -> CheckResult:
    """Filling in the Frobenius number never lowers the type."""
    res = CheckResult("chain_theorems", f"non-ordinary semigroups g<={max_g}")
    for S in _semigroups_upto_genus(max_g):
        res.cases += 1
        if is_ordinary(S):
            res.skipped += 1
            continue
        F, _g, m, _n = profile(S)
        t0 = type_of(S)
        T = t_set(S)
        tT = type_of(T)
        parent = adjoin_frobenius(S)
        t1 = type_of(parent)
        if t1 != t0 + tT - 1:
            res.fail(S, f"t(S+F) = {t1} != t + t(T) - 1 = {t0 + tT - 1}")
        if t1 < t0:
            res.fail(S, "type dropped when the Frobenius number was filled in")
        pf = set(pseudo_frobenius(S))
        for x in range(F - m + 1, F + 1):
            if x not in S and x not in pf:
                res.fail(S, f"{x} in [F-m+1, F] is neither a member nor pseudo-Frobenius")
                break
        closed2 = is_closed(t_set(T))
        if closed2 != (t0 + tT == m):
            res.fail(S, "closure of the double t_set disagrees with t + t(T) == m")
        if closed2 != is_max_ed(parent):
            res.fail(S, "closure of the double t_set disagrees with max ED of S+F")
    return res


def check_staircase(max_g: int) -> CheckResult:
    """The lower type bound is attained exactly by symmetric and staircase
    semigroups, via the explicit injection of gaps into member/PF pairs."""
    res = CheckResult("staircase", f"semigroups g<={max_g}")
    for S in _semigroups_upto_genus(max_g):
        res.cases += 1
        F, g, _m, n = profile(S)
        t = type_of(S)
        attained = g == n * t
        if attained != (is_symmetric(S) or is_staircase(S)):
            res.fail(S, "g == n*t disagrees with the symmetric-or-staircase classification")
        pf = set(pseudo_frobenius(S))
        pairs = set()
        for x in bit_indices(S.gap_mask):
            phi = None
            for s in range(F - x, -1, -1):
                if s in S and (x + s) not in S:
                    phi = s
                    break
            if phi is None or not 0 <= phi < F:
                res.fail(S, f"no witness member for gap {x}")
                continue
            if (phi == 0) != (x in pf):
                res.fail(S, f"phi({x})==0 disagrees with pseudo-Frobenius membership")
            if (x + phi) not in pf:
                res.fail(S, f"{x}+phi({x}) = {x + phi} is not pseudo-Frobenius")
            pairs.add((phi, x + phi))
        if len(pairs) != g:
            res.fail(S, "gap-to-pair map is not injective")
    return res


def check_theorem_1_4(max_g: int) -> CheckResult:
    """Prefixes of the a_star chain are all almost symmetric exactly when
    their types follow the alternating mirror formulas."""
    res = CheckResult("theorem_1_4", f"semigroups g<={max_g}, all k < L(S)")
    for S in _semigroups_upto_genus(max_g):
        g = S.genus
        L = big_L(S)
        for k in range(L):
            res.cases += 1
            lhs = True
            X: NumericalSet = S
            for j in range(k + 1):
                if X.is_naturals or not is_almost_symmetric(X):
                    lhs = False
                    break
                if j < k:
                    X = a_star(X)
            rhs = True
            X = S
            for j in range(k + 1):
                if X.is_naturals:
                    rhs = False
                    break
                if j % 2 == 0:
                    i = j // 2
                    want = 2 * g - m_index(S, i) - f_index(S, i + 1)
                else:
                    i = (j - 1) // 2
                    want = f_index(S, i + 1) - 2 * g + m_index(S, i + 1)
                if type_of(X) != want:
                    rhs = False
                    break
                X = a_star(X)
            if lhs != rhs:
                res.fail(S, f"k={k}: all-almost-symmetric={lhs} but formulas={rhs}")
    return res


def check_numerical_set_theorems(max_F_set: int) -> CheckResult:
    """Every identity about t_set chains of arbitrary numerical sets."""
    res = CheckResult("numerical_set_theorems", f"numerical sets F<={max_F_set}")
    for H in _numerical_sets_upto(max_F_set):
        res.cases += 1
        F, g, m, _n = profile(H)
        A = associated(H)
        gA = A.genus
        pf = pseudo_frobenius(H)
        t = len(pf)
        if not set(pf) <= set(pseudo_frobenius(A)):
            res.fail(H, "PF(H) is not contained in PF(A(H))")
        chain = t_chain(H)
        L = big_L(H)
        if len(chain) != L + 1 or any(X.is_naturals for X in chain[:-1]):
            res.fail(H, f"chain length {len(chain) - 1} != L = {L}")
            continue
        if big_L(chain[1]) != L - 1:
            res.fail(H, "L did not drop by one under t_set")
        T = chain[1]
        if T.frobenius != F - m or T.genus != F - g:
            res.fail(H, "F or genus of the t_set off the F-m / F-g values")
        astar_H = a_star(H)
        if associated(T) != astar_H:
            res.fail(H, "associated(t_set(H)) != a_star(H)")
        pf_mask = 0
        for p in pf:
            pf_mask |= 1 << p
        if astar_H.gap_mask != A.gap_mask & ~pf_mask:
            res.fail(H, "a_star(H) is not the disjoint union of A(H) and PF(H)")
        bound = g + gA - F
        if t > bound or (t == bound) != is_closed(T):
            res.fail(H, f"type bound t <= g + g(A) - F broken or equality misclassified")
        types = [type_of(X) for X in chain[:-1]]
        if sum(types) != gA:
            res.fail(H, f"chain type sum {sum(types)} != g(A(H)) = {gA}")
        running = 0
        for kk in range(L):
            running += types[kk]
            if running != gA - associated(chain[kk + 1]).genus:
                res.fail(H, f"partial chain sum at k={kk} is off")
                break
        if m != F + 1:
            bound2 = gA - g + m
            two = types[0] + types[1]
            if two > bound2 or (two == bound2) != is_closed(chain[2]):
                res.fail(H, "second-order type bound broken or equality misclassified")
            width = F - m
            mem2 = (H.member_mask() | (1 << F)) >> m
            shifted = NumericalSet.from_gap_mask(~mem2 & (((1 << (width + 1)) - 1) & ~1))
            if chain[2] != shifted:
                res.fail(H, "double t_set differs from the shift description")
        for i in range(0, L // 2 + 1):
            if shifted_t_power(H, i) != chain[2 * i]:
                res.fail(H, f"shifted power 2i={2 * i} differs from the chain")
                break
        bmask = 0
        for x in b_set(A):
            bmask |= 1 << x
        if H.gap_mask & ~A.gap_mask:
            res.fail(H, "associated semigroup is not contained in H")
        if (A.gap_mask & ~bmask) & ~H.gap_mask:
            res.fail(H, "H is not contained in A(H) union B(A(H))")
        if g < F - gA + 1:
            res.fail(H, "genus lower bound F - g(A) + 1 broken")
        # ordinarization identities, odd steps: A(T^(2i+1)(H)) = a_star(O^i(H))
        X: NumericalSet | None = H
        i = 0
        while 2 * i + 1 <= L:
            if X is None:
                res.skipped += 1
            else:
                if associated(chain[2 * i + 1]) != a_star(X):
                    res.fail(H, f"odd ordinarization identity broken at i={i}")
                    break
            X = ordinarization(X) if X is not None and not _ordinary_or_naturals(X) else None
            i += 1
        # even steps: A(T^(2i)(H)) = a_star(O^(i-1)(H + F))
        Y: NumericalSet | None = NumericalSet.from_gap_mask(H.gap_mask ^ (1 << F))
        i = 1
        while 2 * i <= L:
            if Y is None or Y.is_naturals:
                res.skipped += 1
            else:
                if associated(chain[2 * i]) != a_star(Y):
                    res.fail(H, f"even ordinarization identity broken at i={i}")
                    break
            if Y is not None and not _ordinary_or_naturals(Y):
                Y = ordinarization(Y)
            else:
                Y = None
            i += 1
        if is_closed(H):
            S = as_semigroup(H)
            X = S
            i = 0
            while 2 * i + 1 <= L and X is not None:
                tO = type_of(X)
                ssum = sum(types[: 2 * i + 1])
                bound3 = 2 * g - f_index(H, i + 1)
                if tO != ssum or ssum > bound3:
                    res.fail(H, f"ordinarization type sum broken at i={i}")
                    break
                closedT = is_closed(chain[2 * i + 1])
                if (ssum == bound3) != closedT or closedT != is_almost_symmetric(as_semigroup(X)):
                    res.fail(H, f"ordinarization equality cases misclassified at i={i}")
                    break
                X = ordinarization(X) if not _ordinary_or_naturals(X) else None
                i += 1
    return res


@dataclass(frozen=True)
class SweepBounds:
    """Bounds for one full harness run."""

    max_genus: int = 12
    max_set_frobenius: int = 12
    bijection_alphas: tuple[int, ...] = (1, 2, 3, 4)
    bijection_max_frobenius: int = 40
    genus_alphas: tuple[int, ...] = (0, 1, 2, 3)
    genus_bijection_max: int = 28
    t1_betas: tuple[int, ...] = (1, 2, 3, 4)
    t1_max_frobenius: int = 40

    @classmethod
    def fast(cls) -> "SweepBounds":
        return cls(
            max_genus=10,
            max_set_frobenius=10,
            bijection_alphas=(1, 2, 3),
            bijection_max_frobenius=22,
            genus_alphas=(0, 1, 2),
            genus_bijection_max=16,
            t1_betas=(1, 2),
            t1_max_frobenius=22,
        )

    @classmethod
    def full(cls) -> "SweepBounds":
        return cls()


def run_all(bounds: SweepBounds | None = None) -> list[CheckResult]:
    """Run every check at the given bounds, timing each."""
    b = bounds or SweepBounds()
    jobs = [
        lambda: check_type_bounds(b.max_genus),
        lambda: check_as_equivalence(b.max_genus),
        lambda: check_chain_theorems(b.max_genus),
        lambda: check_staircase(b.max_genus),
        lambda: check_theorem_1_4(b.max_genus),
        lambda: check_numerical_set_theorems(b.max_set_frobenius),
    ]
    for alpha in b.bijection_alphas:
        jobs.append(lambda a=alpha: check_bijection_frobenius(
            a, range(max(4 * a - 5, 1), b.bijection_max_frobenius + 1)))
    for alpha in b.genus_alphas:
        jobs.append(lambda a=alpha: check_bijection_genus(
            a, range(max(3 * a - 1, 1), b.genus_bijection_max + 1)))
    for beta in b.t1_betas:
        jobs.append(lambda bb=beta: check_corollary_T1(
            bb, range(8 * bb - 5, b.t1_max_frobenius + 1)))
    results = []
    for job in jobs:
        start = time.perf_counter()
        result = job()
        result.millis = (time.perf_counter() - start) * 1000.0
        results.append(result)
    return results
