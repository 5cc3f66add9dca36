"""Explicit families of semigroups with prescribed Frobenius number.

Two constructions, both parameterized by a free subset A of an interval
of candidates, which is why the family sizes grow like 2**|candidates|:

* an almost-symmetric family: pick A inside (F/3, floor((F-1)/2) - k)
  and fill in the mirror-closed upper block;
* a general family: pick a cut ratio beta strictly between 2/5 and 1/2
  (an exact rational whose products beta*F and 2*beta*F must miss the
  integers) and A inside (beta*F, F/2); the type is then k+1 for odd F
  and k+2 for even F.

All interval endpoints are compared exactly, never through floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import NumericalSemigroup
from .transforms import pseudo_frobenius, type_of

__all__ = [
    "FamilySpec",
    "as_family_candidates",
    "family_as_member",
    "family_as_enumerate",
    "general_family_candidates",
    "family_general_member",
    "FamilyCountReport",
    "family_counts",
]


@dataclass(frozen=True)
class FamilySpec:
    """Parameters picking one member of a family."""

    frobenius: int
    k: int = 0
    a_subset: tuple[int, ...] = ()
    beta: Fraction | None = None


def as_family_candidates(F: int, k: int) -> range:
    """Integer points of the open interval (F/3, floor((F-1)/2) - k)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if F <= 6 * k + 6:
        raise ValueError(f"almost-symmetric family needs F > {6 * k + 6} for k={k}")
    return range(F // 3 + 1, (F - 1) // 2 - k)


def family_as_member(spec: FamilySpec) -> NumericalSemigroup:
    """One almost-symmetric family member for a chosen candidate subset."""
    F, k = spec.frobenius, spec.k
    cands = as_family_candidates(F, k)
    chosen = set(spec.a_subset)
    if not chosen <= set(cands):
        raise ValueError(
            f"a_subset must lie in the open interval "
            f"({F}/3, {(F - 1) // 2 - k}); candidates are {list(cands)}"
        )
    members = {0} | chosen
    low = (F + 2) // 2 + k  # ceil((F+1)/2) + k
    for x in range(low + 1, F):
        if F - x not in chosen:
            members.add(x)
    mask = 0
    for x in range(1, F + 1):
        if x not in members:
            mask |= 1 << x
    return NumericalSemigroup(F, mask)


def family_as_enumerate(F: int, k: int) -> list[NumericalSemigroup]:
    """All 2**|candidates| members of the almost-symmetric family."""
    cands = list(as_family_candidates(F, k))
    out = []
    for bits in range(1 << len(cands)):
        subset = tuple(c for j, c in enumerate(cands) if bits >> j & 1)
        out.append(family_as_member(FamilySpec(F, k, subset)))
    return out


def _validate_beta(F: int, k: int, beta: Fraction) -> None:
    if not Fraction(2, 5) < beta < Fraction(1, 2):
        raise ValueError("beta must lie strictly between 2/5 and 1/2")
    if (beta * F).denominator == 1:
        raise ValueError(f"beta*F = {beta * F} must not be an integer")
    if (2 * beta * F).denominator == 1:
        raise ValueError(f"2*beta*F = {2 * beta * F} must not be an integer")
    if F * (5 * beta - 2) <= k + 1:
        raise ValueError(f"general family needs F > (k+1)/(5*beta-2) = {Fraction(k + 1) / (5 * beta - 2)}")
    if k > 0 and F * (1 - 2 * beta) <= k:
        raise ValueError(f"general family needs F > k/(1-2*beta) = {Fraction(k) / (1 - 2 * beta)}")


def general_family_candidates(F: int, beta: Fraction) -> range:
    """Integer points of the open interval (beta*F, F/2)."""
    if (beta * F).denominator == 1:
        raise ValueError(f"beta*F = {beta * F} must not be an integer")
    return range(math.floor(beta * F) + 1, (F + 1) // 2)


def family_general_member(spec: FamilySpec) -> NumericalSemigroup:
    """One general-family member; its type is k+1 (odd F) or k+2 (even F)."""
    F, k = spec.frobenius, spec.k
    if spec.beta is None:
        raise ValueError("the general family needs a beta parameter")
    if k < 0:
        raise ValueError("k must be >= 0")
    beta = Fraction(spec.beta)
    _validate_beta(F, k, beta)
    cands = general_family_candidates(F, beta)
    chosen = set(spec.a_subset)
    if not chosen <= set(cands):
        raise ValueError(
            f"a_subset must lie in the open interval ({beta}*{F}, {F}/2);"
            f" candidates are {list(cands)}"
        )
    bF = beta * F
    members = {0} | chosen
    for x in range(F // 2 + 1, F):
        if Fraction(x) >= F - bF:
            break
        if F - x not in chosen:
            members.add(x)
    members.update(range(math.ceil(F - bF), math.floor(2 * bF) - k + 1))
    members.update(range(math.ceil(2 * bF), F))
    mask = 0
    for x in range(1, F + 1):
        if x not in members:
            mask |= 1 << x
    return NumericalSemigroup(F, mask)


@dataclass
class FamilyCountReport:
    """Family sizes next to the matching exact counts, where affordable."""

    frobenius: int
    k: int
    as_candidates: tuple[int, ...] = ()
    as_count: int = 0
    as_type: int | None = None
    as_nominal_type: int = 0
    general_candidates: tuple[int, ...] | None = None
    general_count: int | None = None
    general_type: int | None = None
    exact_t1: int | None = None
    exact_t: int | None = None
    notes: list[str] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [
            f"F={self.frobenius} k={self.k}",
            f"almost-symmetric family: candidates={list(self.as_candidates)}"
            f" members={self.as_count} type={self.as_type}",
        ]
        if self.general_count is not None:
            out.append(
                f"general family: candidates={list(self.general_candidates)}"
                f" members={self.general_count} type={self.general_type}"
            )
        if self.exact_t1 is not None:
            out.append(f"exact almost-symmetric count at this (F, type): {self.exact_t1}")
        if self.exact_t is not None:
            out.append(f"exact count at this (F, type): {self.exact_t}")
        out.extend("note: " + n for n in self.notes)
        return out


def family_counts(F: int, k: int, beta: Fraction | None = None,
                  exact_limit: int = 24) -> FamilyCountReport:
    """Family sizes plus, for small F, the exact counts they lower-bound.

    Discrepancies against the nominal 2**(F/6 - type/2) growth figure are
    reported as notes, never asserted.
    """
    from .enumeration import enumerate_by_frobenius
    from .transforms import is_almost_symmetric

    members = family_as_enumerate(F, k)
    types = {type_of(S) for S in members}
    nominal = 2 * k + 1 if F % 2 else 2 * k + 2
    report = FamilyCountReport(
        frobenius=F,
        k=k,
        as_candidates=tuple(as_family_candidates(F, k)),
        as_count=len(members),
        as_type=types.pop() if len(types) == 1 else None,
        as_nominal_type=nominal,
    )
    if report.as_type is None:
        report.notes.append(f"family type is not constant: {sorted(types)}")
    elif report.as_type != nominal:
        report.notes.append(
            f"observed type {report.as_type} differs from the nominal"
            f" figure {nominal}"
        )
    bound = 2.0 ** (F / 6 - nominal / 2)
    if report.as_count < bound:
        report.notes.append(
            f"family size {report.as_count} is below the nominal"
            f" 2^(F/6 - {nominal}/2) = {bound:.1f} growth figure"
        )
    if beta is not None:
        gen_members = []
        cands = list(general_family_candidates(F, Fraction(beta)))
        for bits in range(1 << len(cands)):
            subset = tuple(c for j, c in enumerate(cands) if bits >> j & 1)
            gen_members.append(family_general_member(FamilySpec(F, k, subset, Fraction(beta))))
        gen_types = {type_of(S) for S in gen_members}
        report.general_candidates = tuple(cands)
        report.general_count = len(gen_members)
        report.general_type = gen_types.pop() if len(gen_types) == 1 else None
        if report.general_type is None:
            report.notes.append(f"general family type is not constant: {sorted(gen_types)}")
    if F <= exact_limit:
        by_type: dict[int, int] = {}
        as_by_type: dict[int, int] = {}

        def tally(S):
            t = type_of(S)
            by_type[t] = by_type.get(t, 0) + 1
            if is_almost_symmetric(S):
                as_by_type[t] = as_by_type.get(t, 0) + 1

        enumerate_by_frobenius(F, tally)
        if report.as_type is not None:
            report.exact_t1 = as_by_type.get(report.as_type, 0)
        if report.general_type is not None:
            report.exact_t = by_type.get(report.general_type, 0)
    return report
