"""Transforms on numerical sets and the predicates derived from them.

Everything here is a pure function of the gap mask.  The central player
is the reflection transform ``t_set``: it sends H with largest gap F to
the set of all x whose mirror image F - x falls outside H (or equals 0).
Iterating it walks any numerical set down to the full set of naturals.
"""

from __future__ import annotations

from functools import cached_property

from .core import (
    NATURALS,
    NumericalSemigroup,
    NumericalSet,
    as_semigroup,
    bit_indices,
    f_index,
    is_closed,
    m_index,
    minimal_generators,
    profile,
)

__all__ = [
    "associated",
    "a_star",
    "pseudo_frobenius",
    "type_of",
    "t_set",
    "semigroup_from_t_set",
    "b_set",
    "adjoin_frobenius",
    "ordinarization",
    "small_l",
    "big_L",
    "t_chain",
    "shifted_t_power",
    "is_ordinary",
    "is_symmetric",
    "is_almost_symmetric",
    "is_max_ed",
    "is_staircase",
    "TransformReport",
]


def _require_gaps(H: NumericalSet, op: str) -> None:
    if H.is_naturals:
        raise ValueError(f"{op} is not defined for the full set of naturals")


def _reversed_window(mask: int, frobenius: int) -> int:
    # Bit x of the result is bit (frobenius - x) of mask.
    return int(format(mask, f"0{frobenius + 1}b")[::-1], 2)


def associated(H: NumericalSet) -> NumericalSemigroup:
    """Largest semigroup inside H acting on it: {x | x + H is in H}."""
    if H.is_naturals:
        return NATURALS
    F = H.frobenius
    full = (1 << (F + 1)) - 1
    members = H.member_mask()
    bad = 0
    for x in bit_indices(members):
        if (members << x) & full & ~members:
            bad |= 1 << x
    return NumericalSemigroup(F, H.gap_mask | bad)


def a_star(H: NumericalSet) -> NumericalSemigroup:
    """The semigroup of all a with a + (H minus 0) contained in H."""
    _require_gaps(H, "a_star")
    F = H.frobenius
    full = (1 << (F + 1)) - 1
    members = H.member_mask()
    nonzero = members & ~1
    bad = 0
    for a in range(1, F + 1):
        if (nonzero << a) & full & ~members:
            bad |= 1 << a
    return NumericalSemigroup.from_gap_mask(bad)


def _pf_bits(frobenius: int, member_mask: int) -> int:
    # Bit mask of the pseudo-Frobenius numbers of the set with this window.
    full = (1 << (frobenius + 1)) - 1
    nonzero = member_mask & ~1
    gaps = ~member_mask & full
    out = 0
    for a in bit_indices(gaps):
        if not ((nonzero << a) & full & gaps):
            out |= 1 << a
    return out


def pseudo_frobenius(H: NumericalSet) -> tuple[int, ...]:
    """Gaps a of H with a + (H minus 0) contained in H."""
    _require_gaps(H, "pseudo_frobenius")
    return tuple(bit_indices(_pf_bits(H.frobenius, H.member_mask())))


def type_of(H: NumericalSet) -> int:
    """Number of pseudo-Frobenius numbers of H."""
    _require_gaps(H, "type_of")
    return _pf_bits(H.frobenius, H.member_mask()).bit_count()


def t_set(H: NumericalSet) -> NumericalSet:
    """Reflection transform: {x | F - x is a gap, or x >= F}."""
    _require_gaps(H, "t_set")
    F = H.frobenius
    # x in [1, F-1] is a gap of the result exactly when F - x is a member.
    rev = _reversed_window(H.member_mask(), F)
    return NumericalSet.from_gap_mask(rev & ((1 << F) - 2))


def semigroup_from_t_set(T: NumericalSet, frobenius: int) -> NumericalSemigroup:
    """The unique semigroup S with the given Frobenius number and t_set(S) = T.

    Requires frobenius > 2 * F(T); the gaps of S are the mirror images
    frobenius - y of the members y of T below frobenius.
    """
    if frobenius <= 2 * T.frobenius:
        raise ValueError(
            "need frobenius > twice the Frobenius number of the target set"
        )
    mask = 0
    for y in range(frobenius):
        if y in T:
            mask |= 1 << (frobenius - y)
    return NumericalSemigroup(frobenius, mask)


def b_set(S: NumericalSet) -> tuple[int, ...]:
    """Gaps x of the semigroup S whose mirror F - x is also a gap."""
    S = as_semigroup(S)
    _require_gaps(S, "b_set")
    rev = _reversed_window(S.gap_mask, S.frobenius)
    return tuple(bit_indices(S.gap_mask & rev))


def adjoin_frobenius(S: NumericalSet) -> NumericalSemigroup:
    """The parent semigroup S with its Frobenius number filled in."""
    S = as_semigroup(S)
    _require_gaps(S, "adjoin_frobenius")
    return NumericalSemigroup.from_gap_mask(S.gap_mask ^ (1 << S.frobenius))


def _ordinary_or_naturals(H: NumericalSet) -> bool:
    return H.is_naturals or H.multiplicity == H.frobenius + 1


def ordinarization(H: NumericalSet) -> NumericalSet:
    """Fill in the largest gap and remove the smallest positive member."""
    if _ordinary_or_naturals(H):
        raise ValueError("ordinarization is defined only for non-ordinary sets")
    mask = (H.gap_mask ^ (1 << H.frobenius)) | (1 << H.multiplicity)
    return NumericalSet.from_gap_mask(mask)


def small_l(H: NumericalSet) -> int:
    """Number of members of H in [1, genus]."""
    g = H.genus
    window = ((1 << (g + 1)) - 1) & ~1
    return (H.member_mask() & window).bit_count()


def big_L(H: NumericalSet) -> int:
    """How many times t_set applies before reaching the naturals."""
    doubled = 2 * small_l(H)
    return doubled if H.genus in H else doubled + 1


def t_chain(H: NumericalSet) -> list[NumericalSet]:
    """The iterated reflections [H, T(H), ..., naturals]."""
    chain = [H]
    X = H
    while not X.is_naturals:
        X = t_set(X)
        chain.append(X)
    return chain


def shifted_t_power(H: NumericalSet, i: int) -> NumericalSet:
    """The 2i-th iterated reflection, computed by one shift instead.

    Equals t_chain(H)[2*i]: fill in the i largest gaps, then slide the set
    down by its i-th positive member.
    """
    if i < 0:
        raise ValueError("power index must be >= 0")
    L = big_L(H)
    if 2 * i > L:
        raise ValueError(f"2*{i} exceeds the chain length {L}")
    if i == 0:
        return H
    F = H.frobenius
    mi = m_index(H, i)
    lifted = H.member_mask()
    for j in range(1, i + 1):
        lifted |= 1 << f_index(H, j)
    width = F - mi
    window = ((1 << (width + 1)) - 1) & ~1
    return NumericalSet.from_gap_mask(~(lifted >> mi) & window)


def is_ordinary(H: NumericalSet) -> bool:
    """True when H is {0, F+1, F+2, ...}."""
    _require_gaps(H, "is_ordinary")
    return H.multiplicity == H.frobenius + 1


def is_symmetric(S: NumericalSet) -> bool:
    """True when the gaps of the semigroup S fill exactly half of [0, F]."""
    S = as_semigroup(S)
    _require_gaps(S, "is_symmetric")
    return 2 * S.genus == S.frobenius + 1


def is_almost_symmetric(S: NumericalSet) -> bool:
    """True when the type of the semigroup S attains its upper bound 2g - F."""
    S = as_semigroup(S)
    _require_gaps(S, "is_almost_symmetric")
    return type_of(S) == 2 * S.genus - S.frobenius


def is_max_ed(S: NumericalSet) -> bool:
    """True when the semigroup S has as many minimal generators as its multiplicity."""
    S = as_semigroup(S)
    _require_gaps(S, "is_max_ed")
    return len(minimal_generators(S)) == S.multiplicity


def is_staircase(S: NumericalSet) -> bool:
    """True when S is {0, m, 2m, ..., nm, nm+1, ...} for some m, n >= 1."""
    S = as_semigroup(S)
    _require_gaps(S, "is_staircase")
    m = S.multiplicity
    if (S.frobenius + 1) % m:
        return False
    expected = 0
    for x in range(0, S.frobenius + 1, m):
        expected |= 1 << x
    return S.member_mask() == expected


class TransformReport:
    """Lazily computed bundle of every derived quantity for one set.

    Fields that need a gap (pf, t, tset, ...) are None when the source is
    the full set of naturals; semigroup-only fields (bset, mingens, the
    predicate flags) are None when the source is not closed.
    """

    def __init__(self, source: NumericalSet) -> None:
        self.source = source

    @cached_property
    def closed(self) -> bool:
        return is_closed(self.source)

    @cached_property
    def profile(self) -> tuple[int, int, int, int]:
        return profile(self.source)

    @cached_property
    def pf(self) -> tuple[int, ...] | None:
        if self.source.is_naturals:
            return None
        return pseudo_frobenius(self.source)

    @cached_property
    def t(self) -> int | None:
        return None if self.pf is None else len(self.pf)

    @cached_property
    def tset(self) -> NumericalSet | None:
        if self.source.is_naturals:
            return None
        return t_set(self.source)

    @cached_property
    def assoc(self) -> NumericalSemigroup:
        return associated(self.source)

    @cached_property
    def astar(self) -> NumericalSemigroup | None:
        if self.source.is_naturals:
            return None
        return a_star(self.source)

    @cached_property
    def bset(self) -> tuple[int, ...] | None:
        if self.source.is_naturals or not self.closed:
            return None
        return b_set(self.source)

    @cached_property
    def mingens(self) -> tuple[int, ...] | None:
        if not self.closed:
            return None
        return minimal_generators(as_semigroup(self.source))

    @cached_property
    def l(self) -> int:
        return small_l(self.source)

    @cached_property
    def chain_length(self) -> int:
        return big_L(self.source)

    @cached_property
    def chain(self) -> list[NumericalSet]:
        return t_chain(self.source)

    @cached_property
    def flags(self) -> dict[str, bool | None]:
        if self.source.is_naturals:
            return {name: None for name in
                    ("ordinary", "symmetric", "almost_symmetric", "max_ed", "staircase")}
        out: dict[str, bool | None] = {"ordinary": is_ordinary(self.source)}
        if self.closed:
            out["symmetric"] = is_symmetric(self.source)
            out["almost_symmetric"] = is_almost_symmetric(self.source)
            out["max_ed"] = is_max_ed(self.source)
            out["staircase"] = is_staircase(self.source)
        else:
            out.update(symmetric=None, almost_symmetric=None,
                       max_ed=None, staircase=None)
        return out
