"""Numerical sets and numerical semigroups as immutable gap bit masks.

A numerical set contains 0 and misses only finitely many naturals (its
gaps).  It is stored as the pair ``(frobenius, gap_mask)``: bit ``x`` of
``gap_mask`` is set exactly when ``x`` is a gap, ``frobenius`` is the
largest gap, and ``frobenius == -1`` is the sentinel for the gap-free set
of all naturals.  Values are immutable and hashable, so enumerations can
deduplicate them and workers can share them without synchronization.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

__all__ = [
    "CapacityError",
    "NumericalSet",
    "NumericalSemigroup",
    "NATURALS",
    "bit_indices",
    "capacity",
    "set_capacity",
    "from_gaps",
    "from_generators",
    "as_semigroup",
    "is_closed",
    "profile",
    "m_index",
    "f_index",
    "minimal_generators",
    "parse_set_spec",
    "format_set_spec",
]

_capacity = 512


class CapacityError(ValueError):
    """A Frobenius number exceeds the configured bit-vector capacity."""


def capacity() -> int:
    """Largest Frobenius number the constructors currently accept."""
    return _capacity


def set_capacity(limit: int) -> None:
    """Change the largest Frobenius number the constructors accept."""
    global _capacity
    if limit < 1:
        raise ValueError("capacity must be at least 1")
    _capacity = limit


def bit_indices(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _closed(frobenius: int, gap_mask: int) -> bool:
    # Sums above the Frobenius number are members automatically, so only
    # pairs of nonzero members x <= y with x + y <= F need checking.
    if frobenius <= 1:
        return True
    full = (1 << (frobenius + 1)) - 1
    nonzero = ~gap_mask & full & ~1
    rest = nonzero
    while rest:
        low = rest & -rest
        x = low.bit_length() - 1
        if 2 * x > frobenius:
            break
        if (nonzero << x) & full & gap_mask:
            return False
        rest ^= low
    return True


class NumericalSet:
    """Cofinite subset of the naturals containing 0."""

    __slots__ = ("frobenius", "gap_mask")

    def __init__(self, frobenius: int, gap_mask: int) -> None:
        if frobenius == -1:
            if gap_mask:
                raise ValueError("frobenius -1 means the set has no gaps")
        elif frobenius < 1:
            raise ValueError("frobenius must be -1 or at least 1")
        elif frobenius > _capacity:
            raise CapacityError(
                f"frobenius {frobenius} exceeds capacity {_capacity}"
                " (raise it with set_capacity)"
            )
        elif gap_mask & 1:
            raise ValueError("0 is always a member; bit 0 must be clear")
        elif gap_mask >> frobenius != 1:
            raise ValueError("the largest gap must sit at the frobenius index")
        self.frobenius = frobenius
        self.gap_mask = gap_mask

    @classmethod
    def from_gap_mask(cls, gap_mask: int) -> "NumericalSet":
        """Canonical instance for a raw gap mask (0 gives the naturals)."""
        if gap_mask == 0:
            return cls(-1, 0)
        return cls(gap_mask.bit_length() - 1, gap_mask)

    @property
    def is_naturals(self) -> bool:
        return self.frobenius == -1

    @property
    def genus(self) -> int:
        """Number of gaps."""
        return self.gap_mask.bit_count()

    @property
    def multiplicity(self) -> int:
        """Smallest positive member (F + 1 when the set is ordinary)."""
        if self.frobenius == -1:
            return 1
        positive = self.member_mask() & ~1
        if positive:
            return (positive & -positive).bit_length() - 1
        return self.frobenius + 1

    def member_mask(self) -> int:
        """Membership bits over the window [0, frobenius]."""
        return ~self.gap_mask & ((1 << (self.frobenius + 1)) - 1)

    def gaps(self) -> tuple[int, ...]:
        return tuple(bit_indices(self.gap_mask))

    def members_upto(self, limit: int) -> list[int]:
        """All members x with 0 <= x <= limit."""
        out = [x for x in bit_indices(self.member_mask()) if x <= limit]
        out.extend(range(max(self.frobenius + 1, 1), limit + 1))
        if self.frobenius == -1 and limit >= 0:
            out.insert(0, 0)
        return out

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return not (self.gap_mask >> x) & 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSet):
            return NotImplemented
        return self.frobenius == other.frobenius and self.gap_mask == other.gap_mask

    def __hash__(self) -> int:
        return hash((self.frobenius, self.gap_mask))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(gaps={self.gaps()!r})"

    def __str__(self) -> str:
        if self.is_naturals:
            return "{0->}"
        inside = ", ".join(str(x) for x in bit_indices(self.member_mask()))
        return "{%s, %d->}" % (inside, self.frobenius + 1)


class NumericalSemigroup(NumericalSet):
    """Numerical set that is closed under addition."""

    __slots__ = ("_min_gens",)

    def __init__(self, frobenius: int, gap_mask: int) -> None:
        super().__init__(frobenius, gap_mask)
        if not _closed(frobenius, gap_mask):
            raise ValueError("set is not closed under addition")
        self._min_gens = None

    @classmethod
    def _trusted(cls, frobenius: int, gap_mask: int) -> "NumericalSemigroup":
        # Fast path for enumeration: the caller guarantees closure.
        s = object.__new__(cls)
        s.frobenius = frobenius
        s.gap_mask = gap_mask
        s._min_gens = None
        return s


NATURALS = NumericalSemigroup(-1, 0)


def from_gaps(gaps: Iterable[int]) -> NumericalSet:
    """Numerical set with exactly the given gaps."""
    mask = 0
    for x in gaps:
        if not isinstance(x, int) or x < 1:
            raise ValueError(f"gaps must be positive integers, got {x!r}")
        if x > _capacity:
            raise CapacityError(f"gap {x} exceeds capacity {_capacity}")
        mask |= 1 << x
    return NumericalSet.from_gap_mask(mask)


def _run_start(mask: int, run_len: int) -> int:
    # Lowest index at which run_len consecutive bits are set, or -1.
    have = 1
    while have < run_len:
        step = min(have, run_len - have)
        mask &= mask >> step
        have += step
    if mask == 0:
        return -1
    return (mask & -mask).bit_length() - 1


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Smallest numerical semigroup containing the given generators."""
    glist = sorted(set(gens))
    if not glist:
        raise ValueError("at least one generator is required")
    for x in glist:
        if not isinstance(x, int) or x < 1:
            raise ValueError(f"generators must be positive integers, got {x!r}")
    if math.gcd(*glist) != 1:
        raise ValueError("generators must have gcd 1, otherwise the complement is infinite")
    if glist[0] == 1:
        return NATURALS
    m = glist[0]
    bound = m * glist[-1]
    while True:
        window = (1 << (bound + 1)) - 1
        reach = 1
        changed = True
        while changed:
            changed = False
            for g in glist:
                while True:
                    grown = reach | ((reach << g) & window)
                    if grown == reach:
                        break
                    reach = grown
                    changed = True
        start = _run_start(reach, m)
        if start != -1 and start + m - 1 <= bound:
            break
        bound *= 2
    gap_mask = ~reach & ((1 << start) - 1)
    return NumericalSemigroup.from_gap_mask(gap_mask)


def as_semigroup(H: NumericalSet) -> NumericalSemigroup:
    """View ``H`` as a semigroup, validating closure."""
    if isinstance(H, NumericalSemigroup):
        return H
    return NumericalSemigroup(H.frobenius, H.gap_mask)


def is_closed(H: NumericalSet) -> bool:
    """True when ``H`` is closed under addition (i.e. is a semigroup)."""
    if isinstance(H, NumericalSemigroup):
        return True
    return _closed(H.frobenius, H.gap_mask)


def profile(H: NumericalSet) -> tuple[int, int, int, int]:
    """The quadruple (F, g, m, n) with n = F + 1 - g."""
    F = H.frobenius
    g = H.genus
    return (F, g, H.multiplicity, F + 1 - g)


def m_index(H: NumericalSet, i: int) -> int:
    """The i-th positive member of ``H``; m_0 = 0."""
    if i < 0:
        raise ValueError("member index must be >= 0")
    if i == 0:
        return 0
    if H.is_naturals:
        return i
    seen = 0
    for x in bit_indices(H.member_mask() & ~1):
        seen += 1
        if seen == i:
            return x
    return H.frobenius + (i - seen)


def f_index(H: NumericalSet, i: int) -> int:
    """The i-th largest gap of ``H`` (1 <= i <= genus)."""
    g = H.genus
    if not 1 <= i <= g:
        raise ValueError(f"gap index {i} out of range 1..{g}")
    gaps = H.gaps()
    return gaps[g - i]


def minimal_generators(S: NumericalSet) -> tuple[int, ...]:
    """Members of the semigroup S that are not sums of two nonzero members."""
    S = as_semigroup(S)
    if S._min_gens is not None:
        return S._min_gens
    if S.is_naturals:
        gens: tuple[int, ...] = (1,)
    else:
        F = S.frobenius
        m = S.multiplicity
        # Members above F + m are m plus another member, never minimal.
        hi = F + m
        window = (1 << (hi + 1)) - 1
        members = S.member_mask() | (window & ~((1 << (F + 1)) - 1))
        nonzero = members & ~1
        sums = 0
        rest = nonzero
        while rest:
            low = rest & -rest
            x = low.bit_length() - 1
            if 2 * x > hi:
                break
            sums |= nonzero << x
            rest ^= low
        gens = tuple(bit_indices(nonzero & ~sums & window))
    S._min_gens = gens
    return gens


def parse_set_spec(text: str) -> NumericalSet:
    """Parse the ``gaps=1,2,4`` / ``gens=3,5`` text encoding.

    A ``gaps=`` spec that happens to be closed under addition is returned
    as a :class:`NumericalSemigroup`.
    """
    s = text.strip()
    key, sep, body = s.partition("=")
    key = key.strip()
    if not sep or key not in ("gaps", "gens"):
        raise ValueError(
            f"set spec must look like 'gaps=1,2,4' or 'gens=3,5', got {text!r}"
        )
    values = []
    if body.strip():
        for pos, token in enumerate(body.split(","), 1):
            tok = token.strip()
            try:
                values.append(int(tok))
            except ValueError:
                raise ValueError(
                    f"bad integer {tok!r} at position {pos} of the {key}= list"
                ) from None
    if key == "gens":
        return from_generators(values)
    H = from_gaps(values)
    if _closed(H.frobenius, H.gap_mask):
        return NumericalSemigroup._trusted(H.frobenius, H.gap_mask)
    return H


def format_set_spec(H: NumericalSet) -> str:
    """Inverse of :func:`parse_set_spec`, always in the gaps= form."""
    return "gaps=" + ",".join(str(x) for x in H.gaps())
