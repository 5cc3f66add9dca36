import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import naive
from conftest import all_gap_sets
from numsgps import (
    NATURALS,
    CapacityError,
    NumericalSemigroup,
    NumericalSet,
    as_semigroup,
    f_index,
    format_set_spec,
    from_gaps,
    from_generators,
    is_closed,
    m_index,
    minimal_generators,
    parse_set_spec,
    profile,
)
from numsgps import core
from numsgps.enumeration import children


gap_sets = st.frozensets(st.integers(min_value=1, max_value=80), max_size=25)


def test_from_gaps_empty_is_naturals():
    H = from_gaps([])
    assert H.is_naturals
    assert H == NATURALS
    assert profile(H) == (-1, 0, 1, 0)


def test_from_gaps_membership():
    H = from_gaps([1, 2, 4, 7])
    assert H.frobenius == 7
    assert H.genus == 4
    for x in (0, 3, 5, 6, 8, 9, 100):
        assert x in H
    for x in (1, 2, 4, 7, -1, -5):
        assert x not in H


def test_from_gaps_gives_the_three_generator_semigroup():
    H = from_gaps([1, 2, 3, 4, 6, 8, 11, 13])
    assert is_closed(H)
    assert H == from_generators([5, 7, 9])


def test_from_gaps_rejects_bad_input():
    with pytest.raises(ValueError):
        from_gaps([0, 3])
    with pytest.raises(ValueError):
        from_gaps([-2])
    with pytest.raises(ValueError):
        from_gaps([2.5])


def test_capacity_guard():
    with pytest.raises(CapacityError):
        from_gaps([core.capacity() + 1])
    old = core.capacity()
    try:
        core.set_capacity(1024)
        H = from_gaps([old + 1])
        assert H.frobenius == old + 1
    finally:
        core.set_capacity(old)


def test_direct_constructor_validation():
    with pytest.raises(ValueError):
        NumericalSet(-1, 2)
    with pytest.raises(ValueError):
        NumericalSet(3, 0b0101)  # bit 0 set
    with pytest.raises(ValueError):
        NumericalSet(3, 0b0100)  # largest gap below the frobenius index
    with pytest.raises(ValueError):
        NumericalSemigroup(4, 0b10100)  # {0,1,3,...} is not closed (1+1=2)


def test_from_generators_examples():
    assert from_generators([3, 5]).gaps() == (1, 2, 4, 7)
    assert from_generators([5, 7, 9]).gaps() == (1, 2, 3, 4, 6, 8, 11, 13)
    assert from_generators([1]) == NATURALS
    assert from_generators([2, 7, 9, 13]) == from_generators([2, 7])


def test_from_generators_rejects():
    with pytest.raises(ValueError):
        from_generators([4, 6])
    with pytest.raises(ValueError):
        from_generators([])
    with pytest.raises(ValueError):
        from_generators([0, 3])


@pytest.mark.parametrize(
    "gens", [(2, 3), (3, 5), (5, 7, 9), (4, 9), (6, 10, 15), (11, 13), (7, 8, 9, 10)]
)
def test_from_generators_vs_naive_reachability(gens):
    horizon = 300
    mem = naive.semigroup_members(gens, horizon)
    S = from_generators(list(gens))
    assert S.frobenius < horizon // 2
    assert set(S.gaps()) == {x for x in range(1, horizon) if x not in mem}


def test_is_closed_examples():
    assert is_closed(from_gaps([1, 2, 4, 7]))
    assert not is_closed(from_gaps([1, 3, 4, 6, 8]))
    assert is_closed(NATURALS)


def test_profile_examples():
    assert profile(from_generators([3, 5])) == (7, 4, 3, 4)
    assert profile(from_gaps(range(1, 10))) == (9, 9, 10, 1)
    assert profile(from_generators([5, 7, 9])) == (13, 8, 5, 6)


def test_m_index_examples():
    S = from_generators([5, 7, 9])
    assert m_index(S, 0) == 0
    assert m_index(S, 1) == 5
    assert m_index(S, 2) == 7
    assert [m_index(S, i) for i in range(3, 8)] == [9, 10, 12, 14, 15]
    assert m_index(NATURALS, 3) == 3
    with pytest.raises(ValueError):
        m_index(S, -1)


def test_f_index_examples():
    S = from_generators([5, 7, 9])
    assert f_index(S, 1) == 13
    assert f_index(S, 3) == 8
    assert f_index(from_generators([3, 5]), 4) == 1
    with pytest.raises(ValueError):
        f_index(S, 9)
    with pytest.raises(ValueError):
        f_index(S, 0)


def test_minimal_generators_examples():
    assert minimal_generators(from_generators([5, 7, 9])) == (5, 7, 9)
    assert minimal_generators(as_semigroup(from_gaps([1, 2, 3]))) == (4, 5, 6, 7)
    assert minimal_generators(NATURALS) == (1,)


def test_minimal_generators_vs_naive_exhaustive():
    stack = [(NATURALS, 0)]
    while stack:
        S, d = stack.pop()
        assert set(minimal_generators(S)) == naive.minimal_generators(set(S.gaps()))
        if d < 8:
            stack.extend((c, d + 1) for c in children(S))


def test_generator_round_trip_exhaustive():
    # from_generators(minimal_generators(S)) == S over the whole g <= 12 tree
    stack = [(NATURALS, 0)]
    seen = 0
    while stack:
        S, d = stack.pop()
        seen += 1
        assert from_generators(minimal_generators(S)) == S
        if d < 12:
            stack.extend((c, d + 1) for c in children(S))
    assert seen == 1413


@given(gap_sets)
@settings(max_examples=200)
def test_gap_round_trip(gaps):
    H = from_gaps(gaps)
    assert set(H.gaps()) == set(gaps)
    assert from_gaps(H.gaps()) == H


@given(gap_sets)
@settings(max_examples=200)
def test_profile_consistency(gaps):
    F, g, m, n = profile(from_gaps(gaps))
    assert n + g == F + 1
    assert g == len(gaps)
    if gaps:
        assert m == min(x for x in range(1, F + 2) if x not in gaps)


@given(gap_sets, st.integers(min_value=0, max_value=30))
@settings(max_examples=200)
def test_member_and_gap_indices_monotone(gaps, i):
    H = from_gaps(gaps)
    assert m_index(H, i) < m_index(H, i + 1)
    if 1 <= i < H.genus:
        assert f_index(H, i) > f_index(H, i + 1)


def test_equality_and_hashing():
    a = from_gaps([1, 2, 4, 7])
    b = from_generators([3, 5])
    assert a == b  # set vs semigroup with the same bits
    assert hash(a) == hash(b)
    assert len({a, b}) == 1
    assert a != from_gaps([1, 2, 4])


def test_str_and_repr():
    S = from_generators([5, 7, 9])
    assert str(S) == "{0, 5, 7, 9, 10, 12, 14->}"
    assert str(NATURALS) == "{0->}"
    assert "1, 2, 4, 7" in repr(from_gaps([1, 2, 4, 7]))


def test_members_upto():
    S = from_generators([3, 5])
    assert S.members_upto(10) == [0, 3, 5, 6, 8, 9, 10]
    assert NATURALS.members_upto(3) == [0, 1, 2, 3]


def test_parse_spec_round_trip():
    S = parse_set_spec("gens=5,7,9")
    assert isinstance(S, NumericalSemigroup)
    assert S == from_generators([5, 7, 9])
    H = parse_set_spec("gaps=1,3,4,6,8")
    assert not isinstance(H, NumericalSemigroup)
    up = parse_set_spec("gaps=1,2,4,7")
    assert isinstance(up, NumericalSemigroup)  # closed gap sets come back closed
    assert parse_set_spec("gaps=") == NATURALS
    assert parse_set_spec(format_set_spec(S)) == S


def test_parse_spec_errors():
    with pytest.raises(ValueError, match="gaps=1,2,4"):
        parse_set_spec("stuff=1,2")
    with pytest.raises(ValueError, match="position 2"):
        parse_set_spec("gaps=1,x,3")
    with pytest.raises(ValueError):
        parse_set_spec("gens=4,6")


def test_naive_closure_agrees_exhaustively():
    for gaps in all_gap_sets(9):
        assert is_closed(from_gaps(gaps)) == naive.is_closed(set(gaps))
