import pytest

from numsgps import (
    NATURALS,
    adjoin_frobenius,
    associated,
    build_tables,
    children,
    enumerate_by_frobenius,
    enumerate_by_genus,
    enumerate_numerical_sets,
    from_gaps,
    from_generators,
    is_closed,
    sets_with_assoc_genus,
    sets_with_gap_sum,
    sparse_semigroups_by_frobenius,
    type_of,
)
from numsgps.enumeration import CountTable

GENUS_COUNTS = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592]


def test_children_examples():
    assert children(NATURALS) == [from_gaps([1])]
    two = children(from_gaps([1]))
    assert two == [from_gaps([1, 2]), from_gaps([1, 3])]
    assert children(from_generators([3, 5])) == []


def test_children_structure():
    stack = [(NATURALS, 0)]
    while stack:
        S, d = stack.pop()
        for child in children(S):
            assert child.genus == S.genus + 1
            assert child.frobenius > S.frobenius
            assert adjoin_frobenius(child) == S
            if d < 8:
                stack.append((child, d + 1))


def test_enumerate_by_genus_counts():
    assert [enumerate_by_genus(g) for g in range(10)] == GENUS_COUNTS[:10]


def test_enumerate_by_genus_visits_distinct_semigroups():
    seen = set()
    count = enumerate_by_genus(7, seen.add)
    assert count == 39
    assert len(seen) == 39
    assert all(S.genus == 7 and is_closed(S) for S in seen)


def _frobenius_via_genus_tree(F):
    # The tree route the direct DFS must agree with: descend while the
    # Frobenius number stays at most F, collect exact hits.
    out = []
    stack = [NATURALS]
    while stack:
        S = stack.pop()
        if S.frobenius == F:
            out.append(S)
            continue
        stack.extend(c for c in children(S) if c.frobenius <= F)
    return out


@pytest.mark.parametrize("F", range(1, 16))
def test_enumerate_by_frobenius_matches_genus_tree(F):
    direct = set()
    count = enumerate_by_frobenius(F, direct.add)
    via_tree = set(_frobenius_via_genus_tree(F))
    assert count == len(direct) == len(via_tree)
    assert direct == via_tree


def test_enumerate_by_frobenius_visits_valid_semigroups():
    seen = []
    enumerate_by_frobenius(12, seen.append)
    assert len(set(seen)) == len(seen)
    for S in seen:
        assert S.frobenius == 12
        assert is_closed(S)


def test_enumerate_numerical_sets():
    assert enumerate_numerical_sets(1) == 1
    assert enumerate_numerical_sets(3) == 4
    assert enumerate_numerical_sets(5) == 16
    seen = set()
    enumerate_numerical_sets(6, seen.add)
    assert len(seen) == 32
    assert all(H.frobenius == 6 for H in seen)


def test_sets_with_gap_sum_examples():
    assert sets_with_gap_sum(1) == []
    assert sets_with_gap_sum(2) == [from_gaps([1])]
    assert sets_with_gap_sum(3) == [from_gaps([2])]
    for alpha in (2, 3, 4, 5):
        for T in sets_with_gap_sum(alpha):
            assert T.genus + associated(T).genus == alpha
    with pytest.raises(ValueError):
        sets_with_gap_sum(0)


def test_sets_with_assoc_genus_examples():
    assert sets_with_assoc_genus(0) == [NATURALS]
    assert sets_with_assoc_genus(1) == [from_gaps([1])]
    level2 = sets_with_assoc_genus(2)
    assert len(level2) == 3
    for T in level2:
        A = associated(T)
        assert A.genus == 2
        # T sits between A and A plus B(A)
        from numsgps import b_set

        extra = set(T.members_upto(T.frobenius)) - set(A.members_upto(T.frobenius))
        assert extra <= set(b_set(A))


def test_sparse_enumerator_complete_against_full():
    for F in range(1, 15):
        full = set()
        enumerate_by_frobenius(F, full.add)
        sparse_all = sparse_semigroups_by_frobenius(F, F + 1)
        assert len(sparse_all) == len(set(sparse_all))
        assert set(sparse_all) == full
        few = set(sparse_semigroups_by_frobenius(F, 2))
        assert few == {S for S in full if F + 1 - S.genus <= 2}


def test_sparse_enumerator_type_counts_vs_full():
    for F in (17, 19, 22):
        by_type = {}

        def tally(S):
            t = type_of(S)
            by_type[t] = by_type.get(t, 0) + 1

        enumerate_by_frobenius(F, tally)
        for alpha in (1, 2, 3, 4):
            want = by_type.get(F - alpha, 0)
            got = sum(
                1
                for S in sparse_semigroups_by_frobenius(F, alpha // 2 + 1)
                if type_of(S) == F - alpha
            )
            assert got == want


def test_count_table_parity_invariant():
    tables = build_tables(12, 9)
    for table in (tables.by_frobenius, tables.by_genus,
                  tables.almost_symmetric_by_frobenius):
        assert table.parity == CountTable.parity_of(table.rows)
        for i in table.indices():
            odd, even = table.parity[i]
            assert odd + even == table.total(i)


def test_table_row_sums_match_direct_counts():
    tables = build_tables(13, 9)
    for F in range(1, 14):
        assert tables.by_frobenius.total(F) == enumerate_by_frobenius(F)
    for g in range(1, 10):
        assert tables.by_genus.total(g) == GENUS_COUNTS[g]


def test_ordinary_is_the_only_type_F_semigroup():
    tables = build_tables(16, 1)
    for F in range(2, 17):
        assert tables.by_frobenius.count(F, F) == 1
        assert tables.by_frobenius.count(F, F - 1) == 0


def test_almost_symmetric_table_is_a_subtable():
    tables = build_tables(14, 1)
    for key, count in tables.almost_symmetric_by_frobenius.rows.items():
        assert count <= tables.by_frobenius.rows[key]


def test_per_type_genus_counts():
    # spot values for the (g, t) table, cross-checked against the bijection
    # counts |sets_with_assoc_genus(alpha)| at t = g - alpha
    tables = build_tables(1, 16)
    probes = {(11, 3): 94, (12, 4): 132, (13, 5): 202, (14, 2): 136,
              (15, 1): 83, (16, 3): 672, (10, 4): 40}
    for (g, t), want in probes.items():
        assert tables.by_genus.count(g, t) == want
    for alpha, want in ((2, 3), (3, 7)):
        for g in range(3 * alpha - 1, 17):
            assert tables.by_genus.count(g, g - alpha) == want


def test_parallel_build_matches_serial():
    serial = build_tables(16, 11, workers=1)
    parallel = build_tables(16, 11, workers=3)
    assert serial.by_frobenius.rows == parallel.by_frobenius.rows
    assert serial.almost_symmetric_by_frobenius.rows == parallel.almost_symmetric_by_frobenius.rows
    assert serial.by_genus.rows == parallel.by_genus.rows


def test_bad_bounds():
    with pytest.raises(ValueError):
        build_tables(0, 5)
    with pytest.raises(ValueError):
        enumerate_by_frobenius(0)
    with pytest.raises(ValueError):
        enumerate_by_genus(-1)
    with pytest.raises(ValueError):
        enumerate_numerical_sets(0)
