import pytest

from numsgps import from_gaps, parse_set_spec
from numsgps.verify import (
    CheckResult,
    SweepBounds,
    WITNESS_CAP,
    check_bijection_frobenius,
    check_bijection_genus,
    check_chain_theorems,
    check_corollary_T1,
    check_numerical_set_theorems,
    check_type_bounds,
    run_all,
)


def test_fast_harness_passes():
    results = run_all(SweepBounds.fast())
    assert results
    for result in results:
        assert result.passed, result.summary()
        assert result.cases > 0


def test_check_counts_ordinary_skips():
    result = check_chain_theorems(6)
    assert result.passed
    assert result.skipped == 6  # one ordinary semigroup per genus


def test_set_sweep_logs_precondition_skips():
    result = check_numerical_set_theorems(8)
    assert result.passed
    assert result.skipped > 0  # ordinarization identities skip broken chains


def test_witnesses_parse_back():
    result = CheckResult("demo", "demo domain")
    for i in range(WITNESS_CAP + 5):
        result.fail(from_gaps([1, 2 + i]), f"detail {i}")
    assert not result.passed
    assert result.failure_count == WITNESS_CAP + 5
    assert len(result.failures) == WITNESS_CAP
    for spec, _detail in result.failures:
        parse_set_spec(spec)  # witness encodings are runnable as-is
    assert "FAIL" in result.summary()


def test_parameter_errors():
    with pytest.raises(ValueError, match="4\\*alpha"):
        check_bijection_frobenius(2, [2, 3])
    with pytest.raises(ValueError, match="3\\*alpha"):
        check_bijection_genus(2, [4])
    with pytest.raises(ValueError, match="8\\*beta"):
        check_corollary_T1(2, [10])
    with pytest.raises(ValueError, match="empty"):
        check_bijection_frobenius(1, [])


def test_bounds_presets():
    fast = SweepBounds.fast()
    full = SweepBounds.full()
    assert fast.max_genus < full.max_genus
    assert full.max_genus == 12 and full.max_set_frobenius == 12


def test_single_check_shape():
    result = check_type_bounds(6)
    assert result.passed
    assert result.cases == 49  # 1+2+4+7+12+23 semigroups with 1 <= g <= 6
    assert "PASS" in result.summary()
