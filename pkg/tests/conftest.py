import time

import pytest

from numsgps import build_tables


@pytest.fixture(scope="session")
def full_tables():
    """The acceptance-scale tables, built once and timed."""
    start = time.perf_counter()
    tables = build_tables(30, 20)
    tables.build_seconds = time.perf_counter() - start
    return tables


def all_gap_sets(max_f):
    """Every gap set with Frobenius number in [1, max_f], as frozensets."""
    for F in range(1, max_f + 1):
        for k in range(1 << (F - 1)):
            yield frozenset(
                {i + 1 for i in range(F - 1) if k >> i & 1} | {F}
            )
