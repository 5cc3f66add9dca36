"""Numerical sets and numerical semigroups: transforms, enumeration, tables."""

from .core import (
    NATURALS,
    CapacityError,
    NumericalSemigroup,
    NumericalSet,
    as_semigroup,
    capacity,
    f_index,
    format_set_spec,
    from_gaps,
    from_generators,
    is_closed,
    m_index,
    minimal_generators,
    parse_set_spec,
    profile,
    set_capacity,
)
from .enumeration import (
    CountTable,
    TableSet,
    build_tables,
    children,
    enumerate_by_frobenius,
    enumerate_by_genus,
    enumerate_numerical_sets,
    sets_with_assoc_genus,
    sets_with_gap_sum,
    sparse_semigroups_by_frobenius,
)
from .families import (
    FamilyCountReport,
    FamilySpec,
    as_family_candidates,
    family_as_enumerate,
    family_as_member,
    family_counts,
    family_general_member,
    general_family_candidates,
)
from .transforms import (
    TransformReport,
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
    small_l,
    t_chain,
    t_set,
    type_of,
)
from .verify import CheckResult, SweepBounds, run_all

__version__ = "0.1.0"
