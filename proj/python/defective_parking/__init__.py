"""Exact and asymptotic enumeration of defective parking functions."""

from ._core import (
    CapExceeded,
    abel_identity_check,
    cars_until_full,
    defect_count,
    defect_count_recurrence,
    defect_distribution,
    defect_probabilities,
    defect_ratio_limit,
    density_integral_check,
    enumerate_exhaustive,
    full_lot_limit,
    full_lot_series,
    limiting_density,
    limiting_tail,
    park,
    parking_function_count,
    phi,
    pmf_approx,
    rayleigh_cdf,
    sample_empirical,
    tail_sum,
    tail_sum_alternating,
    tree_function,
)

__all__ = [name for name in dir() if not name.startswith("_")]
