import math

import pytest

import defective_parking as dp


def test_square_counts():
    assert [dp.defect_count(4, 4, k) for k in range(5)] == [125, 107, 23, 1, 0]
    assert dp.defect_count_recurrence(10, 10, 1) == 3674435393


def test_large_counts_are_python_ints():
    total = sum(dp.defect_distribution(30, 30))
    assert total == 30**30


def test_tail_forms_agree():
    for k in range(7):
        assert dp.tail_sum(5, 6, k) == dp.tail_sum_alternating(5, 6, k)


def test_pollak():
    assert dp.parking_function_count(3, 3) == (16, True)
    count, in_domain = dp.parking_function_count(2, 3)
    assert not in_domain


def test_park():
    assignment, defect = dp.park(2, [2, 2, 2])
    assert assignment == [2, None, None]
    assert defect == 2
    with pytest.raises(ValueError):
        dp.park(3, [4])


def test_enumerate_cap():
    assert dp.enumerate_exhaustive(2, 3) == [0, 7, 1, 0]
    with pytest.raises(dp.CapExceeded):
        dp.enumerate_exhaustive(10, 10, cap=10)


def test_sampling_is_deterministic():
    a = dp.sample_empirical(20, 20, 2000, seed=5)
    assert a == dp.sample_empirical(20, 20, 2000, seed=5)
    assert sum(a) == 2000


def test_tree_function_and_limits():
    assert dp.tree_function(0.5 * math.exp(-0.5)) == pytest.approx(0.5, abs=1e-12)
    assert dp.full_lot_limit(lam=2.0) == pytest.approx(0.796812130020020, abs=1e-12)
    assert dp.density_integral_check(1.0, 0.0) == pytest.approx(math.exp(-2.0), abs=1e-6)
    assert dp.defect_ratio_limit(0, 1) == pytest.approx(2 * math.e - 3, abs=1e-12)
