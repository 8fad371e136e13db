import numpy as np
import pytest

from parityquery.iterate import (
    classical_iterate,
    iterate_trace,
    lift,
    permutation_oracle,
    point_index,
    reduction_demo,
)
from parityquery.oracle import decode, enumerate_functions, parity


def test_lift_examples():
    g = lift(decode("++"))
    assert g(1, 1) == (2, 1)
    assert g(2, 1) == (1, 1)
    assert lift(decode("-+"))(1, 1) == (2, -1)


def test_lift_rejects_outside_points():
    with pytest.raises(ValueError):
        lift(decode("++"))(3, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_lift_bijection(n):
    for f in enumerate_functions(n):
        g = lift(f)
        assert len(g.points()) == 2 * n
        assert g.is_bijection()


def test_iterate_examples():
    g = lift(decode("+++"))
    assert classical_iterate(g, (2, -1), 0) == (2, -1)
    assert classical_iterate(g, (1, 1), 3) == (1, 1)
    with pytest.raises(ValueError):
        iterate_trace(g, (1, 1), -1)


@pytest.mark.parametrize("n", range(1, 11))
def test_nth_iterate_is_parity(n):
    for f in enumerate_functions(n):
        assert classical_iterate(lift(f), (1, 1), n) == (1, parity(f))


def test_permutation_oracle_all_plus_is_cycle():
    u = permutation_oracle(lift(decode("+++"))).real
    expected = np.zeros((6, 6))
    for x in (1, 2, 3):
        for r in (1, -1):
            expected[point_index(x % 3 + 1, r), point_index(x, r)] = 1
    np.testing.assert_array_equal(u, expected)


@pytest.mark.parametrize("n", range(1, 9))
def test_matrix_power_is_parity(n):
    start = np.zeros(2 * n)
    start[point_index(1, 1)] = 1
    for f in enumerate_functions(n):
        u = permutation_oracle(lift(f))
        assert np.all(u.sum(axis=0) == 1) and np.all(u.sum(axis=1) == 1)
        np.testing.assert_array_equal(u.conj().T @ u, np.eye(2 * n))
        end = np.linalg.matrix_power(u, n) @ start
        target = np.zeros(2 * n)
        target[point_index(1, parity(f))] = 1
        assert np.max(np.abs(end - target)) <= 1e-12


def test_reduction_demo():
    r = reduction_demo(decode("+-+"))
    assert (r.parity_via_iteration, r.parity_direct, r.agree) == (-1, -1, True)
    r = reduction_demo(decode("----"))
    assert (r.parity_via_iteration, r.parity_direct) == (1, 1)
    assert all(reduction_demo(f).agree for f in enumerate_functions(6))
