import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parityquery.algorithm import acceptance_probability, random_algorithm
from parityquery.bound import (
    FourierTable,
    degree_check,
    fourier_coefficients,
    impossibility_sweep,
    parity_correlation,
    walsh_hadamard,
    walsh_hadamard_naive,
)
from parityquery.optimal import build_even_optimal
from parityquery.oracle import OracleDims, enumerate_functions, parity


def brute_coefficients(alg):
    # c_S = 2^-n sum_f p(f) prod_{x in S} f(x), subsets listed explicitly
    n = alg.n
    fs = enumerate_functions(n)
    p = [acceptance_probability(alg, f) for f in fs]
    coeffs = np.zeros(1 << n)
    for size in range(n + 1):
        for subset in itertools.combinations(range(1, n + 1), size):
            mask = sum(1 << (x - 1) for x in subset)
            coeffs[mask] = sum(pf * np.prod([f(x) for x in subset]) for pf, f in zip(p, fs)) / 2**n
    return coeffs


@pytest.mark.parametrize("n", range(0, 9))
def test_fast_transform_matches_naive(n):
    v = np.random.default_rng(n).standard_normal(1 << n)
    np.testing.assert_allclose(walsh_hadamard(v), walsh_hadamard_naive(v), atol=1e-10)


def test_transform_rejects_bad_length():
    with pytest.raises(ValueError):
        walsh_hadamard(np.ones(6))


def test_transform_is_involution_up_to_scale():
    v = np.random.default_rng(0).standard_normal(64)
    np.testing.assert_allclose(walsh_hadamard(walsh_hadamard(v)) / 64, v, atol=1e-12)


@pytest.mark.parametrize("n, k, w", [(3, 1, 1), (4, 2, 2), (5, 2, 1)])
def test_coefficients_match_brute_force(n, k, w):
    alg = random_algorithm(OracleDims(n, w), k, 3, 10 * n + k)
    np.testing.assert_allclose(fourier_coefficients(alg).coeffs, brute_coefficients(alg), atol=1e-12)


def test_k0_only_constant_coefficient():
    alg = random_algorithm(OracleDims(4), 0, 3, 1)
    table = fourier_coefficients(alg)
    assert table.nonzero(1e-12)[0][0] == 0
    assert len(table.nonzero(1e-12)) == 1
    assert degree_check(table, 0, 1e-12)


def test_optimal_signature_n6():
    table = fourier_coefficients(build_even_optimal(6))
    assert table[0] == pytest.approx(0.5, abs=1e-10)
    assert table[63] == pytest.approx(0.5, abs=1e-10)
    rest = np.delete(table.coeffs, [0, 63])
    assert np.max(np.abs(rest)) <= 1e-10
    assert table.max_degree_present() == 6
    assert not degree_check(table, 2, 1e-9)
    assert degree_check(table, 3, 1e-9)


def test_random_n5_k2_parity_coefficient_vanishes():
    alg = random_algorithm(OracleDims(5), 2, 4, 3)
    table = fourier_coefficients(alg)
    assert abs(table.parity_coefficient) <= 1e-10
    assert abs(table.parity_coefficient - parity_correlation(alg).correlation / 32) <= 1e-12


def test_random_n6_k2_degree_bound():
    alg = random_algorithm(OracleDims(6, 2), 2, 7, 8)
    table = fourier_coefficients(alg)
    assert degree_check(table, 2, 1e-9)
    # without the bound the degree-4 layer is generically populated
    assert table.max_degree_present(1e-9) == 4


def test_table_evaluate_and_reconstruct():
    alg = random_algorithm(OracleDims(4), 1, 3, 6)
    table = fourier_coefficients(alg)
    recon = table.reconstruct()
    for f in enumerate_functions(4):
        p = acceptance_probability(alg, f)
        assert abs(table.evaluate(f) - p) <= 1e-9
        assert abs(recon[f.mask] - p) <= 1e-9
    mean = np.mean([acceptance_probability(alg, f) for f in enumerate_functions(4)])
    assert abs(table[0] - mean) <= 1e-10


def test_correlation_k0_is_zero():
    report = parity_correlation(random_algorithm(OracleDims(4), 0, 3, 2))
    assert abs(report.correlation) <= 1e-12
    assert report.max_degree_present == 0


def test_correlation_brute_force():
    alg = random_algorithm(OracleDims(4), 1, 5, 77)
    fs = enumerate_functions(4)
    brute = sum(acceptance_probability(alg, f) * parity(f) for f in fs)
    report = parity_correlation(alg)
    assert abs(report.correlation - brute) <= 1e-12
    assert abs(report.correlation) <= 1e-9
    assert abs(report.correlation - (report.sum_even - report.sum_odd)) <= 1e-9


def test_correlation_optimal_n4():
    report = parity_correlation(build_even_optimal(4))
    assert report.correlation == pytest.approx(8.0, abs=1e-9)
    assert report.sum_even == pytest.approx(8.0, abs=1e-9)
    assert report.sum_odd == pytest.approx(0.0, abs=1e-9)
    assert report.correlation / 16 == pytest.approx(0.5, abs=1e-10)


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 7), w=st.integers(1, 2), data=st.data())
def test_degree_bound_property(seed, n, w, data):
    k = data.draw(st.integers(0, 3))
    dims = OracleDims(n, w)
    alg = random_algorithm(dims, k, data.draw(st.integers(0, dims.dim)), seed)
    table = fourier_coefficients(alg)
    assert degree_check(table, k, 1e-9)
    assert np.max(np.abs(table.reconstruct() - direct_probabilities(alg))) <= 1e-9


def direct_probabilities(alg):
    return np.array([acceptance_probability(alg, f) for f in enumerate_functions(alg.n)])


def test_sweep_examples():
    rep = impossibility_sweep(5, 2, 100, 0)
    assert rep.max_abs_correlation <= 1e-9
    assert not rep.any_successful
    assert impossibility_sweep(3, 1, 100, 1).eq20_max_gap <= 1e-9


def test_sweep_rejects_boundary():
    with pytest.raises(ValueError, match="2k < n"):
        impossibility_sweep(2, 1, 10, 0)


def test_sweep_deterministic():
    a = impossibility_sweep(6, 2, 10, 123)
    b = impossibility_sweep(6, 2, 10, 123)
    assert a == b


def test_fourier_table_nonzero_sorted():
    table = FourierTable(2, np.array([0.1, 0.0, -0.2, 1e-13]))
    assert table.nonzero() == [(0, 0.1), (2, -0.2)]
    assert table.max_degree_present() == 1


def test_parity_coefficient_appears_at_threshold():
    # at 2k = n the bound no longer applies and a random algorithm picks up parity weight
    alg = random_algorithm(OracleDims(4), 2, 4, 5)
    assert abs(fourier_coefficients(alg).parity_coefficient) > 1e-6
