"""Exhaustive checks of the parity lower bound.

The acceptance probability ``p(f) = <psi_f|P|psi_f>`` of a ``k``-query
algorithm is a multilinear polynomial in ``f(1), ..., f(N)`` of degree at most
``2k``. Its coefficients are recovered here with a Walsh-Hadamard transform of
``p`` over all ``2**N`` sign functions rather than from the exponentially large
amplitude tensor. The parity monomial is the full-set coefficient, so it
vanishes whenever ``2k < N``, and with it the parity correlation
``sum_f p(f) par(f)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algorithm import acceptance_probabilities, evaluate_success, parity_vector, random_algorithm
from .numerics import SUM_TOL, make_rng
from .oracle import MAX_ENUMERATION_N, OracleDims

__all__ = [
    "FourierTable",
    "CorrelationReport",
    "SweepReport",
    "walsh_hadamard",
    "walsh_hadamard_naive",
    "character_matrix",
    "popcount",
    "fourier_from_values",
    "fourier_coefficients",
    "parity_correlation",
    "degree_check",
    "impossibility_sweep",
]


def popcount(masks):
    masks = np.asarray(masks, dtype=np.int64)
    count = np.zeros_like(masks)
    while np.any(masks):
        count += masks & 1
        masks = masks >> 1
    return count


def walsh_hadamard(values):
    """Unnormalized Walsh-Hadamard transform ``out[S] = sum_m v[m] (-1)^|S & m|``.

    In-place butterfly on a copy; length must be a power of two.
    """
    a = np.array(values, dtype=float)
    size = a.shape[0]
    if size & (size - 1) or size == 0:
        raise ValueError(f"length must be a power of two, got {size}")
    h = 1
    while h < size:
        a = a.reshape(-1, 2, h)
        lo = a[:, 0, :].copy()
        hi = a[:, 1, :]
        a[:, 0, :] += hi
        a[:, 1, :] = lo - hi
        a = a.reshape(size)
        h *= 2
    return a


def character_matrix(n):
    """``H[S, m] = prod_{x in S} f_m(x) = (-1)^|S & m|``."""
    masks = np.arange(1 << n, dtype=np.int64)
    return 1 - 2 * (popcount(masks[:, None] & masks[None, :]) & 1)


def walsh_hadamard_naive(values):
    """Same transform as :func:`walsh_hadamard` by explicit ``O(4**n)`` sums."""
    v = np.asarray(values, dtype=float)
    n = int(v.shape[0]).bit_length() - 1
    return character_matrix(n) @ v


@dataclass(frozen=True)
class FourierTable:
    """Coefficients ``c[S]`` with ``p(f) = sum_S c[S] prod_{x in S} f(x)``.

    ``coeffs`` is indexed by the subset bitmask ``S`` (bit ``x - 1`` set iff
    ``x`` is in ``S``).
    """

    n: int
    coeffs: np.ndarray

    def __getitem__(self, subset_mask):
        return float(self.coeffs[subset_mask])

    def evaluate(self, f):
        """Value of the expansion at a sign function."""
        sizes = popcount(np.arange(1 << self.n) & f.mask)
        return float(np.sum(self.coeffs * (1 - 2 * (sizes & 1))))

    def reconstruct(self):
        """Values of the expansion at every function, in mask order."""
        return walsh_hadamard(self.coeffs)

    @property
    def parity_coefficient(self):
        return float(self.coeffs[-1])

    def nonzero(self, tol=1e-12):
        """``[(mask, value)]`` for every ``|c[S]| > tol``, ascending mask."""
        idx = np.flatnonzero(np.abs(self.coeffs) > tol)
        return [(int(i), float(self.coeffs[i])) for i in idx]

    def max_degree_present(self, tol=SUM_TOL):
        """Largest ``|S|`` whose coefficient exceeds ``tol``; -1 if none."""
        idx = np.flatnonzero(np.abs(self.coeffs) > tol)
        if idx.size == 0:
            return -1
        return int(popcount(idx).max())

    def max_abs_above_degree(self, degree):
        """Largest ``|c[S]|`` over sets with ``|S| > degree``."""
        sizes = popcount(np.arange(1 << self.n))
        high = np.abs(self.coeffs[sizes > degree])
        return float(high.max()) if high.size else 0.0


@dataclass(frozen=True)
class CorrelationReport:
    n: int
    k: int
    correlation: float
    sum_even: float
    sum_odd: float
    max_degree_present: int


@dataclass(frozen=True)
class SweepReport:
    n: int
    k: int
    trials: int
    max_abs_correlation: float
    eq20_max_gap: float
    any_successful: bool
    max_high_degree_coefficient: float


def _check_n(n):
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"n = {n} exceeds the enumeration cap of {MAX_ENUMERATION_N}")


def fourier_from_values(probs):
    n = int(len(probs)).bit_length() - 1
    return FourierTable(n, walsh_hadamard(probs) / (1 << n))


def fourier_coefficients(alg, probs=None):
    """Multilinear expansion of the acceptance probability of ``alg``."""
    _check_n(alg.n)
    if probs is None:
        probs = acceptance_probabilities(alg)
    return fourier_from_values(probs)


def _sums(probs, n):
    par = parity_vector(n)
    # fixed mask-order accumulation
    even = float(np.sum(np.where(par == 1, probs, 0.0)))
    odd = float(np.sum(np.where(par == -1, probs, 0.0)))
    corr = float(np.sum(probs * par))
    return corr, even, odd


def parity_correlation(alg, probs=None, tol=SUM_TOL):
    """``sum_f p(f) par(f)`` together with the per-parity sums it splits into."""
    _check_n(alg.n)
    if probs is None:
        probs = acceptance_probabilities(alg)
    corr, even, odd = _sums(probs, alg.n)
    table = fourier_from_values(probs)
    return CorrelationReport(alg.n, alg.k, corr, even, odd, table.max_degree_present(tol))


def degree_check(table, k, tol=SUM_TOL):
    """True iff every coefficient on a set larger than ``2k`` is at most ``tol``."""
    return table.max_abs_above_degree(2 * k) <= tol


def impossibility_sweep(n, k, trials, rng=None, w=None, proj_rank=None):
    """Aggregate bound checks over ``trials`` random ``k``-query algorithms.

    Each trial draws the work dimension from ``{1, 2}`` (unless ``w`` is
    fixed) and the projector rank uniformly from ``1..2NW - 1`` (unless
    ``proj_rank`` is fixed), then a Haar-random algorithm. Results are reduced
    in trial order.
    """
    if 2 * k >= n:
        raise ValueError(f"the lower bound needs 2k < n, got k = {k}, n = {n}")
    if k < 0 or trials < 1:
        raise ValueError("need k >= 0 and trials >= 1")
    _check_n(n)
    rng = make_rng(rng)
    max_corr = 0.0
    max_gap = 0.0
    max_high = 0.0
    any_ok = False
    for _ in range(trials):
        wt = int(rng.integers(1, 3)) if w is None else w
        dims = OracleDims(n, wt)
        rank = int(rng.integers(1, dims.dim)) if proj_rank is None else proj_rank
        alg = random_algorithm(dims, k, rank, rng)
        probs = acceptance_probabilities(alg)
        corr, even, odd = _sums(probs, n)
        table = fourier_from_values(probs)
        max_corr = max(max_corr, abs(corr))
        max_gap = max(max_gap, abs(even - odd))
        max_high = max(max_high, table.max_abs_above_degree(2 * k))
        any_ok = any_ok or evaluate_success(alg, probs).successful
    return SweepReport(n, k, trials, max_corr, max_gap, any_ok, max_high)
