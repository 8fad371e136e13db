"""Exact parity algorithms: ``N/2`` queries for even ``N``, ``(N+1)/2`` for odd ``N``.

Both constructions split a set of oracle eigenstates into two halves of equal
size ``k`` and cycle each half with a shift ``V``. Starting from the uniform
superposition, after ``k`` queries interleaved with ``k - 1`` shifts every
amplitude in a half has picked up the product of ``f`` over that whole half,
so ``|psi_f>`` equals ``+-|psi0>`` for even parity and is orthogonal to it for
odd parity. Measuring ``|psi0><psi0|`` is then exact.

For odd ``N`` the state ``|1, s>`` (eigenvalue always ``+1``) is added as a
padding point, which leaves the parity unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algorithm import QueryAlgorithm, acceptance_probabilities, parity_vector
from .numerics import outer
from .oracle import MAX_ENUMERATION_N, OracleDims, basis_index

EXACT_TOL = 1e-10

__all__ = [
    "EXACT_TOL",
    "ExactnessReport",
    "build_even_optimal",
    "build_odd_optimal",
    "build_optimal",
    "cycle_points",
    "verify_exactness",
]


@dataclass(frozen=True)
class ExactnessReport:
    n: int
    k: int
    all_correct: bool
    worst_deviation: float


def cycle_points(n):
    """Basis indices visited by the two shift cycles, as ``(first, second)``.

    Even ``n``: the ``|x, a>`` states split at ``n/2``. Odd ``n``: the ``|x, a>``
    states plus ``|1, s>``, split at ``(n+1)/2``.
    """
    dims = OracleDims(n)
    points = [basis_index(dims, x, "a") for x in range(1, n + 1)]
    if n % 2:
        points.append(basis_index(dims, 1, "s"))
    half = len(points) // 2
    return points[:half], points[half:]


def _shift(dim, cycles):
    """Permutation matrix sending each point of a cycle to its successor."""
    v = np.eye(dim, dtype=complex)
    for cyc in cycles:
        for i, src in enumerate(cyc):
            dst = cyc[(i + 1) % len(cyc)]
            v[src, src] = 0.0
            v[dst, src] = 1.0
    return v


def _build(n):
    dims = OracleDims(n)
    first, second = cycle_points(n)
    k = len(first)
    psi0 = np.zeros(dims.dim, dtype=complex)
    psi0[first + second] = 1.0 / np.sqrt(len(first) + len(second))
    shift = _shift(dims.dim, (first, second))
    v_ops = (shift,) * (k - 1) + (np.eye(dims.dim, dtype=complex),)
    return QueryAlgorithm(dims, psi0, v_ops, outer(psi0))


def build_even_optimal(n):
    """Exact ``n/2``-query parity algorithm for even ``n >= 2``.

    Uses ``W = 1``, the uniform superposition of the ``|x, a>`` states, the
    shift cycling ``1..n/2`` and ``n/2+1..n`` separately (identity on every
    ``|x, s>``), ``V_k = 1`` and the projector ``|psi0><psi0|``.
    """
    if n < 2 or n % 2:
        raise ValueError(f"build_even_optimal needs an even n >= 2, got {n}; use build_odd_optimal for odd n")
    return _build(n)


def build_odd_optimal(n):
    """Exact ``(n+1)/2``-query parity algorithm for odd ``n >= 3``."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"build_odd_optimal needs an odd n >= 3, got {n}")
    return _build(n)


def build_optimal(n):
    if n % 2 == 0:
        return build_even_optimal(n)
    return build_odd_optimal(n)


def verify_exactness(n, tol=EXACT_TOL):
    """Run the optimal algorithm for ``n`` on every ``f`` and compare with the parity indicator."""
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"n = {n} exceeds the enumeration cap of {MAX_ENUMERATION_N}")
    alg = build_optimal(n)
    probs = acceptance_probabilities(alg)
    target = (1 + parity_vector(n)) / 2
    worst = float(np.max(np.abs(probs - target)))
    return ExactnessReport(n, alg.k, worst <= tol, worst)
