"""Query algorithms ``V_k U_f ... V_1 U_f |psi0>`` followed by a yes/no measurement."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .numerics import (
    SUM_TOL,
    UNITARY_TOL,
    apply,
    haar_state,
    haar_unitary,
    is_projector,
    is_unitary,
    make_rng,
    random_projector,
)
from .oracle import MAX_ENUMERATION_N, OracleDims, phase_diagonal, sign_table

__all__ = [
    "QueryAlgorithm",
    "SuccessReport",
    "run",
    "acceptance_probability",
    "acceptance_probabilities",
    "parity_vector",
    "evaluate_success",
    "random_algorithm",
]

_IMAG_TOL = 1e-10
_CHUNK = 4096


def _frozen(a):
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class QueryAlgorithm:
    """Initial state, the f-independent unitaries ``V_1..V_k`` and a projector.

    The oracle is applied before each ``V_i``, so ``len(v_ops)`` is the
    number of queries. Arrays are copied and made read-only on construction.
    """

    dims: OracleDims
    psi0: np.ndarray
    v_ops: tuple = field(default_factory=tuple)
    proj: np.ndarray = None

    def __post_init__(self):
        d = self.dims.dim
        psi0 = _frozen(self.psi0)
        if psi0.shape != (d,):
            raise ValueError(f"psi0 has shape {psi0.shape}, expected ({d},)")
        if abs(np.linalg.norm(psi0) - 1.0) > UNITARY_TOL:
            raise ValueError(f"psi0 is not normalized (norm {np.linalg.norm(psi0)!r})")
        v_ops = tuple(_frozen(v) for v in self.v_ops)
        for i, v in enumerate(v_ops, start=1):
            if v.shape != (d, d):
                raise ValueError(f"V_{i} has shape {v.shape}, expected ({d}, {d})")
            if not is_unitary(v, UNITARY_TOL):
                raise ValueError(f"V_{i} is not unitary")
        proj = _frozen(np.eye(d) if self.proj is None else self.proj)
        if proj.shape != (d, d):
            raise ValueError(f"projector has shape {proj.shape}, expected ({d}, {d})")
        if not is_projector(proj, UNITARY_TOL):
            raise ValueError("measurement operator is not a Hermitian idempotent")
        object.__setattr__(self, "psi0", psi0)
        object.__setattr__(self, "v_ops", v_ops)
        object.__setattr__(self, "proj", proj)

    @property
    def k(self):
        return len(self.v_ops)

    @property
    def n(self):
        return self.dims.n


@dataclass(frozen=True)
class SuccessReport:
    min_prob_even: float
    max_prob_odd: float
    epsilon_star: float
    successful: bool


def _check_f(alg, f):
    if f.n != alg.dims.n:
        raise ValueError(f"dimension mismatch: function has n = {f.n}, algorithm expects n = {alg.dims.n}")


def run(alg, f):
    """Return ``|psi_f>`` for one sign function."""
    _check_f(alg, f)
    diag = phase_diagonal(f, alg.dims)
    psi = alg.psi0
    for v in alg.v_ops:
        psi = apply(v, diag * psi)
    return psi


def _to_probability(value, imag):
    if abs(imag) > _IMAG_TOL:
        raise ArithmeticError(f"<psi|P|psi> has imaginary part {imag!r}; projector is not Hermitian")
    if value < -SUM_TOL or value > 1.0 + SUM_TOL:
        raise ArithmeticError(f"acceptance probability {value!r} lies outside [0, 1]")
    return min(max(value, 0.0), 1.0)


def acceptance_probability(alg, f):
    """Probability ``<psi_f|P|psi_f>`` of the outcome 1 (parity +1)."""
    psi = run(alg, f)
    z = np.vdot(psi, alg.proj @ psi)
    return _to_probability(z.real, z.imag)


def acceptance_probabilities(alg, masks=None):
    """Acceptance probabilities for many functions at once, indexed like ``masks``.

    ``masks`` defaults to every function in mask order. The oracle is
    diagonal, so all functions are propagated together as the columns of one
    state matrix.
    """
    n = alg.dims.n
    if masks is None:
        if n > MAX_ENUMERATION_N:
            raise ValueError(f"n = {n} exceeds the enumeration cap of {MAX_ENUMERATION_N}")
        masks = np.arange(1 << n)
    masks = np.asarray(masks, dtype=np.int64)
    out = np.empty(len(masks))
    w = alg.dims.w
    for start in range(0, len(masks), _CHUNK):
        chunk = masks[start:start + _CHUNK]
        signs = sign_table(n, chunk).T.astype(float)  # (n, m)
        diag = np.ones((alg.dims.dim, len(chunk)))
        for wi in range(w):
            base = 2 * n * wi
            diag[base + 1:base + 2 * n:2, :] = signs
        states = np.repeat(alg.psi0[:, None], len(chunk), axis=1)
        for v in alg.v_ops:
            states = v @ (diag * states)
        z = np.einsum("ij,ij->j", states.conj(), alg.proj @ states)
        if np.max(np.abs(z.imag), initial=0.0) > _IMAG_TOL:
            raise ArithmeticError("<psi|P|psi> has a non-negligible imaginary part")
        p = z.real
        if np.any(p < -SUM_TOL) or np.any(p > 1.0 + SUM_TOL):
            raise ArithmeticError("acceptance probability outside [0, 1]")
        out[start:start + len(chunk)] = np.clip(p, 0.0, 1.0)
    return out


def parity_vector(n):
    """``par(f_m)`` for every mask ``m``, as +-1 integers."""
    masks = np.arange(1 << n, dtype=np.int64)
    pop = np.zeros_like(masks)
    for i in range(n):
        pop += (masks >> i) & 1
    return 1 - 2 * (pop & 1)


def evaluate_success(alg, probs=None):
    """Sweep every ``f`` and report the best margin by which the parity classes clear 1/2.

    The algorithm succeeds when ``epsilon_star > 0`` strictly.
    """
    if probs is None:
        probs = acceptance_probabilities(alg)
    par = parity_vector(alg.dims.n)
    even = probs[par == 1]
    odd = probs[par == -1]
    min_even = float(even.min())
    max_odd = float(odd.max())
    eps = min(min_even - 0.5, 0.5 - max_odd)
    return SuccessReport(min_even, max_odd, eps, eps > 0)


def random_algorithm(dims, k, proj_rank, rng=None):
    """Haar-random ``psi0`` and ``V_i`` with a random projector of rank ``proj_rank``."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if not 0 <= proj_rank <= dims.dim:
        raise ValueError(f"proj_rank must satisfy 0 <= proj_rank <= {dims.dim}, got {proj_rank}")
    rng = make_rng(rng)
    psi0 = haar_state(dims.dim, rng)
    v_ops = tuple(haar_unitary(dims.dim, rng) for _ in range(k))
    proj = random_projector(dims.dim, proj_rank, rng)
    return QueryAlgorithm(dims, psi0, v_ops, proj)

