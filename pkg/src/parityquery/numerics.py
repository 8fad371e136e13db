"""Dense complex linear algebra helpers and seeded random constructions.

Vectors and matrices are plain ``numpy`` arrays of dtype ``complex128``.
Randomness comes from :class:`numpy.random.Generator`; every function that
draws random numbers accepts either a generator or an integer seed.
"""

from __future__ import annotations

import numpy as np

UNITARY_TOL = 1e-10
SUM_TOL = 1e-9

__all__ = [
    "UNITARY_TOL",
    "SUM_TOL",
    "make_rng",
    "apply",
    "adjoint",
    "inner",
    "is_unitary",
    "is_projector",
    "haar_unitary",
    "haar_state",
    "random_projector",
    "outer",
]


def make_rng(seed=None):
    """Return a ``numpy`` generator; pass generators through unchanged."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _as_matrix(m):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    return m


def apply(m, v):
    """Matrix-vector product ``m @ v`` with an explicit dimension check."""
    m = _as_matrix(m)
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-d vector, got shape {v.shape}")
    if m.shape[1] != v.shape[0]:
        raise ValueError(
            f"dimension mismatch: matrix has {m.shape[1]} columns, "
            f"vector has dimension {v.shape[0]}"
        )
    return m @ v


def adjoint(m):
    return _as_matrix(m).conj().T.copy()


def inner(u, v):
    """Inner product <u|v>, conjugate-linear in ``u``."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape:
        raise ValueError(
            f"dimension mismatch: {u.shape[0] if u.ndim else u.shape} "
            f"vs {v.shape[0] if v.ndim else v.shape}"
        )
    return complex(np.vdot(u, v))


def outer(u, v=None):
    """Return |u><v| (``v`` defaults to ``u``)."""
    u = np.asarray(u, dtype=complex)
    v = u if v is None else np.asarray(v, dtype=complex)
    return np.outer(u, v.conj())


def _check_square(m):
    m = _as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    return m


def is_unitary(m, tol=UNITARY_TOL):
    """True iff every entry of ``m^dagger m - I`` has modulus at most ``tol``."""
    m = _check_square(m)
    dev = m.conj().T @ m - np.eye(m.shape[0])
    return bool(np.max(np.abs(dev), initial=0.0) <= tol)


def is_projector(m, tol=UNITARY_TOL):
    """True iff ``m`` is Hermitian and idempotent within ``tol``."""
    m = _check_square(m)
    herm = np.max(np.abs(m - m.conj().T), initial=0.0)
    idem = np.max(np.abs(m @ m - m), initial=0.0)
    return bool(herm <= tol and idem <= tol)


def haar_unitary(dim, rng=None):
    """Sample a Haar-distributed unitary of size ``dim``.

    Parameters
    ----------
    dim : int
        Matrix dimension, at least 1.
    rng : numpy.random.Generator or int, optional
        Generator or seed.

    Returns
    -------
    (dim, dim) complex ndarray

    Notes
    -----
    QR of a complex Ginibre matrix, with each column of Q rescaled by the
    phase of the matching diagonal entry of R so that R has a real positive
    diagonal. Without that correction the output is not Haar distributed.
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    rng = make_rng(rng)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    phases = d / np.abs(d)
    return q * phases[np.newaxis, :]


def haar_state(dim, rng=None):
    """Uniformly random unit vector in C^dim."""
    rng = make_rng(rng)
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def random_projector(dim, rank, rng=None):
    """Random orthogonal projector ``U D U^dagger`` of the given rank."""
    if not 0 <= rank <= dim:
        raise ValueError(f"rank must satisfy 0 <= rank <= {dim}, got {rank}")
    if rank == 0:
        return np.zeros((dim, dim), dtype=complex)
    if rank == dim:
        return np.eye(dim, dtype=complex)
    u = haar_unitary(dim, rng)
    cols = u[:, :rank]
    p = cols @ cols.conj().T
    # symmetrize away the last ulp of non-Hermiticity
    return (p + p.conj().T) / 2
