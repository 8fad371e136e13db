"""Sign functions and the oracle unitaries built from them.

A sign function ``f`` maps ``x = 1..N`` to ``+1`` or ``-1``. The oracle acts
on a register with basis ``|x, q, w>`` where ``q`` is a qubit label and ``w``
a work coordinate of dimension ``W``. Basis states are linearized as::

    index = ((w - 1) * N + (x - 1)) * 2 + b

with ``b = 0`` for the label ``+1`` (computational form) or ``s`` (phase
form) and ``b = 1`` for ``-1`` or ``a``.

Query accounting: one application of an oracle matrix counts as one query.
Resetting work bits after computing ``f(x)`` classically costs two calls of
``f`` per application; that factor is not tracked here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_ENUMERATION_N = 24

__all__ = [
    "MAX_ENUMERATION_N",
    "SignFunction",
    "OracleDims",
    "basis_index",
    "parity",
    "oracle_computational",
    "oracle_phase",
    "phase_diagonal",
    "basis_change",
    "enumerate_functions",
    "sign_table",
    "encode",
    "decode",
]


@dataclass(frozen=True)
class SignFunction:
    """A map ``{1..n} -> {-1, +1}`` stored as a tuple of ints.

    ``values[x - 1]`` is ``f(x)``.
    """

    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if len(vals) < 1:
            raise ValueError("a sign function needs at least one point")
        for i, v in enumerate(vals):
            if v not in (1, -1):
                raise ValueError(f"f({i + 1}) = {v} is not a sign (+1 or -1)")
        object.__setattr__(self, "values", vals)

    @property
    def n(self):
        return len(self.values)

    def __call__(self, x):
        if not 1 <= x <= self.n:
            raise ValueError(f"x = {x} outside domain 1..{self.n}")
        return self.values[x - 1]

    @property
    def mask(self):
        """Bitmask with bit ``x - 1`` set iff ``f(x) = -1``."""
        return sum(1 << i for i, v in enumerate(self.values) if v == -1)

    @classmethod
    def from_mask(cls, mask, n):
        if not 0 <= mask < (1 << n):
            raise ValueError(f"mask {mask} out of range for n = {n}")
        return cls(tuple(-1 if (mask >> i) & 1 else 1 for i in range(n)))

    @classmethod
    def constant(cls, n, value=1):
        return cls((value,) * n)

    def __str__(self):
        return encode(self)


@dataclass(frozen=True)
class OracleDims:
    """Register shape: domain size ``n`` and work dimension ``w``."""

    n: int
    w: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.w < 1:
            raise ValueError(f"w must be >= 1, got {self.w}")

    @property
    def dim(self):
        return 2 * self.n * self.w


def basis_index(dims, x, q, w=1):
    """Linear index of ``|x, q, w>``; ``q`` is one of ``'s', 'a', +1, -1``."""
    if not 1 <= x <= dims.n:
        raise ValueError(f"x = {x} outside 1..{dims.n}")
    if not 1 <= w <= dims.w:
        raise ValueError(f"w = {w} outside 1..{dims.w}")
    if q in ("s", 1):
        b = 0
    elif q in ("a", -1):
        b = 1
    else:
        raise ValueError(f"unknown qubit label {q!r}")
    return ((w - 1) * dims.n + (x - 1)) * 2 + b


def parity(f):
    return int(np.prod(f.values))


def _check(f, dims):
    if dims is None:
        return OracleDims(f.n)
    if dims.n != f.n:
        raise ValueError(f"oracle size mismatch: function has n = {f.n}, dims.n = {dims.n}")
    return dims


def phase_diagonal(f, dims=None):
    """Diagonal of the phase oracle as a real vector of +-1."""
    dims = _check(f, dims)
    per_x = np.empty(2 * f.n)
    per_x[0::2] = 1.0
    per_x[1::2] = f.values
    return np.tile(per_x, dims.w)


def oracle_phase(f, dims=None):
    """``U_f`` in the ``(x, s/a)`` basis: ``+1`` on ``|x,s,w>``, ``f(x)`` on ``|x,a,w>``."""
    return np.diag(phase_diagonal(f, dims).astype(complex))


def oracle_computational(f, dims=None):
    """``U_f`` in the ``(x, +-1)`` basis: ``|x, r, w> -> |x, r f(x), w>``."""
    dims = _check(f, dims)
    u = np.zeros((dims.dim, dims.dim), dtype=complex)
    for w in range(dims.w):
        for x in range(f.n):
            base = (w * f.n + x) * 2
            if f.values[x] == 1:
                u[base, base] = u[base + 1, base + 1] = 1.0
            else:
                u[base + 1, base] = u[base, base + 1] = 1.0
    return u


def basis_change(dims):
    """Block-diagonal Hadamard taking ``(x, +-1)`` labels to ``(x, s/a)``."""
    h = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2.0)
    return np.kron(np.eye(dims.n * dims.w), h)


def enumerate_functions(n):
    """All ``2**n`` sign functions in mask order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"n = {n} exceeds the enumeration cap of {MAX_ENUMERATION_N}")
    return [SignFunction.from_mask(m, n) for m in range(1 << n)]


def sign_table(n, masks=None):
    """Array ``t[m, x-1] = f_m(x)`` for the given masks (default: all)."""
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"n = {n} exceeds the enumeration cap of {MAX_ENUMERATION_N}")
    if masks is None:
        masks = np.arange(1 << n)
    masks = np.asarray(masks, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n)[None, :]) & 1
    return 1 - 2 * bits


def encode(f):
    return "".join("+" if v == 1 else "-" for v in f.values)


def decode(s, n=None):
    """Parse ``'+-+'`` style text; the leftmost character is ``f(1)``.

    Positions in error messages are 1-based.
    """
    if n is not None and len(s) != n:
        raise ValueError(f"expected {n} characters, got {len(s)}")
    if not s:
        raise ValueError("empty function text")
    vals = []
    for i, ch in enumerate(s, start=1):
        if ch == "+":
            vals.append(1)
        elif ch in "-−":
            vals.append(-1)
        else:
            raise ValueError(f"invalid character {ch!r} at position {i}")
    return SignFunction(tuple(vals))
