"""Parity recast as the ``N``-th iterate of a permutation on ``2N`` points.

For a sign function ``f`` the lifted map is ``g(x, r) = (x + 1, r f(x))`` with
``N + 1`` wrapping to 1. Starting from ``(1, +1)``, ``N`` steps of ``g`` walk
once around the cycle and multiply ``r`` by every ``f(x)``, ending at
``(1, par(f))``. Any fast quantum routine for iterates would therefore be a
fast parity algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .oracle import parity

__all__ = [
    "LiftedFunction",
    "ReductionReport",
    "lift",
    "classical_iterate",
    "iterate_trace",
    "point_index",
    "permutation_oracle",
    "reduction_demo",
]


@dataclass(frozen=True)
class LiftedFunction:
    f: object

    @property
    def n(self):
        return self.f.n

    def __call__(self, x, r):
        if not 1 <= x <= self.n or r not in (1, -1):
            raise ValueError(f"({x}, {r}) is not a point of the lifted domain")
        return (x % self.n + 1, r * self.f(x))

    def points(self):
        return [(x, r) for x in range(1, self.n + 1) for r in (1, -1)]

    def is_bijection(self):
        image = {self(x, r) for x, r in self.points()}
        return len(image) == 2 * self.n and image == set(self.points())


@dataclass(frozen=True)
class ReductionReport:
    parity_via_iteration: int
    parity_direct: int
    agree: bool


def lift(f):
    return LiftedFunction(f)


def iterate_trace(g, start, m):
    """``[start, g(start), ..., g^m(start)]``."""
    if m < 0:
        raise ValueError(f"iteration count must be >= 0, got {m}")
    trace = [tuple(start)]
    point = tuple(start)
    for _ in range(m):
        point = g(*point)
        trace.append(point)
    return trace


def classical_iterate(g, start, m):
    return iterate_trace(g, start, m)[-1]


def point_index(x, r):
    """Linear index ``2(x - 1) + (0 if r == +1 else 1)``."""
    return 2 * (x - 1) + (0 if r == 1 else 1)


def permutation_oracle(g):
    """``2N x 2N`` 0/1 matrix with ``U |x, r> = |g(x, r)>``."""
    size = 2 * g.n
    u = np.zeros((size, size), dtype=complex)
    for x, r in g.points():
        u[point_index(*g(x, r)), point_index(x, r)] = 1.0
    return u


def reduction_demo(f):
    g = lift(f)
    end = classical_iterate(g, (1, 1), f.n)
    if end[0] != 1:
        raise ArithmeticError(f"{f.n} steps from (1, +1) ended at x = {end[0]}")
    direct = parity(f)
    return ReductionReport(end[1], direct, end[1] == direct)
