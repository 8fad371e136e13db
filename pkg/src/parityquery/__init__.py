"""Quantum query simulation for the parity problem.

Oracles for sign functions, a statevector runner for fixed-query
algorithms, the exact ``N/2``-query parity algorithm, exhaustive checks of the
matching lower bound, and the reduction of parity to iterated function
evaluation.
"""

from .algorithm import (
    QueryAlgorithm,
    SuccessReport,
    acceptance_probabilities,
    acceptance_probability,
    evaluate_success,
    random_algorithm,
    run,
)
from .bound import (
    CorrelationReport,
    FourierTable,
    SweepReport,
    degree_check,
    fourier_coefficients,
    impossibility_sweep,
    parity_correlation,
)
from .iterate import classical_iterate, lift, permutation_oracle, reduction_demo
from .numerics import adjoint, apply, haar_unitary, inner, is_unitary, random_projector
from .optimal import build_even_optimal, build_odd_optimal, build_optimal, verify_exactness
from .oracle import (
    OracleDims,
    SignFunction,
    basis_change,
    decode,
    encode,
    enumerate_functions,
    oracle_computational,
    oracle_phase,
    parity,
)

__version__ = "0.1.0"
