# %% [markdown]
# # Why fewer than N/2 queries cannot work
#
# The acceptance probability of a `k`-query algorithm is a multilinear
# polynomial in `f(1), ..., f(N)` of degree at most `2k`. Parity is the single
# monomial of degree `N`, so when `2k < N` its coefficient, and the
# correlation `sum_f p(f) par(f)`, is zero. Summed over each parity class the
# acceptance probabilities are then equal, and no threshold at 1/2 separates
# the classes.

# %%
import numpy as np

from parityquery import OracleDims, fourier_coefficients, impossibility_sweep, parity_correlation, random_algorithm
from parityquery.bound import popcount

rng = np.random.default_rng(0)
alg = random_algorithm(OracleDims(6, 2), 2, 5, rng)
table = fourier_coefficients(alg)
sizes = popcount(np.arange(64))
for d in range(7):
    print(d, np.max(np.abs(table.coeffs[sizes == d])))

# %%
print(parity_correlation(alg))

# %% [markdown]
# The same holds across many random algorithms and register sizes.

# %%
for n in range(3, 11):
    print(impossibility_sweep(n, (n + 1) // 2 - 1, 50, np.random.default_rng(n)))

# %% [markdown]
# At `2k = N` the parity coefficient is free to be nonzero.

# %%
print(fourier_coefficients(random_algorithm(OracleDims(4), 2, 4, 1)).parity_coefficient)
