# %% [markdown]
# # Exact parity with N/2 queries
#
# The uniform superposition of the `|x, a>` states is split into two halves
# that are cycled by a shift between queries. Each amplitude ends up
# multiplied by the product of `f` over its half, so the final state is
# `+-psi0` for even parity and orthogonal to `psi0` for odd parity.

# %%
import numpy as np

from parityquery import acceptance_probabilities, build_optimal, verify_exactness
from parityquery.algorithm import parity_vector

alg = build_optimal(6)
probs = acceptance_probabilities(alg)
print("queries:", alg.k)
print("all probabilities in {0, 1}:", np.allclose(probs, np.round(probs)))
print("matches parity:", np.allclose(probs, (1 + parity_vector(6)) / 2))

# %% [markdown]
# For odd `N` the state `|1, s>`, which every oracle leaves alone, pads the
# domain to an even size, at the price of one extra query.

# %%
for n in range(2, 11):
    print(verify_exactness(n))
