# %% [markdown]
# # Two forms of the parity oracle
#
# A sign function `f` on `1..N` is queried through a unitary. In the
# computational basis it flips the target qubit when `f(x) = -1`; after a
# Hadamard on the target it becomes diagonal, with `f(x)` on `|x, a>` and `+1`
# on `|x, s>`.

# %%
import numpy as np

from parityquery import OracleDims, basis_change, decode, oracle_computational, oracle_phase, parity

f = decode("+-")
print("parity:", parity(f))
print(oracle_computational(f).real)

# %%
dims = OracleDims(2)
b = basis_change(dims)
print(np.round((b @ oracle_computational(f, dims) @ b).real, 12))
print(oracle_phase(f).real)

# %% [markdown]
# The work register is a spectator: with `W = 2` the oracle is two copies of
# the same block.

# %%
print(oracle_phase(f, OracleDims(2, 2)).real.diagonal())
