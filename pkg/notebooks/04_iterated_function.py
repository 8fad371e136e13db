# %% [markdown]
# # Parity as an iterated function
#
# Lift `f` to the permutation `g(x, r) = (x + 1, r f(x))` on `2N` points.
# Walking `N` steps from `(1, +1)` returns to `x = 1` with `r` equal to the
# parity. A quantum routine computing `N`-th iterates in fewer than `N/2`
# applications of `g` would beat the parity lower bound.

# %%
import numpy as np

from parityquery import decode, lift, parity, permutation_oracle
from parityquery.iterate import iterate_trace, point_index

f = decode("+--+-")
g = lift(f)
print(iterate_trace(g, (1, 1), f.n), "parity", parity(f))

# %%
u = permutation_oracle(g)
start = np.zeros(2 * f.n)
start[point_index(1, 1)] = 1
end = np.linalg.matrix_power(u, f.n) @ start
print("lands on", [(x, r) for x in range(1, f.n + 1) for r in (1, -1) if end[point_index(x, r)].real == 1])
