# %% [markdown]
# # T_N as a Fourier multiplier
#
# T_N f = sum_k c_k (sigma_{n_{k+1}} f - sigma_{n_k} f) multiplies each
# coefficient by m_N(j).  Its L2 norm is sup_j |m_N(j)|, reached by the pure
# mode at the maximising frequency.

# %%
import numpy as np

from fejer import (SpectralGrid, apply_multiplier, build_multiplier, check_uniform_bound,
                   gen_signal, generate, l2_norm, operator_norm)

grid = SpectralGrid(1024)
seq = generate(1, 2.0, 10)
N = 8
rng = np.random.default_rng(0)
c = rng.uniform(-1, 1, N)
m = build_multiplier(seq, c, N, grid)
sup, witness = operator_norm(m)
C_sym = check_uniform_bound(seq, N).max_abs_sum
print(f"sup |m_N| = {sup:.6f} at j = {witness};  ||c||_inf * C_sym = {np.abs(c).max() * C_sym:.6f}")

# %% [markdown]
# Plancherel: the norm of T_N f in space equals the weighted coefficient sum.

# %%
f = gen_signal("random_bandlimited", grid, B=64, seed=1)
out = apply_multiplier(m, f)
space = np.sqrt(2 * np.pi / grid.size * np.sum(np.abs(out.samples) ** 2))
freq = np.sqrt(2 * np.pi * np.sum((m.symbol * np.abs(f.coefficients)) ** 2))
print(f"space norm {space:.15f}\nfreq  norm {freq:.15f}")
print(f"ratio ||T_N f|| / ||f|| = {l2_norm(out) / l2_norm(f):.6f}")

mode = gen_signal("pure_mode", grid, j=witness)
print(f"extremal mode ratio     = {l2_norm(apply_multiplier(m, mode)) / l2_norm(mode):.6f}")
