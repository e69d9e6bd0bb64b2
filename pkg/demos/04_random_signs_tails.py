# %% [markdown]
# # Random signs and tail norms
#
# Unconditional convergence in practice: whatever the signs, the tails
# sum_{k>=M} eps_k (sigma_{n_{k+1}} f - sigma_{n_k} f) shrink, for a
# band-limited f of degree B at least as fast as B/(n_M + 1) * ||f||.

# %%
from fejer import SpectralGrid, gen_signal, generate, l2_norm
from fejer.experiments import convergence_study, sweep, sweep_csv

grid = SpectralGrid(4096)
seq = generate(1, 2.0, 16)
f = gen_signal("random_bandlimited", grid, B=32, seed=0)
nf = l2_norm(f)
for r in convergence_study(f, seq, trials=200, seed=1):
    print(f"M={r.start:2d} n_M={seq[r.start]:6d}  sup/||f||={r.sup / nf:.5f}  "
          f"bound/||f||={r.bound / nf:.5f}")

# %% [markdown]
# A small parameter sweep, as written by ``fejer sweep``.

# %%
rows = sweep([1.5, 2.0, 3.0], [2, 6], SpectralGrid(256), trials=20, seed=7)
print(sweep_csv(rows))
