# %% [markdown]
# # Uniform bound on the block sums
#
# For a lacunary sequence with ratio alpha, the absolute sum of tent
# differences I(j) stays below 2*alpha/(alpha - 1) at every frequency.
# For Fejér tents the blocks are nonnegative, so I(j) telescopes and never
# exceeds 1.

# %%
from fejer import check_uniform_bounds, generate, proof_chain

for alpha in (1.1, 1.5, 2.0, 3.0):
    seq = generate(1, alpha, 14)
    reports = check_uniform_bounds(seq, range(1, 14))
    worst = max(reports, key=lambda r: r.max_abs_sum)
    print(f"alpha={alpha:<4} certified={seq.alpha:.4f} paper bound={worst.paper_bound:7.3f} "
          f"max I(j)={worst.max_abs_sum:.6f} at j={worst.witness_j} (N={worst.N})")

# %% [markdown]
# Each inequality in the chain, frequency by frequency: exact sum above the
# crossing index, then the split into two sums, dropping the +1, replacing
# |j| by n_{k0}, and finally the geometric series.

# %%
seq = generate(1, 1.5, 10)
for j in (0, 3, 7, 20, 40):
    c = proof_chain(seq, 9, j)
    steps = "  <=  ".join(f"{v:.4f}" for v in c.steps())
    print(f"j={j:3d} k0={c.k0}  straddle={c.straddle:.4f}  {steps}  holds={c.holds()}")
