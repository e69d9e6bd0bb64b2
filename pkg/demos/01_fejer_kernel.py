# %% [markdown]
# # The Fejér kernel in space and frequency
#
# Two ways to evaluate K_n on the circle, and a check that its Fourier
# coefficients are the tent 1 - |j|/(n+1).

# %%
import numpy as np

from fejer import SpectralGrid, Signal, eval_kernel_closed, eval_kernel_sum, fejer_hat

n = 8
x = np.linspace(-np.pi, np.pi, 9)
print("x        sum-form      closed-form")
for xi, a, b in zip(x, eval_kernel_sum(n, x), eval_kernel_closed(n, x)):
    print(f"{xi:+.3f}  {a:12.8f}  {b:12.8f}")

# %% [markdown]
# The kernel is nonnegative and has unit mean, so Fejér means are averages.

# %%
grid = SpectralGrid(64)
K = Signal.from_function(grid, lambda t: eval_kernel_closed(n, t))
print("min K_n on grid:", K.samples.real.min())
print("mean of K_n    :", K.samples.real.mean())

# %% [markdown]
# Coefficients of the sampled kernel against the tent.

# %%
for j in range(0, 11):
    print(f"j={j:2d}  coefficient={K.coefficient(j).real:+.12f}  tent={fejer_hat(n, j):.12f}")
