"""Fejér kernel in space and frequency.

The kernel of order ``n`` is

    K_n(x) = sum_{|j| <= n} (1 - |j|/(n+1)) exp(-i j x)

and its Fourier coefficients form a tent supported on ``|j| <= n``.
All functions accept scalars or numpy arrays for the point argument and
return a Python float for scalar input.
"""

from dataclasses import dataclass

import numpy as np

# |sin(x/2)| below this switches the closed form to its limit value n + 1.
_SINGULAR_EPS = 1e-12


def _check_order(n):
    if int(n) != n or n < 0:
        raise ValueError(f"kernel order must be a nonnegative integer, got {n!r}")
    return int(n)


def _scalar_or_array(x, value):
    if np.ndim(x) == 0:
        return float(value)
    return value


def eval_kernel_sum(n, x):
    """Evaluate K_n(x) by direct summation of its cosine series.

    Uses ``1 + 2 * sum_{j=1}^{n} (1 - j/(n+1)) cos(j x)``, which is the
    exponential sum with the conjugate pairs folded together, so the
    result is real by construction.
    """
    n = _check_order(n)
    xa = np.asarray(x, dtype=float)
    out = np.ones_like(xa)
    if n > 0:
        j = np.arange(1, n + 1, dtype=float)
        weights = 1.0 - j / (n + 1)
        flat = xa.reshape(-1)
        # chunk to keep the (points x terms) matrix bounded
        res = np.empty_like(flat)
        step = max(1, 2**20 // n)
        for start in range(0, flat.size, step):
            block = flat[start:start + step]
            res[start:start + step] = 1.0 + 2.0 * np.cos(np.outer(block, j)) @ weights
        out = res.reshape(xa.shape)
    return _scalar_or_array(x, out)


def eval_kernel_closed(n, x):
    """Evaluate K_n(x) = (1/(n+1)) * (sin((n+1)x/2) / sin(x/2))**2.

    At multiples of 2*pi the removable singularity is replaced by n + 1.
    """
    n = _check_order(n)
    xa = np.asarray(x, dtype=float)
    half = np.sin(xa / 2.0)
    singular = np.abs(half) < _SINGULAR_EPS
    safe = np.where(singular, 1.0, half)
    val = (np.sin((n + 1) * xa / 2.0) / safe) ** 2 / (n + 1)
    out = np.where(singular, float(n + 1), val)
    return _scalar_or_array(x, out)


def fejer_hat(n, xi):
    """Tent profile of the kernel: 1 - |xi|/(n+1) for |xi| <= n, else 0.

    ``xi`` may be any real (not just an integer frequency).
    """
    n = _check_order(n)
    a = np.abs(np.asarray(xi, dtype=float))
    out = np.where(a <= n, 1.0 - a / (n + 1), 0.0)
    return _scalar_or_array(xi, out)


@dataclass(frozen=True)
class FejerKernel:
    """Fejér kernel of a fixed order, bundling the three evaluators."""

    order: int

    def __post_init__(self):
        _check_order(self.order)

    def __call__(self, x):
        return eval_kernel_closed(self.order, x)

    def by_sum(self, x):
        return eval_kernel_sum(self.order, x)

    def hat(self, xi):
        return fejer_hat(self.order, xi)
