"""Periodic grid, Fourier coefficients, Fejér means and Fourier multipliers.

Grid points are x_i = -pi + 2*pi*i/M.  Coefficients use the normalisation

    f_hat(j) = (1/M) * sum_i f(x_i) exp(-i j x_i)

so that f = sum_j f_hat(j) exp(i j x) and the L2 norm over [-pi, pi) is
sqrt(2*pi * sum_j |f_hat(j)|**2).  Coefficient arrays are stored in FFT
order; ``SpectralGrid.frequencies`` gives the integer frequency of each
slot.  For even M the unmatched slot is labelled +M/2 (the Nyquist mode).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import AliasingRisk, GridMismatch, IndexOutOfRange, LengthMismatch
from .kernel import eval_kernel_closed, fejer_hat
from .lacunary import LacunarySequence

PARSEVAL_RTOL = 1e-10


@dataclass(frozen=True)
class SpectralGrid:
    size: int

    def __post_init__(self):
        if int(self.size) != self.size or self.size < 2:
            raise ValueError(f"grid size must be an integer >= 2, got {self.size!r}")

    @property
    def max_frequency(self) -> int:
        return (self.size - 1) // 2

    @property
    def nyquist(self) -> int | None:
        return self.size // 2 if self.size % 2 == 0 else None

    @cached_property
    def points(self) -> np.ndarray:
        x = -np.pi + 2.0 * np.pi * np.arange(self.size) / self.size
        x.flags.writeable = False
        return x

    @cached_property
    def frequencies(self) -> np.ndarray:
        j = np.fft.fftfreq(self.size, 1.0 / self.size).round().astype(np.int64)
        if self.nyquist is not None:
            j[self.nyquist] = self.nyquist
        j.flags.writeable = False
        return j

    @cached_property
    def _phase(self) -> np.ndarray:
        # exp(-i j x_0) with x_0 = -pi is (-1)**j
        p = np.where(self.frequencies % 2 == 0, 1.0, -1.0)
        p.flags.writeable = False
        return p

    def index_of(self, j: int) -> int:
        if self.nyquist is not None and j == self.nyquist:
            return self.nyquist
        if abs(j) > self.max_frequency:
            raise AliasingRisk(f"frequency {j} not represented on a grid of size {self.size}")
        return j % self.size

    def require_order(self, n: int) -> None:
        if n > self.max_frequency:
            raise AliasingRisk(
                f"kernel order {n} exceeds max representable frequency "
                f"{self.max_frequency} on a grid of size {self.size}")


def forward_transform(f: "Signal") -> np.ndarray:
    """Fourier coefficients of ``f`` in FFT order."""
    return f.coefficients


def _forward(grid: SpectralGrid, samples: np.ndarray) -> np.ndarray:
    return np.fft.fft(samples) * grid._phase / grid.size


def inverse_transform(grid: SpectralGrid, coefficients) -> np.ndarray:
    """Grid samples of sum_j c_j exp(i j x)."""
    c = np.asarray(coefficients, dtype=complex)
    if c.shape != (grid.size,):
        raise LengthMismatch(f"expected {grid.size} coefficients, got shape {c.shape}")
    return np.fft.ifft(c * grid._phase) * grid.size


class Signal:
    """Immutable complex signal on a grid, holding samples and coefficients.

    Build it from either representation; the other one is computed on first
    access and cached.
    """

    def __init__(self, grid: SpectralGrid, samples=None, coefficients=None):
        if (samples is None) == (coefficients is None):
            raise ValueError("give exactly one of samples or coefficients")
        self.grid = grid
        self._samples = None if samples is None else self._frozen(samples)
        self._coefficients = None if coefficients is None else self._frozen(coefficients)

    def _frozen(self, values):
        a = np.array(values, dtype=complex)
        if a.shape != (self.grid.size,):
            raise LengthMismatch(f"expected {self.grid.size} values, got shape {a.shape}")
        a.flags.writeable = False
        return a

    @classmethod
    def from_samples(cls, grid, samples):
        return cls(grid, samples=samples)

    @classmethod
    def from_coefficients(cls, grid, coefficients):
        return cls(grid, coefficients=coefficients)

    @classmethod
    def from_function(cls, grid, func):
        return cls(grid, samples=func(grid.points))

    @classmethod
    def zeros(cls, grid):
        return cls(grid, coefficients=np.zeros(grid.size))

    @property
    def samples(self) -> np.ndarray:
        if self._samples is None:
            self._samples = self._frozen(inverse_transform(self.grid, self._coefficients))
        return self._samples

    @property
    def coefficients(self) -> np.ndarray:
        if self._coefficients is None:
            self._coefficients = self._frozen(_forward(self.grid, self._samples))
        return self._coefficients

    def coefficient(self, j: int) -> complex:
        return complex(self.coefficients[self.grid.index_of(j)])

    def degree(self, rtol: float = 1e-12) -> int:
        """Largest |j| carrying a coefficient above ``rtol`` times the peak."""
        mag = np.abs(self.coefficients)
        peak = mag.max()
        if peak == 0:
            return 0
        return int(np.abs(self.grid.frequencies[mag > rtol * peak]).max())

    def _check(self, other):
        if not isinstance(other, Signal):
            return NotImplemented
        if other.grid != self.grid:
            raise GridMismatch("signals live on different grids")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Signal(self.grid, coefficients=self.coefficients + other.coefficients)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Signal(self.grid, coefficients=self.coefficients - other.coefficients)

    def __mul__(self, scalar):
        if not np.isscalar(scalar):
            return NotImplemented
        return Signal(self.grid, coefficients=self.coefficients * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return Signal(self.grid, coefficients=-self.coefficients)

    def __repr__(self):
        return f"Signal(grid={self.grid.size})"


def l2_norm(f: Signal) -> float:
    """L2 norm over [-pi, pi), computed in space and in frequency.

    The two values must agree to ``PARSEVAL_RTOL``; the frequency-side
    value is returned.
    """
    grid = f.grid
    freq_sq = 2.0 * np.pi * np.sum(np.abs(f.coefficients) ** 2)
    space_sq = 2.0 * np.pi / grid.size * np.sum(np.abs(f.samples) ** 2)
    scale = max(freq_sq, space_sq)
    if abs(freq_sq - space_sq) > PARSEVAL_RTOL * scale + 1e-300:
        raise ArithmeticError(f"Parseval mismatch: {freq_sq!r} vs {space_sq!r}")
    return float(np.sqrt(freq_sq))


def fejer_mean(f: Signal, n: int) -> Signal:
    """sigma_n f, obtained by damping each coefficient with the tent."""
    f.grid.require_order(n)
    return Signal(f.grid, coefficients=f.coefficients * fejer_hat(n, f.grid.frequencies))


def convolve_direct(f: Signal, n: int, chunk: int = 256) -> Signal:
    """sigma_n f by quadrature of (1/2pi) * integral of K_n(x - t) f(t) dt.

    Uses closed-form kernel values and never touches the FFT, so it serves as
    an independent check on ``fejer_mean``.  Cost is O(M**2).
    """
    grid = f.grid
    grid.require_order(n)
    M = grid.size
    kv = eval_kernel_closed(n, 2.0 * np.pi * np.arange(M) / M)
    samples = f.samples
    out = np.empty(M, dtype=complex)
    cols = np.arange(M)
    for start in range(0, M, chunk):
        rows = np.arange(start, min(start + chunk, M))
        out[rows] = kv[(rows[:, None] - cols[None, :]) % M] @ samples / M
    return Signal(grid, samples=out)


def block_symbol_sum(seq: LacunarySequence, weights, first: int, freqs) -> np.ndarray:
    """sum_k w_k * (hat K_{n_{k+1}}(j) - hat K_{n_k}(j)) for k = first, first+1, ...

    Pure tent arithmetic, evaluated at any integer (or real) frequencies.
    """
    w = np.asarray(weights, dtype=float)
    last = first + len(w) - 1
    if first < 1 or last >= len(seq):
        raise IndexOutOfRange(f"blocks {first}..{last} need terms up to n_{last + 1}; "
                              f"sequence has {len(seq)}")
    freqs = np.asarray(freqs)
    out = np.zeros(freqs.shape)
    lower = fejer_hat(seq[first], freqs)
    for i, c in enumerate(w):
        upper = fejer_hat(seq[first + i + 1], freqs)
        if c != 0:
            out += c * (upper - lower)
        lower = upper
    return out


def block_difference(f: Signal, seq: LacunarySequence, k: int) -> Signal:
    """sigma_{n_{k+1}} f - sigma_{n_k} f (1-based k)."""
    if not 1 <= k < len(seq):
        raise IndexOutOfRange(f"block index {k} outside 1..{len(seq) - 1}")
    return fejer_mean(f, seq[k + 1]) - fejer_mean(f, seq[k])


@dataclass(frozen=True, eq=False)
class Multiplier:
    """Real symbol m(j) on a grid, stored in FFT order."""

    grid: SpectralGrid
    symbol: np.ndarray

    def __post_init__(self):
        s = np.array(self.symbol, dtype=float)
        if s.shape != (self.grid.size,):
            raise LengthMismatch(f"expected {self.grid.size} symbol values, got {s.shape}")
        if not np.all(np.isfinite(s)):
            raise ValueError("multiplier symbol must be finite")
        s.flags.writeable = False
        object.__setattr__(self, "symbol", s)

    @classmethod
    def constant(cls, grid, value):
        return cls(grid, np.full(grid.size, float(value)))

    def at(self, j: int) -> float:
        return float(self.symbol[self.grid.index_of(j)])

    def is_even(self, atol: float = 0.0) -> bool:
        mirrored = self.symbol[(-np.arange(self.grid.size)) % self.grid.size]
        return bool(np.all(np.abs(mirrored - self.symbol) <= atol))


def build_multiplier(seq: LacunarySequence, coeffs: Sequence[float], N: int,
                     grid: SpectralGrid) -> Multiplier:
    """Symbol of T_N f = sum_{k=1}^{N} c_k (sigma_{n_{k+1}} f - sigma_{n_k} f)."""
    if int(N) != N or N < 1 or N >= len(seq):
        raise IndexOutOfRange(f"N={N} must satisfy 1 <= N < {len(seq)}")
    if len(coeffs) < N:
        raise LengthMismatch(f"need {N} coefficients, got {len(coeffs)}")
    grid.require_order(seq[N + 1])
    sym = block_symbol_sum(seq, np.asarray(coeffs[:N], dtype=float), 1, grid.frequencies)
    if grid.nyquist is not None:
        sym[grid.nyquist] = 0.0
    m = Multiplier(grid, sym)
    if not m.is_even():
        raise ArithmeticError("tent-built multiplier lost even symmetry")
    return m


def apply_multiplier(m: Multiplier, f: Signal) -> Signal:
    if m.grid != f.grid:
        raise GridMismatch("multiplier and signal live on different grids")
    return Signal(f.grid, coefficients=m.symbol * f.coefficients)


def operator_norm(m: Multiplier) -> tuple[float, int]:
    """L2 operator norm sup_j |m(j)| and a frequency attaining it.

    Ties go to the smallest |j|, and to the positive one of a +/- pair.
    """
    mag = np.abs(m.symbol)
    top = float(mag.max())
    freqs = m.grid.frequencies[mag == top]
    witness = min(freqs.tolist(), key=lambda j: (abs(j), -j))
    return top, int(witness)


# -- text import / export ------------------------------------------------

def write_signal_csv(path, f: Signal) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["index", "x", "re", "im"])
        for i, (x, v) in enumerate(zip(f.grid.points, f.samples)):
            w.writerow([i, repr(float(x)), repr(float(v.real)), repr(float(v.imag))])


def read_signal_csv(path) -> Signal:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    grid = SpectralGrid(len(rows))
    samples = np.zeros(grid.size, dtype=complex)
    for row in rows:
        samples[int(row["index"])] = complex(float(row["re"]), float(row["im"]))
    return Signal(grid, samples=samples)


def write_coefficients_csv(path, f: Signal) -> None:
    order = np.argsort(f.grid.frequencies, kind="stable")
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["j", "re", "im"])
        for i in order:
            c = f.coefficients[i]
            w.writerow([int(f.grid.frequencies[i]), repr(float(c.real)), repr(float(c.imag))])


def read_coefficients_csv(path, grid: SpectralGrid | None = None) -> Signal:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    grid = grid or SpectralGrid(len(rows))
    coeffs = np.zeros(grid.size, dtype=complex)
    for row in rows:
        coeffs[grid.index_of(int(row["j"]))] = complex(float(row["re"]), float(row["im"]))
    return Signal(grid, coefficients=coeffs)
