"""Lacunary integer sequences.

A sequence n_1 < n_2 < ... of positive integers is lacunary when every
consecutive ratio n_{k+1}/n_k is at least some alpha > 1.  The stored
``alpha`` is always the certified minimum ratio of the concrete terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import EmptySequence, IndexOutOfRange, InvalidAlpha, NonPositiveTerm, NotLacunary

RATIO_TOL = 1e-12


@dataclass(frozen=True)
class LacunarySequence:
    terms: tuple[int, ...]
    alpha: float

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, k):
        """1-based access: ``seq[k]`` is n_k."""
        if not 1 <= k <= len(self.terms):
            raise IndexOutOfRange(f"index {k} outside 1..{len(self.terms)}")
        return self.terms[k - 1]

    @property
    def n1(self):
        return self.terms[0]

    def ratios(self):
        t = np.asarray(self.terms, dtype=float)
        return t[1:] / t[:-1]

    def truncate(self, count):
        return validate(self.terms[:count])


def _check_alpha(alpha):
    if not (np.isfinite(alpha) and alpha > 1):
        raise InvalidAlpha(f"alpha must be a finite real > 1, got {alpha!r}")


def validate(terms: Sequence[int], min_alpha: float | None = None) -> LacunarySequence:
    """Check ``terms`` and certify its lacunarity constant.

    A single term is accepted with ``alpha = inf`` (no ratio constrains it).
    If ``min_alpha`` is given, a certified ratio below it raises NotLacunary.
    """
    terms = tuple(terms)
    if not terms:
        raise EmptySequence("lacunary sequence needs at least one term")
    for t in terms:
        if int(t) != t:
            raise NotLacunary(f"terms must be integers, got {t!r}")
        if t < 1:
            raise NonPositiveTerm(f"terms must be positive, got {t!r}")
    terms = tuple(int(t) for t in terms)
    if len(terms) == 1:
        alpha = math.inf
    else:
        alpha = min(b / a for a, b in zip(terms, terms[1:]))
        if alpha <= 1 + RATIO_TOL:
            raise NotLacunary(f"minimum consecutive ratio {alpha!r} is not > 1")
    if min_alpha is not None and alpha < min_alpha:
        raise NotLacunary(f"certified ratio {alpha!r} is below the required {min_alpha!r}")
    return LacunarySequence(terms, alpha)


def generate(n1: int, alpha: float, count: int) -> LacunarySequence:
    """Build ``count`` terms with n_{k+1} = max(n_k + 1, ceil(n_k * alpha)).

    ``alpha`` is read as the decimal it prints as, so ``generate(10, 1.1, 2)``
    gives (10, 11) rather than tripping over 10 * 1.1 == 11.000000000000002.
    """
    _check_alpha(alpha)
    if int(n1) != n1 or n1 < 1:
        raise NonPositiveTerm(f"n1 must be a positive integer, got {n1!r}")
    if int(count) != count or count < 1:
        raise ValueError(f"count must be a positive integer, got {count!r}")
    a = Fraction(repr(float(alpha)))
    terms = [int(n1)]
    for _ in range(int(count) - 1):
        n = terms[-1]
        terms.append(max(n + 1, math.ceil(n * a)))
    return validate(terms)


def geometric_tail_bound(alpha: float) -> float:
    """Return 2 * alpha / (alpha - 1), the bound on the absolute block sum."""
    _check_alpha(alpha)
    return 2.0 * alpha / (alpha - 1.0)


def ratio_tail_sum(seq: LacunarySequence, k0: int, last: int, shifted: bool = False) -> float:
    """Sum of n_{k0} / n_k over k = k0..last (``shifted`` uses n_{k+1}).

    For a lacunary sequence both sums are at most alpha / (alpha - 1).
    """
    top = last + 1 if shifted else last
    if not 1 <= k0 <= last or top > len(seq):
        raise IndexOutOfRange(f"range {k0}..{last} invalid for length {len(seq)}")
    t = np.asarray(seq.terms, dtype=float)
    lo = k0 if shifted else k0 - 1
    return float(np.sum(t[k0 - 1] / t[lo:top]))
