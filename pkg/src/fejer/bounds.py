"""Numerical checks of the uniform block-sum bound and the L2 operator bounds.

For a lacunary sequence and N blocks, write

    D_k(j) = hat K_{n_{k+1}}(j) - hat K_{n_k}(j),    I(j) = sum_{k<=N} |D_k(j)|.

The bound under test is max_j I(j) <= 2*alpha/(alpha - 1).  For the Fejér
tent every D_k is nonnegative, so I(j) telescopes to
hat K_{n_{N+1}}(j) - hat K_{n_1}(j) <= 1, which is checked as well.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import IndexOutOfRange, InvalidAlpha, ZeroSignal
from .kernel import fejer_hat
from .lacunary import LacunarySequence, geometric_tail_bound
from .spectral import (Signal, apply_multiplier, block_symbol_sum, build_multiplier, l2_norm,
                       operator_norm)

TENT_TOL = 1e-12
TRANSFORM_TOL = 1e-9
BLOCK_SIGN_TOL = 1e-15
TELESCOPE_TOL = 1e-13
SCAN_CHUNK = 1 << 21


@dataclass
class BoundReport:
    n1: int
    alpha: float
    N: int
    paper_bound: float
    max_abs_sum: float
    sup_symbol: float
    witness_j: int
    telescope_max: float
    min_block: float = 0.0
    telescope_residual: float = 0.0
    worst_ratio: float | None = None
    passed: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.passed.values())

    def to_dict(self) -> dict:
        d = {
            "alpha": self.alpha,
            "N": self.N,
            "paper_bound": self.paper_bound,
            "max_abs_sum": self.max_abs_sum,
            "sup_symbol": self.sup_symbol,
            "witness_j": self.witness_j,
            "telescope_max": self.telescope_max,
            "pass": dict(self.passed),
        }
        if self.worst_ratio is not None:
            d["worst_ratio"] = self.worst_ratio
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def crossing_index(seq: LacunarySequence, j: int) -> int | None:
    """First (1-based) k with |j| <= n_k, or None past the last term."""
    a = abs(j)
    for k, n in enumerate(seq.terms, start=1):
        if a <= n:
            return k
    return None


def _blocks_at(seq, N, j):
    if int(N) != N or not 1 <= N < len(seq):
        raise IndexOutOfRange(f"N={N} must satisfy 1 <= N < {len(seq)}")
    t = np.array([fejer_hat(n, j) for n in seq.terms[:N + 1]])
    return t[1:] - t[:-1]


def abs_sum_profile(seq: LacunarySequence, N: int, j: int) -> tuple[float, float]:
    """Split I(j) into (I1, I2).

    I1 gathers the blocks with n_{k+1} < |j|, where both tents vanish, so it
    is exactly zero.  I2 is everything else, including the block that
    straddles |j|.
    """
    d = np.abs(_blocks_at(seq, N, j))
    upper = np.asarray(seq.terms[1:N + 1])
    dead = upper < abs(j)
    return float(d[dead].sum()), float(d[~dead].sum())


@dataclass
class ProofChain:
    """Each successive upper bound for the blocks at and above the crossing index.

    ``straddle`` is the block k0 - 1, whose lower tent is already zero; it is
    not covered by the linear formula and is kept separate.
    """

    j: int
    k0: int | None
    straddle: float
    exact: float
    split: float
    drop_one: float
    crossing: float
    geometric: float

    def steps(self):
        return [self.exact, self.split, self.drop_one, self.crossing, self.geometric]

    def holds(self, tol: float = TENT_TOL) -> bool:
        s = self.steps()
        return all(a <= b + tol for a, b in zip(s, s[1:]))


def proof_chain(seq: LacunarySequence, N: int, j: int,
                alpha: float | None = None) -> ProofChain:
    alpha = seq.alpha if alpha is None else alpha
    d = _blocks_at(seq, N, j)
    a = abs(j)
    k0 = crossing_index(seq, j)
    t = np.asarray(seq.terms, dtype=float)
    straddle = 0.0
    exact = split = drop_one = crossing = 0.0
    if k0 is not None and k0 <= N:
        if k0 > 1:
            straddle = float(abs(d[k0 - 2]))
        ks = np.arange(k0, N + 1)          # 1-based block indices
        lo, hi = t[ks - 1], t[ks]
        exact = float(np.abs(d[ks - 1]).sum())
        split = float(np.sum(a / (hi + 1)) + np.sum(a / (lo + 1)))
        drop_one = float(np.sum(a / hi) + np.sum(a / lo))
        nk0 = t[k0 - 1]
        crossing = float(np.sum(nk0 / hi) + np.sum(nk0 / lo))
    elif k0 is not None and k0 == N + 1:
        straddle = float(abs(d[N - 1]))
    return ProofChain(int(j), k0, straddle, exact, split, drop_one, crossing,
                      geometric_tail_bound(alpha))


def _resolve_alpha(seq, alpha):
    if alpha is None:
        return seq.alpha
    if not alpha > 1:
        raise InvalidAlpha(f"alpha must be > 1, got {alpha!r}")
    if alpha > seq.alpha * (1 + TENT_TOL):
        raise InvalidAlpha(f"alpha {alpha!r} exceeds the certified ratio {seq.alpha!r}")
    return float(alpha)


def _scan(seq: LacunarySequence, Ns: Iterable[int], chunk: int = SCAN_CHUNK) -> dict:
    """Exhaustive sweep over integer frequencies 0 <= j <= n_{N+1}.

    Every quantity depends on |j| only, so negative frequencies repeat the
    nonnegative ones exactly.  One pass serves all requested N.
    """
    wanted = sorted(set(int(N) for N in Ns))
    if not wanted or wanted[0] < 1 or wanted[-1] >= len(seq):
        raise IndexOutOfRange(f"N values {wanted} must lie in 1..{len(seq) - 1}")
    top = wanted[-1]
    terms = seq.terms
    stats = {N: dict(max_abs=0.0, witness=0, sup_signed=0.0, tel_max=0.0,
                     min_block=np.inf, residual=0.0) for N in wanted}
    for start in range(0, terms[top] + 1, chunk):
        j = np.arange(start, min(start + chunk, terms[top] + 1), dtype=float)
        lower = fejer_hat(terms[0], j)
        base = lower
        run_abs = np.zeros_like(j)
        run_signed = np.zeros_like(j)
        chunk_min = np.inf
        for k in range(1, top + 1):
            n_up = terms[k]
            if start > n_up:
                # both tents vanish on the whole chunk for this and all lower blocks
                lower = np.zeros_like(j)
                continue
            upper = fejer_hat(n_up, j)
            d = upper - lower
            chunk_min = min(chunk_min, float(d.min()))
            run_abs += np.abs(d)
            run_signed += d
            lower = upper
            if k in stats:
                s = stats[k]
                s["min_block"] = min(s["min_block"], chunk_min)
                i = int(np.argmax(run_abs))
                if run_abs[i] > s["max_abs"]:
                    s["max_abs"] = float(run_abs[i])
                    s["witness"] = int(j[i])
                s["sup_signed"] = max(s["sup_signed"], float(np.abs(run_signed).max()))
                tel = upper - base
                s["tel_max"] = max(s["tel_max"], float(tel.max()))
                s["residual"] = max(s["residual"], float(np.abs(run_signed - tel).max()))
    return stats


def check_uniform_bounds(seq: LacunarySequence, Ns: Iterable[int], alpha: float | None = None,
                         chunk: int = SCAN_CHUNK) -> list[BoundReport]:
    """``check_uniform_bound`` for several N sharing one frequency sweep."""
    alpha = _resolve_alpha(seq, alpha)
    pb = geometric_tail_bound(alpha)
    stats = _scan(seq, Ns, chunk)
    reports = []
    for N in sorted(stats):
        s = stats[N]
        passed = {
            "paper_bound": s["max_abs"] <= pb + TENT_TOL,
            "nonnegative_blocks": s["min_block"] >= -BLOCK_SIGN_TOL,
            "sharp_telescoping": (s["max_abs"] <= 1.0 + TENT_TOL
                                  and s["residual"] <= TELESCOPE_TOL),
            "domination": s["sup_signed"] <= s["max_abs"] + TENT_TOL,
        }
        reports.append(BoundReport(
            n1=seq.n1, alpha=alpha, N=N, paper_bound=pb, max_abs_sum=s["max_abs"],
            sup_symbol=s["sup_signed"], witness_j=s["witness"], telescope_max=s["tel_max"],
            min_block=float(s["min_block"]), telescope_residual=s["residual"], passed=passed))
    return reports


def check_uniform_bound(seq: LacunarySequence, N: int, alpha: float | None = None,
                        chunk: int = SCAN_CHUNK) -> BoundReport:
    """Exhaustively verify max_j I(j) <= 2 alpha/(alpha - 1) for N blocks.

    ``alpha`` defaults to the certified ratio of ``seq``; a smaller constant
    (e.g. the one a sequence was generated with) may be passed instead.
    ``sup_symbol`` here is the symbol with every coefficient equal to one.
    """
    return check_uniform_bounds(seq, [N], alpha, chunk)[0]


def real_frequency_sweep(seq: LacunarySequence, N: int, per_unit: int = 16) -> float:
    """max of I(xi) over a fine grid of real xi in [0, n_{N+1} + 1].

    Only a curiosity: the L2 argument uses integer frequencies exclusively.
    """
    xi = np.linspace(0.0, seq[N + 1] + 1.0, per_unit * (seq[N + 1] + 1) + 1)
    t = np.array([fejer_hat(n, xi) for n in seq.terms[:N + 1]])
    return float(np.abs(np.diff(t, axis=0)).sum(axis=0).max())


def _coefficient_sup(coeffs, N):
    c = np.asarray(coeffs[:N], dtype=float)
    return float(np.abs(c).max()) if c.size else 0.0


def operator_bound_check(seq: LacunarySequence, coeffs: Sequence[float], N: int,
                         signals: Sequence[Signal]) -> BoundReport:
    """Check ||T_N f|| <= sup|m_N| ||f|| <= ||c||_inf * C_sym * ||f|| on each signal."""
    if not signals:
        raise ValueError("need at least one signal")
    grid = signals[0].grid
    m = build_multiplier(seq, coeffs, N, grid)
    sup, witness = operator_norm(m)
    base = check_uniform_bound(seq, N)
    cinf = _coefficient_sup(coeffs, N)
    worst = 0.0
    norm_ok = final_ok = True
    for f in signals:
        nf = l2_norm(f)
        if nf == 0:
            raise ZeroSignal("operator ratios need nonzero signals")
        nt = l2_norm(apply_multiplier(m, f))
        worst = max(worst, nt / nf)
        norm_ok &= nt <= sup * nf + TRANSFORM_TOL
        final_ok &= nt <= cinf * base.max_abs_sum * nf + TRANSFORM_TOL
    passed = {
        "paper_bound": base.passed["paper_bound"],
        "domination": sup <= cinf * base.max_abs_sum + TENT_TOL,
        "operator_norm": bool(norm_ok),
        "final_inequality": bool(final_ok),
    }
    return BoundReport(
        n1=seq.n1, alpha=base.alpha, N=N, paper_bound=base.paper_bound,
        max_abs_sum=base.max_abs_sum, sup_symbol=sup, witness_j=witness,
        telescope_max=base.telescope_max, min_block=base.min_block,
        telescope_residual=base.telescope_residual, worst_ratio=worst, passed=passed)


@dataclass
class StrongTypeReport:
    K_max: int
    c_inf: float
    C_sym: float
    C_obs: float
    ratios: list
    tail_bounds: list
    empirical_constant: float
    passed: bool

    def to_dict(self):
        return asdict(self)


def strong_type_22_check(seq: LacunarySequence, coeffs: Sequence[float], K_max: int,
                         signals: Sequence[Signal]) -> StrongTypeReport:
    """Truncate the full series at K_max blocks and bound ||G f|| / ||f||.

    ``tail_bounds[i]`` bounds the relative size of the omitted blocks for
    signal i: every later block sum is at most deg(f) / (n_{K_max} + 1).
    """
    grid = signals[0].grid
    m = build_multiplier(seq, coeffs, K_max, grid)
    C_sym = check_uniform_bound(seq, K_max).max_abs_sum
    cinf = _coefficient_sup(coeffs, K_max)
    C_obs = cinf * C_sym
    ratios, tails = [], []
    for f in signals:
        nf = l2_norm(f)
        if nf == 0:
            raise ZeroSignal("strong type ratios need nonzero signals")
        ratios.append(l2_norm(apply_multiplier(m, f)) / nf)
        tails.append(f.degree() / (seq[K_max] + 1))
    emp = max(ratios)
    return StrongTypeReport(K_max, cinf, C_sym, C_obs, ratios, tails, emp,
                            bool(emp <= C_obs + TRANSFORM_TOL))

