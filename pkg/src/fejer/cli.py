"""Command line front end: ``fejer {kernel,bound,converge,sweep}``.

Exit codes: 0 when every check passes, 1 when a numerical check fails,
2 for configuration or usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import experiments as ex
from .bounds import check_uniform_bound
from .errors import FejerError, InvalidAlpha
from .kernel import eval_kernel_closed, eval_kernel_sum, fejer_hat
from .lacunary import generate
from .spectral import Signal, SpectralGrid

EXIT_OK, EXIT_CHECK, EXIT_CONFIG = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    M: int = 4096
    n1: int = 1
    alpha: float = 2.0
    N: int = 10
    trials: int = 200
    seed: int = 0
    out: str | None = None
    format: str = "csv"

    def validate(self):
        if not (16 <= self.M <= 1 << 22 and self.M & (self.M - 1) == 0):
            raise ConfigError(f"M must be a power of two in [2^4, 2^22], got {self.M}")
        if not self.alpha > 1:
            raise InvalidAlpha(f"alpha must be > 1, got {self.alpha}")
        if self.N < 1:
            raise ConfigError(f"N must be >= 1, got {self.N}")
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.seed < 1 << 64:
            raise ConfigError("seed must be an unsigned 64-bit integer")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.format!r}")
        return self


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([repr(v) if isinstance(v, float) else v for v in r])
    return buf.getvalue()


def cmd_kernel(n: int, cfg: RunConfig) -> int:
    """Tabulate K_n on the grid and its Fourier coefficients against the tent."""
    grid = SpectralGrid(cfg.M)
    grid.require_order(n)
    x = grid.points
    k_sum = eval_kernel_sum(n, x)
    k_closed = eval_kernel_closed(n, x)
    coef = Signal.from_samples(grid, k_closed).coefficients
    freqs = grid.frequencies
    order = [i for i in np.argsort(freqs, kind="stable") if abs(freqs[i]) <= grid.max_frequency]
    tent = fejer_hat(n, freqs)
    ok = (np.max(np.abs(coef - tent)) <= 1e-9
          and np.max(np.abs(k_sum - k_closed)) <= 1e-10 * (n + 1))

    space_rows = [(float(a), float(b), float(c)) for a, b, c in zip(x, k_sum, k_closed)]
    freq_rows = [(int(freqs[i]), float(coef[i].real), float(tent[i])) for i in order]
    if cfg.format == "json":
        doc = {"n": n, "M": cfg.M, "pass": bool(ok),
               "kernel": [dict(zip(("x", "K_sum", "K_closed"), r)) for r in space_rows],
               "coefficients": [dict(zip(("j", "coef", "tent"), r)) for r in freq_rows]}
        _emit(json.dumps(doc, indent=1) + "\n", cfg.out)
    else:
        space = _csv(["x", "K_sum", "K_closed"], space_rows)
        freq = _csv(["j", "coef", "tent"], freq_rows)
        if cfg.out is None:
            _emit(space + "\n" + freq, None)
        else:
            p = Path(cfg.out)
            _emit(space, p)
            _emit(freq, p.with_name(p.stem + "_coef" + (p.suffix or ".csv")))
    return EXIT_OK if ok else EXIT_CHECK


def cmd_bound(cfg: RunConfig) -> int:
    """Exhaustive uniform-bound check for generate(n1, alpha, N + 1)."""
    seq = generate(cfg.n1, cfg.alpha, cfg.N + 1)
    rep = check_uniform_bound(seq, cfg.N, alpha=cfg.alpha)
    if cfg.format == "json":
        _emit(rep.to_json() + "\n", cfg.out)
    else:
        d = rep.to_dict()
        flags = d.pop("pass")
        header = list(d) + [f"pass_{k}" for k in flags]
        _emit(_csv(header, [list(d.values()) + list(flags.values())]), cfg.out)
    return EXIT_OK if rep.ok else EXIT_CHECK


def cmd_converge(cfg: RunConfig, count: int, B: int) -> int:
    """Tail-norm study on the band-limited corpus."""
    grid = SpectralGrid(cfg.M)
    seq = generate(cfg.n1, cfg.alpha, count)
    corpus = {
        "constant": ex.gen_signal("constant", grid),
        "pure_mode": ex.gen_signal("pure_mode", grid, j=min(3, B)),
        "random_bandlimited": ex.gen_signal("random_bandlimited", grid, B=B, seed=cfg.seed),
    }
    results = {name: ex.convergence_study(f, seq, cfg.trials, cfg.seed)
               for name, f in corpus.items()}
    ok = all(r.passed for reps in results.values() for r in reps)
    if cfg.format == "json":
        doc = {name: [r.to_dict() for r in reps] for name, reps in results.items()}
        _emit(json.dumps(doc, indent=1) + "\n", cfg.out)
    else:
        rows = [(name, r.start, r.end, r.sup, r.bound, r.passed)
                for name, reps in results.items() for r in reps]
        _emit(_csv(["signal", "start", "end", "sup", "bound", "pass"], rows), cfg.out)
    return EXIT_OK if ok else EXIT_CHECK


def load_sweep_config(path) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed sweep config: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("sweep config must be a JSON object")
    missing = {"alphas", "Ns", "M", "trials", "seed"} - set(doc)
    if missing:
        raise ConfigError(f"sweep config missing keys: {sorted(missing)}")
    if not (isinstance(doc["alphas"], list) and isinstance(doc["Ns"], list)
            and doc["alphas"] and doc["Ns"]):
        raise ConfigError("alphas and Ns must be nonempty lists")
    for a in doc["alphas"]:
        if not isinstance(a, (int, float)) or isinstance(a, bool) or not a > 1:
            raise InvalidAlpha(f"every alpha must be a number > 1, got {a!r}")
    for N in doc["Ns"]:
        if not isinstance(N, int) or isinstance(N, bool) or N < 1:
            raise ConfigError(f"every N must be a positive integer, got {N!r}")
    for key in ("M", "trials", "seed"):
        if not isinstance(doc[key], int) or isinstance(doc[key], bool):
            raise ConfigError(f"{key} must be an integer")
    return doc


def cmd_sweep(config_path, cfg: RunConfig, seed_override: int | None) -> int:
    doc = load_sweep_config(config_path)
    cfg.M, cfg.trials = doc["M"], doc["trials"]
    cfg.seed = doc["seed"] if seed_override is None else seed_override
    cfg.n1 = int(doc.get("n1", 1))
    cfg.validate()
    rows = ex.sweep([float(a) for a in doc["alphas"]], doc["Ns"], SpectralGrid(cfg.M),
                    cfg.trials, cfg.seed, n1=cfg.n1)
    if cfg.format == "json":
        recs = [dict(zip(ex.SWEEP_COLUMNS, r.values()), ok=r.ok, error=r.error) for r in rows]
        text = json.dumps(recs, indent=1, allow_nan=True) + "\n"
    else:
        text = ex.sweep_csv(rows)
    _emit(text, cfg.out)
    return EXIT_OK if all(r.ok for r in rows) else EXIT_CHECK


def _u64(text):
    v = int(text)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_u64, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="output path (default stdout)")
    common.add_argument("--format", choices=["csv", "json"], default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="fejer", parents=[common],
                                description="Fejér block-difference bounds and experiments.")
    sub = p.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kernel", parents=[common], help="tabulate K_n and its coefficients")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--M", type=int, default=64)

    b = sub.add_parser("bound", parents=[common], help="uniform block-sum bound")
    b.add_argument("--n1", type=int, default=1)
    b.add_argument("--alpha", type=float, required=True)
    b.add_argument("--N", type=int, required=True)

    c = sub.add_parser("converge", parents=[common], help="random-sign tail study")
    c.add_argument("--M", type=int, default=4096)
    c.add_argument("--n1", type=int, default=1)
    c.add_argument("--alpha", type=float, default=2.0)
    c.add_argument("--count", type=int, default=16, help="sequence length")
    c.add_argument("--B", type=int, default=32, help="band limit of the random signal")
    c.add_argument("--trials", type=int, default=200)

    s = sub.add_parser("sweep", parents=[common], help="parameter sweep from a JSON config")
    s.add_argument("config")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    opts = vars(args)
    seed = opts.get("seed")
    cfg = RunConfig(seed=seed or 0, out=opts.get("out"), format=opts.get("format", "csv"))
    try:
        if args.command == "kernel":
            cfg.M = args.M
            cfg.validate()
            if args.n < 0:
                raise ConfigError("n must be nonnegative")
            return cmd_kernel(args.n, cfg)
        if args.command == "bound":
            cfg.n1, cfg.alpha, cfg.N = args.n1, args.alpha, args.N
            cfg.validate()
            return cmd_bound(cfg)
        if args.command == "converge":
            cfg.M, cfg.n1, cfg.alpha, cfg.trials = args.M, args.n1, args.alpha, args.trials
            cfg.N = max(args.count - 1, 1)
            cfg.validate()
            if args.count < 2:
                raise ConfigError("count must be >= 2")
            return cmd_converge(cfg, args.count, args.B)
        return cmd_sweep(args.config, cfg, seed)
    except (FejerError, ValueError, OSError) as exc:
        print(f"fejer: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
