"""Command-line front end.

Subcommands and their CSV columns (JSON output is ``{"command": ..., "rows":
[{column: value, ...}, ...]}`` with the same columns):

    transform     function,n,strategy,theta,hilbert
    partial-sums  function,n,N,theta,dirichlet,series
    remainders    function,n,strategy,N,theta,remainder
    kernel        type,N,delta,value
    sweep         N,theta,abs_remainder

``--function`` takes a catalog name (``cos3``, ``sin7``, ``square``,
``sawtooth``, ``logcos``, ``randpoly``, ``randpoly-SEED-DEGREE``) or the path
of a coefficient file with one ``k alpha_k beta_k`` line per mode.

Output goes to stdout unless ``--output`` is given. If the environment
variable ``COMPACT_HILBERT_OUTPUT_DIR`` is set, relative output paths are
resolved against it, and without ``--output`` the result is written to
``$COMPACT_HILBERT_OUTPUT_DIR/<command>.<format>``.

Exit codes: 0 success, 2 configuration error, 3 numerical failure. Errors are
reported as a single JSON line on stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import catalog
from .dirichlet import (
    conjugate_dirichlet_kernel,
    convergence_sweep,
    dirichlet_kernel,
    kernel_dr_double,
    kernel_dr_reduced,
    partial_sum_dirichlet,
    remainder_operator,
)
from .errors import ConfigError, NumericalError
from .fourier import FourierCoefficients, compute_coefficients, max_order, partial_sum_series
from .grid import SampledFunction, make_grid, project_zero_average, sample
from .hilbert import PvStrategy, hilbert_function, hilbert_pv, kernel_hc

OUTPUT_DIR_ENV = "COMPACT_HILBERT_OUTPUT_DIR"
EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL = 0, 2, 3

COLUMNS = {
    "transform": ("function", "n", "strategy", "theta", "hilbert"),
    "partial-sums": ("function", "n", "N", "theta", "dirichlet", "series"),
    "remainders": ("function", "n", "strategy", "N", "theta", "remainder"),
    "kernel": ("type", "N", "delta", "value"),
    "sweep": ("N", "theta", "abs_remainder"),
}
KERNEL_TYPES = ("hc", "dirichlet", "conjugate-dirichlet", "dr-double", "dr-reduced")


@dataclass
class RunConfig:
    command: str
    function: str = "cos1"
    n: int = 1024
    k_max: int | None = None
    Ns: list = field(default_factory=lambda: [1])
    thetas: list = field(default_factory=lambda: [0.0])
    strategy: str = "subtraction"
    format: str = "csv"
    output: str | None = None
    kernel_type: str = "dirichlet"
    deltas: list = field(default_factory=lambda: [0.0])
    quadrature_n: int = 8192
    threshold: float = 1e-3

    def validate(self):
        if self.command not in COLUMNS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.n < 4 or self.n % 2:
            raise ConfigError(f"n must be even and >= 4, got {self.n}")
        limit = self.n // 2 - 1
        if self.k_max is not None and not 1 <= self.k_max <= limit:
            raise ConfigError(f"k_max must lie in [1, {limit}] for n={self.n}, got {self.k_max}")
        if not self.Ns or any(N < 1 for N in self.Ns):
            raise ConfigError("N values must be positive integers")
        if self.command == "partial-sums" and max(self.Ns) > (self.k_max or limit):
            raise ConfigError(f"N={max(self.Ns)} exceeds k_max={self.k_max or limit}")
        if self.command == "sweep" and any(b <= a for a, b in zip(self.Ns, self.Ns[1:])):
            raise ConfigError("sweep needs strictly increasing N values")
        if self.strategy not in ("subtraction", "offset-grid"):
            raise ConfigError(f"unknown strategy {self.strategy!r}")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.format!r}")
        if self.command == "kernel" and self.kernel_type not in KERNEL_TYPES:
            raise ConfigError(f"unknown kernel type {self.kernel_type!r}")
        return self


def read_coefficient_file(path) -> FourierCoefficients:
    """Parse ``k alpha_k beta_k`` lines; ascending k >= 1, gaps are zero."""
    rows = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if len(parts) != 3:
                raise ValueError
            k, a, b = int(parts[0]), float(parts[1]), float(parts[2])
        except ValueError:
            raise ConfigError(f"{path}:{lineno}: expected 'k alpha beta'") from None
        if k < 1 or (rows and k <= rows[-1][0]):
            raise ConfigError(f"{path}:{lineno}: k must be >= 1 and strictly ascending")
        if not (np.isfinite(a) and np.isfinite(b)):
            raise ConfigError(f"{path}:{lineno}: non-finite coefficient")
        rows.append((k, a, b))
    if not rows:
        raise ConfigError(f"{path}: no coefficients")
    k_max = rows[-1][0]
    return FourierCoefficients.from_modes(
        k_max, {k: a for k, a, _ in rows}, {k: b for k, _, b in rows})


def resolve_function(name: str) -> catalog.CatalogEntry:
    p = Path(name)
    if p.is_file():
        return catalog.from_coefficients(p.name, read_coefficient_file(p))
    try:
        return catalog.get_entry(name)
    except KeyError:
        raise ConfigError(f"unknown function {name!r} (not a catalog name or file)") from None


def _sampled(cfg: RunConfig) -> tuple[catalog.CatalogEntry, SampledFunction]:
    entry = resolve_function(cfg.function)
    grid = make_grid(cfg.n)
    if entry.degree is not None and entry.degree > max_order(grid):
        raise ConfigError(f"function degree {entry.degree} aliases on n={cfg.n}")
    # catalog and file functions are zero-average; drop the grid's quadrature error
    return entry, project_zero_average(sample(entry.f, grid))


def compute_rows(cfg: RunConfig) -> list[dict]:
    cfg.validate()
    strategy = PvStrategy(cfg.strategy)
    rows = []
    if cfg.command == "kernel":
        for N in cfg.Ns:
            for d in cfg.deltas:
                if cfg.kernel_type == "hc":
                    v = kernel_hc(d)
                elif cfg.kernel_type == "dirichlet":
                    v = dirichlet_kernel(N, d)
                elif cfg.kernel_type == "conjugate-dirichlet":
                    v = conjugate_dirichlet_kernel(N, d)
                elif cfg.kernel_type == "dr-double":
                    v = kernel_dr_double(N, d, 0.0, cfg.quadrature_n)
                else:
                    v = kernel_dr_reduced(N, d, cfg.quadrature_n)
                rows.append({"type": cfg.kernel_type,
                             "N": None if cfg.kernel_type == "hc" else N,
                             "delta": d, "value": v})
            if cfg.kernel_type == "hc":
                break
        return rows

    entry, f = _sampled(cfg)
    name = entry.name
    if cfg.command == "transform":
        for t in cfg.thetas:
            rows.append({"function": name, "n": cfg.n, "strategy": cfg.strategy,
                         "theta": t, "hilbert": hilbert_pv(f, t, strategy)})
    elif cfg.command == "partial-sums":
        fc = compute_coefficients(f, cfg.k_max or max_order(f.grid))
        for N in cfg.Ns:
            for t in cfg.thetas:
                rows.append({"function": name, "n": cfg.n, "N": N, "theta": t,
                             "dirichlet": partial_sum_dirichlet(f, N, t),
                             "series": partial_sum_series(fc, N, t)})
    elif cfg.command == "remainders":
        g = hilbert_function(f, strategy)
        for N in cfg.Ns:
            for t in cfg.thetas:
                rows.append({"function": name, "n": cfg.n, "strategy": cfg.strategy,
                             "N": N, "theta": t,
                             "remainder": remainder_operator(f, N, t, strategy, g=g)})
    elif cfg.command == "sweep":
        rep = convergence_sweep(f, cfg.Ns, cfg.thetas, strategy, cfg.threshold)
        for i, N in enumerate(rep.Ns):
            for j, t in enumerate(rep.thetas):
                rows.append({"N": N, "theta": t, "abs_remainder": float(rep.remainders[i, j])})
    for r in rows:
        for k, v in r.items():
            if isinstance(v, float) and not np.isfinite(v):
                raise NumericalError(f"non-finite {k} in output row {r}")
    return rows


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render(command: str, rows: list[dict], fmt: str) -> str:
    cols = COLUMNS[command]
    if fmt == "json":
        return json.dumps({"command": command, "rows": [{c: r[c] for c in cols} for r in rows]},
                          indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_fmt(r[c]) for c in cols])
    return buf.getvalue()


def output_path(cfg: RunConfig) -> Path | None:
    base = os.environ.get(OUTPUT_DIR_ENV)
    if cfg.output:
        p = Path(cfg.output)
        return Path(base) / p if base and not p.is_absolute() else p
    if base:
        return Path(base) / f"{cfg.command}.{cfg.format}"
    return None


def run(cfg: RunConfig, stdout=None) -> int:
    text = render(cfg.command, compute_rows(cfg), cfg.format)
    path = output_path(cfg)
    if path is None:
        (stdout or sys.stdout).write(text)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _floats(s: str) -> list[float]:
    try:
        return [float(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {s!r}") from None


def _ints(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="compact-hilbert", description="Compact Hilbert transform and "
                "Fourier remainder operators on the circle (angles in radians).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, n_default=1024):
        sp.add_argument("--function", default="cos1")
        sp.add_argument("--n", type=int, default=n_default)
        sp.add_argument("--theta", type=_floats, default=[0.0], dest="thetas")
        sp.add_argument("--strategy", choices=("subtraction", "offset-grid"), default="subtraction")

    def io_opts(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--output")

    sp = sub.add_parser("transform", help="H_c[f](theta)")
    common(sp)
    io_opts(sp)
    sp = sub.add_parser("partial-sums", help="Dirichlet-integral and series partial sums")
    common(sp)
    sp.add_argument("--k-max", type=int, dest="k_max")
    sp.add_argument("--N", type=_ints, default=[1], dest="Ns")
    io_opts(sp)
    sp = sub.add_parser("remainders", help="signed remainders D_r[N, f](theta)")
    common(sp)
    sp.add_argument("--N", type=_ints, default=[1], dest="Ns")
    io_opts(sp)
    sp = sub.add_parser("sweep", help="|R_N(theta)| over N and theta")
    common(sp, 4096)
    sp.add_argument("--N", type=_ints, default=[8, 16, 32, 64], dest="Ns")
    sp.add_argument("--threshold", type=float, default=1e-3)
    io_opts(sp)
    sp = sub.add_parser("kernel", help="tabulate an integration kernel")
    sp.add_argument("--type", choices=KERNEL_TYPES, default="dirichlet", dest="kernel_type")
    sp.add_argument("--N", type=_ints, default=[1], dest="Ns")
    sp.add_argument("--delta", type=_floats, default=[0.0], dest="deltas")
    sp.add_argument("--quadrature-n", type=int, default=8192, dest="quadrature_n")
    io_opts(sp)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = RunConfig(**vars(args))
        return run(cfg)
    except ConfigError as exc:
        _report("config", exc)
        return EXIT_CONFIG
    except NumericalError as exc:
        _report("numerical", exc)
        return EXIT_NUMERICAL


def _report(kind, exc):
    sys.stderr.write(json.dumps({"error": kind, "type": type(exc).__name__,
                                 "message": str(exc)}) + "\n")


if __name__ == "__main__":
    sys.exit(main())
