"""Command-line surface: constants, spectra, Berezin tables, certificates, scans.

Five subcommands cover the numerical laboratory end to end:

  constants — closed-form vs quadrature values of the oscillation amplitudes
  eigs      — eigenvalue tables (quadrature / closed form, model, enclosure)
  berezin   — Berezin-transform tables at explicit or phase-minimum radii
  certify   — counterexample certificate (JSON), exit code encodes the verdict
  scan      — counterexample offset regions over a frequency grid

Defaults reproduce the headline parameters (Fock: c = 1/2, beta = 2, d = 1;
Bergman: c = 1/2, omega = 1). Tables are CSV (fixed column order,
17-significant-digit floats) or JSON (sorted keys); identical configurations
produce byte-identical output. SPECLAB_THREADS > 1 computes table rows in
parallel processes, emitted in input order.

Exit codes: 0 success / certified; 1 evaluation failure; 2 usage error or
certificate verdict "failed"; 3 certificate verdict "inconclusive".
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from concurrent.futures import ProcessPoolExecutor

from . import bergman, certify, fock
from .quadrature import integrate_complex
from .specialfn import abs_alpha_sq, alpha_omega, beta_d, beta_omega, c_offset

_EXIT_OK = 0
_EXIT_EVAL_FAILURE = 1
_EXIT_FAILED = 2
_EXIT_INCONCLUSIVE = 3

_CONSTANTS_DIM_MAX = 12
_SCAN_GRID = [i / 10.0 for i in range(1, 41)]


# ---------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class RunConfig:
    """Validated options shared by the subcommands."""

    command: str
    space: str = "fock"
    d: int = 1
    c: float = 0.5
    beta: float | None = None
    omega: float | None = None
    n_start: int | None = None
    n_end: int | None = None
    n_step: int = 1
    phase_k: int | None = None
    radii: tuple[float, ...] | None = None
    tol: float = 1e-10
    k_count: int = 10
    fmt: str = "csv"
    seed: int = 0
    out: str | None = None

    def __post_init__(self):
        if self.space not in ("fock", "bergman"):
            raise ValueError(f"space must be 'fock' or 'bergman', got {self.space!r}")
        if self.d < 1:
            raise ValueError(f"--dim must be >= 1, got {self.d}")
        if not (0.0 < self.tol <= 1e-2):
            raise ValueError(f"--tol must lie in (0, 1e-2], got {self.tol}")
        if self.k_count < 1:
            raise ValueError(f"--k-count must be >= 1, got {self.k_count}")
        if self.command != "constants":
            if self.space == "fock" and self.omega is not None:
                raise ValueError("--omega applies to --space bergman only")
            if self.space == "bergman" and self.beta is not None:
                raise ValueError("--beta applies to --space fock only")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"--format must be csv or json, got {self.fmt!r}")
        if self.phase_k is not None:
            if self.n_start is not None or self.n_end is not None:
                raise ValueError("--phase-k excludes --n-start/--n-end/--n-step")
            if self.radii is not None:
                raise ValueError("--phase-k excludes --radii")
            if self.phase_k < 1:
                raise ValueError(f"--phase-k must be >= 1, got {self.phase_k}")

    @property
    def frequency(self) -> float:
        if self.space == "fock":
            return 2.0 if self.beta is None else self.beta
        return 1.0 if self.omega is None else self.omega

    def symbol(self):
        if self.space == "fock":
            return fock.FockSymbol(c=self.c, beta=self.frequency, d=self.d)
        return bergman.BergmanSymbol(c=self.c, omega=self.frequency, d=self.d)


def _parse_offset(text: str, space: str, d: int) -> float:
    """Offset flag value: a float, or the token 'cd' for c_d = (|alpha|+|beta_d|)/2."""
    if text.strip().lower() == "cd":
        if space != "bergman":
            raise ValueError("--c cd is defined for --space bergman (unit frequency)")
        return c_offset(d).c_d
    return float(text)


# ---------------------------------------------------------------------------
# output plumbing


def _format_cell(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _render_table(columns: list[str], rows: list[tuple], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_format_cell(x) for x in row])
        return buf.getvalue()
    payload = [dict(zip(columns, row)) for row in rows]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _thread_count() -> int:
    raw = os.environ.get("SPECLAB_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        print(f"speclab: ignoring invalid SPECLAB_THREADS={raw!r}", file=sys.stderr)
        return 1
    return max(1, n)


def _pmap(fn, items: list):
    """Map preserving input order, in SPECLAB_THREADS worker processes."""
    workers = _thread_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# constants

def _alpha_quadrature(omega: float) -> complex:
    """alpha_omega = integral_0^infty e^{-u} u^{-i omega} du by direct quadrature.

    The substitution u = e^{-v} removes the endpoint oscillation of
    u^{-i omega}; the integrand e^{-e^{-v}} e^{-v} e^{i omega v} is smooth and
    double-exponentially small outside [-6, 45].
    """

    def integrand(v: float) -> complex:
        return cmath.exp(complex(-math.exp(-v) - v, omega * v))

    return integrate_complex(integrand, (-6.0, 45.0), tol=1e-12).value


def _gamma_poly_quadrature(d: int, omega: float) -> complex:
    """Gamma(d+1+i omega) / Gamma(d+1) = E[T^{i omega}], T ~ Gamma(d+1), by quadrature."""

    def integrand(t: float) -> complex:
        if t <= 0.0:
            return 0.0j
        log_t = math.log(t)
        return cmath.exp(complex(d * log_t - t - math.lgamma(d + 1), omega * log_t))

    return integrate_complex(integrand, (0.0, 80.0 + 10.0 * d), tol=1e-12).value


def cmd_constants(cfg: RunConfig) -> int:
    """Amplitude constants, each by a closed form and an independent quadrature."""
    omega = 1.0 if cfg.omega is None else cfg.omega
    alpha_q = _alpha_quadrature(1.0)
    rows: list[tuple] = []

    abs_alpha = math.sqrt(abs_alpha_sq(1.0))
    rows.append(("abs_alpha", abs_alpha, abs(alpha_q), abs(abs_alpha - abs(alpha_q))))

    abs_beta = abs(beta_omega(1.0))
    beta_q = alpha_q * _gamma_poly_quadrature(1, 1.0)
    rows.append(("abs_beta", abs_beta, abs(beta_q), abs(abs_beta - abs(beta_q))))

    abs_alpha_om = math.sqrt(abs_alpha_sq(omega))
    alpha_om_q = _alpha_quadrature(omega)
    rows.append((f"abs_alpha_omega(omega={_format_cell(omega)})", abs_alpha_om,
                 abs(alpha_om_q), abs(abs_alpha_om - abs(alpha_om_q))))

    quad_threshold = None
    for d in range(1, _CONSTANTS_DIM_MAX + 1):
        closed = abs(beta_d(d))
        quad = abs(alpha_q * _gamma_poly_quadrature(d, 1.0))
        rows.append((f"abs_beta_d(d={d})", closed, quad, abs(closed - quad)))
        if quad < 0.5:
            quad_threshold = d
    for d in range(1, _CONSTANTS_DIM_MAX + 1):
        closed = c_offset(d).c_d
        quad = 0.5 * (abs(alpha_q) + abs(alpha_q * _gamma_poly_quadrature(d, 1.0)))
        rows.append((f"c_d(d={d})", closed, quad, abs(closed - quad)))

    threshold = certify.beta_d_threshold(_CONSTANTS_DIM_MAX + 38)
    rows.append(("beta_d_threshold", float(threshold), float(quad_threshold),
                 abs(float(threshold) - float(quad_threshold))))

    _emit(_render_table(["name", "closed_form", "quadrature", "discrepancy"],
                        rows, cfg.fmt), cfg.out)
    return _EXIT_OK


# ---------------------------------------------------------------------------
# eigenvalue tables

def _eig_row(args) -> tuple:
    sym, n, tol = args
    if isinstance(sym, fock.FockSymbol):
        res = fock.eigenvalue_quadrature(n, sym, tol=tol)
        model = fock.eigenvalue_model(n, sym)
        if n + sym.d - 1 >= 1:
            center, radius = fock.eigenvalue_enclosure(n, sym)
            lo, hi = center - radius, center + radius
        else:
            lo = hi = math.nan
        return (n, res.value, res.err_estimate, model, lo, hi, res.converged)
    value = bergman.eigenvalue_closed_form(n, sym)
    model = bergman.eigenvalue_model(n, sym)
    if isinstance(n, int) and n + sym.d <= 2 ** 53:
        res = bergman.eigenvalue_quadrature(n, sym, tol=tol)
        err = max(1e-12, abs(res.value - value))
        lo, hi = res.value - res.err_estimate, res.value + res.err_estimate
        return (n, value, err, model, lo, hi, res.converged)
    return (n, value, 1e-12, model, math.nan, math.nan, True)


def _eig_indices(cfg: RunConfig, sym) -> list:
    if cfg.n_start is not None or cfg.n_end is not None:
        start = 0 if cfg.n_start is None else cfg.n_start
        end = start if cfg.n_end is None else cfg.n_end
        if start < 0 or end < start or cfg.n_step < 1:
            raise ValueError("need 0 <= --n-start <= --n-end and --n-step >= 1")
        return list(range(start, end + 1, cfg.n_step))
    count = 10 if cfg.phase_k is None else cfg.phase_k
    if isinstance(sym, fock.FockSymbol):
        return fock.phase_min_indices(sym, count)
    return bergman.phase_min_indices(sym, count)


def cmd_eigs(cfg: RunConfig) -> int:
    """Eigenvalue table: value, error bound, asymptotic model, enclosure interval."""
    sym = cfg.symbol()
    indices = _eig_indices(cfg, sym)
    rows = _pmap(_eig_row, [(sym, n, cfg.tol) for n in indices])
    if not all(row[6] for row in rows):
        bad = [row[0] for row in rows if not row[6]]
        print(f"speclab eigs: quadrature did not converge at n={bad}", file=sys.stderr)
        return _EXIT_EVAL_FAILURE
    _emit(_render_table(["n", "value", "err", "model", "enclosure_lo", "enclosure_hi"],
                        [row[:6] for row in rows], cfg.fmt), cfg.out)
    return _EXIT_OK


# ---------------------------------------------------------------------------
# Berezin tables

def _berezin_row(args) -> tuple:
    sym, at, tol = args
    if isinstance(sym, fock.FockSymbol):
        if sym.d == 1:
            res = fock.berezin_direct(at, sym, tol=tol)
        else:
            res = fock.berezin_series(at, sym, tol=tol)
        model = fock.berezin_model(at, sym)
    else:
        res = bergman.berezin_quadrature(at, sym, tol=tol)
        model = bergman.berezin_model(at, sym)
    return (at, res.value, res.err_estimate, model, res.converged)


def _berezin_radii(cfg: RunConfig, sym) -> list[float]:
    if cfg.radii is not None:
        return list(cfg.radii)
    count = 10 if cfg.phase_k is None else cfg.phase_k
    if isinstance(sym, fock.FockSymbol):
        return fock.phase_min_radii(sym, count)
    return bergman.phase_min_radii(sym, count)


def cmd_berezin(cfg: RunConfig) -> int:
    """Berezin-transform table: value, error bound, asymptotic model."""
    sym = cfg.symbol()
    try:
        radii = _berezin_radii(cfg, sym)
        rows = _pmap(_berezin_row, [(sym, at, cfg.tol) for at in radii])
    except ValueError as exc:
        print(f"speclab berezin: {exc}", file=sys.stderr)
        return _EXIT_EVAL_FAILURE
    if not all(row[4] for row in rows):
        bad = [row[0] for row in rows if not row[4]]
        print(f"speclab berezin: evaluation did not converge at {bad}", file=sys.stderr)
        return _EXIT_EVAL_FAILURE
    _emit(_render_table(["at", "value", "err", "model"],
                        [row[:4] for row in rows], cfg.fmt), cfg.out)
    return _EXIT_OK


# ---------------------------------------------------------------------------
# certificates and scans

def cmd_certify(cfg: RunConfig) -> int:
    """Counterexample certificate as JSON; exit code encodes the verdict."""
    cert = certify.certify_counterexample(cfg.symbol(), k_count=cfg.k_count,
                                          tol=cfg.tol)
    _emit(cert.to_json() + "\n", cfg.out)
    print(
        f"speclab certify: verdict={cert.verdict} "
        f"(berezin margin {cert.berezin_margin:+.6g}, "
        f"eigen margin {cert.eigen_margin:+.6g}, "
        f"witnesses {cert.berezin.sample_count}+{cert.eigen.sample_count})",
        file=sys.stderr,
    )
    if cert.verdict == "certified":
        return _EXIT_OK
    if cert.verdict == "failed":
        return _EXIT_FAILED
    return _EXIT_INCONCLUSIVE


def cmd_scan(cfg: RunConfig) -> int:
    """Offset-region table over the frequency grid 0.1, 0.2, ..., 4.0."""
    if cfg.space == "fock":
        regions = certify.scan_fock_region(_SCAN_GRID)
    else:
        regions = certify.scan_bergman_region(_SCAN_GRID, d=cfg.d)
    rows = [(r.parameter, r.c_low, r.c_high, r.width) for r in regions]
    _emit(_render_table(["parameter", "c_low", "c_high", "width"], rows, cfg.fmt),
          cfg.out)
    return _EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing

def _add_common(p: argparse.ArgumentParser, with_symbol: bool = True) -> None:
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv",
                   help="table output format (default csv)")
    p.add_argument("--out", default=None, metavar="PATH",
                   help="write output to PATH instead of stdout")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for sampling cross-checks (reserved; recorded only)")
    p.add_argument("--tol", type=float, default=1e-10,
                   help="quadrature tolerance in (0, 1e-2] (default 1e-10)")
    if with_symbol:
        p.add_argument("--space", choices=("fock", "bergman"), default="fock",
                       help="function space (default fock)")
        p.add_argument("--dim", type=int, default=1, metavar="D",
                       help="complex dimension d >= 1 (default 1)")
        p.add_argument("--c", default="0.5", metavar="C",
                       help="symbol offset: a float, or 'cd' for (|alpha|+|beta_d|)/2")
        p.add_argument("--beta", type=float, default=None,
                       help="Fock oscillation frequency (default 2)")
        p.add_argument("--omega", type=float, default=None,
                       help="Bergman oscillation frequency (default 1)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="speclab",
        description="Numerical laboratory for radial Toeplitz counterexamples: "
                    "eigenvalue tails vs Berezin transforms on Fock and Bergman spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="amplitude constants, dual-route")
    _add_common(p, with_symbol=False)
    p.add_argument("--omega", type=float, default=None,
                   help="frequency for the abs_alpha_omega row (default 1)")

    p = sub.add_parser("eigs", help="eigenvalue table")
    _add_common(p)
    p.add_argument("--n-start", type=int, default=None)
    p.add_argument("--n-end", type=int, default=None)
    p.add_argument("--n-step", type=int, default=1)
    p.add_argument("--phase-k", type=int, default=None,
                   help="evaluate at the first K phase-minimum indices (default 10)")

    p = sub.add_parser("berezin", help="Berezin-transform table")
    _add_common(p)
    p.add_argument("--radii", default=None, metavar="R1,R2,...",
                   help="explicit comma-separated radii")
    p.add_argument("--phase-k", type=int, default=None,
                   help="evaluate at the first K phase-minimum radii (default 10)")

    p = sub.add_parser("certify", help="counterexample certificate (JSON)")
    _add_common(p)
    p.add_argument("--k-count", type=int, default=10,
                   help="phase-minimum witnesses per side (default 10)")

    p = sub.add_parser("scan", help="counterexample offset regions over a grid")
    _add_common(p, with_symbol=False)
    p.add_argument("--space", choices=("fock", "bergman"), default="fock")
    p.add_argument("--dim", type=int, default=1, metavar="D")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    space = getattr(args, "space", "fock")
    d = getattr(args, "dim", 1)
    radii = None
    if getattr(args, "radii", None) is not None:
        radii = tuple(float(tok) for tok in args.radii.split(",") if tok.strip())
        if not radii:
            raise ValueError("--radii holds no values")
    fmt = args.fmt if args.command != "certify" else "json"
    return RunConfig(
        command=args.command,
        space=space,
        d=d,
        c=_parse_offset(getattr(args, "c", "0.5"), space, d),
        beta=getattr(args, "beta", None),
        omega=getattr(args, "omega", None),
        n_start=getattr(args, "n_start", None),
        n_end=getattr(args, "n_end", None),
        n_step=getattr(args, "n_step", 1),
        phase_k=getattr(args, "phase_k", None),
        radii=radii,
        tol=args.tol,
        k_count=getattr(args, "k_count", 10),
        fmt=fmt,
        seed=args.seed,
        out=args.out,
    )


_DISPATCH = {
    "constants": cmd_constants,
    "eigs": cmd_eigs,
    "berezin": cmd_berezin,
    "certify": cmd_certify,
    "scan": cmd_scan,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return _DISPATCH[cfg.command](cfg)
    except ValueError as exc:
        print(f"speclab {cfg.command}: {exc}", file=sys.stderr)
        return _EXIT_EVAL_FAILURE


if __name__ == "__main__":
    sys.exit(main())
