"""``hcss``: evaluation, grid scans, verification suites and golden tables.

Exit codes: 0 success, 1 a verification check failed, 2 at least one row
failed to evaluate (the run still writes every row), 64 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__, cfunc, hcseries, oracle, verify
from .oracle import CutoffSpec
from .quadrature import QuadratureSpec
from .rootdata import Family, GL11Param, SymmetricPair, parse_pair

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_EVAL_ERROR = 2
EXIT_USAGE = 64

CSV_HEADER = ("pair", "family", "p", "q", "lambda_re", "lambda_im", "t", "method",
              "value_re", "value_im", "abs_err_est")
CROSS_HEADER = ("pair", "lambda_re", "lambda_im", "t", "method", "value_re", "value_im",
                "ref_method", "rel_err")
VERIFY_HEADER = ("suite", "check", "status", "measured", "tolerance")

# rounding-level error reported for closed forms that involve no truncation
_ROUNDING = 1e-14

CONFIG_KEYS = ("pair", "lambda", "t", "method", "plateau", "support", "epsabs", "epsrel",
               "out", "format", "mu", "nu", "h", "a_plus", "direction", "re", "im", "kind", "seed")
DEFAULTS = {"format": "csv", "epsabs": "1e-10", "epsrel": "1e-10", "nu": "0", "a_plus": "0",
            "direction": "0,1", "im": "0:0:1", "kind": "phi", "seed": "20240601"}


class UsageError(Exception):
    """Bad flags, config or literals; maps to exit code 64."""


class EvalError(Exception):
    """A single row could not be evaluated."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- literals --------------------------------------------------------------------

_COMPLEX_CHARS = re.compile(r"^[0-9.eE+\-ij]+$")


def parse_complex(text: str) -> complex:
    """``a``, ``a+bi``, ``a - bi``, ``bi`` (``j`` accepted for ``i``)."""
    s = text.replace(" ", "")
    if not s or not _COMPLEX_CHARS.match(s):
        raise UsageError(f"cannot parse complex number {text!r}; expected a+bi")
    try:
        return complex(s.replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}; expected a+bi") from None


def parse_float(text: str, name: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"--{name}: {text!r} is not a number") from None


def parse_list(text: str, parse=parse_complex):
    items = [s for s in text.split(",") if s.strip()]
    if not items:
        raise UsageError(f"empty list {text!r}")
    return [parse(s) for s in items]


def parse_pair_arg(text: str, name: str):
    vals = parse_list(text, lambda s: parse_float(s, name))
    if len(vals) != 2:
        raise UsageError(f"--{name} needs two comma-separated numbers, got {text!r}")
    return tuple(vals)


def parse_range(text: str, name: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"--{name} expects lo:hi:n, got {text!r}")
    lo, hi = parse_float(parts[0], name), parse_float(parts[1], name)
    try:
        n = int(parts[2])
    except ValueError:
        raise UsageError(f"--{name}: point count {parts[2]!r} is not an integer") from None
    if n < 1:
        raise UsageError(f"--{name}: need at least one point")
    return [float(v) for v in np.linspace(lo, hi, n)]


def read_config(path: str) -> dict:
    """Flat ``key = value`` file; ``#`` starts a comment."""
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path!r}: {exc.strerror}") from None
    for num, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{num}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{num}: unknown key {key!r}; known keys: {', '.join(CONFIG_KEYS)}")
        out[key] = value
    return out


def _merged(args) -> dict:
    """Flags over config file over defaults, all as strings."""
    merged = dict(DEFAULTS)
    if getattr(args, "config", None):
        merged.update(read_config(args.config))
    for key in CONFIG_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            merged[key] = ",".join(val) if isinstance(val, list) else val
    return merged


# -- run configuration -------------------------------------------------------------

PHI_METHODS = ("series", "jacobi", "closed", "integral")
C_METHODS = ("formula", "integral", "limit")


def phi_methods(pair: SymmetricPair):
    if pair.family is Family.GL11:
        return ["closed", "integral"]
    out = ["series", "integral"]
    if pair.finite_series:
        out.append("jacobi")
    if pair.family is Family.ORTHOSYMPLECTIC and pair.p == 0:
        out.append("closed")
    return out


def c_methods(pair: SymmetricPair):
    if pair.family is Family.GL11:
        return ["formula", "limit"]
    if pair.family is Family.UNITARY and pair.m_alpha > 0:
        return ["formula", "limit"]
    return ["formula", "integral", "limit"]


@dataclass(frozen=True)
class RunConfig:
    pair: SymmetricPair
    kind: str
    lambdas: tuple
    ts: tuple
    method: str
    cutoff: CutoffSpec
    quad: QuadratureSpec
    out: str | None
    fmt: str
    nu: complex = 0j
    a_plus: float = 0.0
    direction: tuple = (0.0, 1.0)

    def points(self):
        if self.kind == "c":
            return [(lam, math.inf) for lam in self.lambdas]
        return [(lam, t) for lam in self.lambdas for t in self.ts]


def build_config(m: dict, kind: str, grid: bool = False) -> RunConfig:
    if "pair" not in m:
        raise UsageError("no pair given; use --pair family:p:q (or gl11)")
    try:
        pair = parse_pair(m["pair"])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    gl11 = pair.family is Family.GL11
    a_plus = parse_float(m["a_plus"], "a-plus")
    ts = ()
    if "h" in m:
        if not gl11:
            raise UsageError("--h applies to gl11 only; use --t for the other families")
        a_plus, a_minus = parse_pair_arg(m["h"], "h")
        ts = (a_minus,)
    if grid:
        if "re" not in m:
            raise UsageError("scan needs --re lo:hi:n")
        lambdas = tuple(complex(r, i) for r in parse_range(m["re"], "re") for i in parse_range(m["im"], "im"))
    else:
        key = "mu" if gl11 and "mu" in m else "lambda"
        if key not in m:
            raise UsageError("no spectral parameter given; use --lambda (or --mu for gl11)")
        lambdas = tuple(parse_list(m[key]))
    if kind == "phi" and not ts:
        if "t" not in m:
            raise UsageError("no evaluation point; use --t (or --h a+,a- for gl11)")
        ts = tuple(parse_list(m["t"], lambda s: parse_float(s, "t")))
    methods = phi_methods(pair) if kind == "phi" else c_methods(pair)
    method = m.get("method", methods[0])
    if method not in methods:
        raise UsageError(f"method {method!r} is not available for {pair.spec} ({kind}); "
                         f"choose from {', '.join(methods)}")
    try:
        cutoff = CutoffSpec(parse_pair_arg(m.get("plateau", "0.6,1.8"), "plateau"),
                            parse_pair_arg(m.get("support", "0.3,2.7"), "support"))
        quad = QuadratureSpec(parse_float(m["epsabs"], "epsabs"), parse_float(m["epsrel"], "epsrel"))
        direction = parse_pair_arg(m["direction"], "direction")
        if gl11:
            GL11Param(1.0, 0.0, direction)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fmt = m["format"]
    if fmt not in ("csv", "json"):
        raise UsageError(f"--format must be csv or json, got {fmt!r}")
    return RunConfig(pair, kind, lambdas, ts, method, cutoff, quad, m.get("out"), fmt,
                     parse_complex(m["nu"]), a_plus, direction)


# -- evaluation -----------------------------------------------------------------

def _series_with_error(pair, lam, t):
    val = hcseries.phi_spherical(pair, lam, t)
    err = 0.0
    for w in ((1, -1) if pair.weyl_order == 2 else (1,)):
        _, tail, _ = hcseries.phi_series(pair, w * lam, t, full=True)
        err += tail
    return val, err + _ROUNDING * abs(val)


def evaluate_phi(cfg: RunConfig, lam: complex, t: float):
    pair, m = cfg.pair, cfg.method
    if pair.family is Family.GL11:
        param, h = GL11Param(lam, cfg.nu, cfg.direction), (cfg.a_plus, t)
        val = hcseries.phi_gl11(param, h) if m == "closed" else oracle.phi_integral_gl11(param, h)
        return val, _ROUNDING * max(abs(val), 1.0)
    if m == "series":
        return _series_with_error(pair, lam, t)
    if m == "jacobi":
        val = hcseries.phi_jacobi_spherical(pair, lam, t)
        return val, _ROUNDING * abs(val)
    if m == "closed":
        val = hcseries.phi_osp_p0(pair.q, lam, t)
        return val, _ROUNDING * abs(val)
    res = oracle.phi_integral(pair, lam, t, cfg.cutoff, cfg.quad, full=True)
    return res.value, res.error


def evaluate_c(cfg: RunConfig, lam: complex):
    pair, m = cfg.pair, cfg.method
    if pair.family is Family.GL11:
        param = GL11Param(lam, cfg.nu, cfg.direction)
        if m == "formula":
            val = cfunc.c_gl11(param)
            if val is None:
                raise EvalError("no limit: the c-function diverges for c_minus < 0")
            return val, 0.0
        res = cfunc.c_limit_oracle(pair, param, chi=cfg.cutoff, quad=cfg.quad)
    elif m == "formula":
        val = cfunc.c_formula(pair, lam)
        return val, _ROUNDING * abs(val)
    elif m == "integral":
        if pair.family is Family.UNITARY:
            val, err, _ = cfunc.c_integral_unitary(pair, lam, quad=cfg.quad, full=True)
        else:
            val, err = cfunc.c_integral_osp(pair, lam, cfg.cutoff, cfg.quad, full=True)
        return val, err
    else:
        res = cfunc.c_limit_oracle(pair, lam, chi=cfg.cutoff, quad=cfg.quad)
    if not res.converged:
        raise EvalError("limit oracle did not converge on the t grid")
    return res.value, res.error


def _threads(n_tasks: int) -> int:
    env = os.environ.get("HCSS_THREADS")
    if env is None:
        cap = os.cpu_count() or 1
    else:
        try:
            cap = int(env)
        except ValueError:
            raise UsageError(f"HCSS_THREADS must be a positive integer, got {env!r}") from None
        if cap < 1:
            raise UsageError(f"HCSS_THREADS must be a positive integer, got {env!r}")
    return max(1, min(cap, n_tasks))


def run_rows(cfg: RunConfig):
    """Evaluate every point; returns ``(rows, errors)`` in input order."""
    points = cfg.points()

    def task(point):
        lam, t = point
        try:
            val, err = evaluate_c(cfg, lam) if cfg.kind == "c" else evaluate_phi(cfg, lam, t)
            return complex(val), float(err), None
        except (EvalError, ValueError, ArithmeticError, RuntimeError) as exc:
            return complex(math.nan, math.nan), math.nan, str(exc)

    with ThreadPoolExecutor(max_workers=_threads(len(points))) as pool:
        results = list(pool.map(task, points))
    rows, errors = [], []
    pair = cfg.pair
    for (lam, t), (val, err, msg) in zip(points, results):
        rows.append(dict(pair=pair.spec, family=pair.family.value, p=pair.p, q=pair.q,
                         lambda_re=lam.real, lambda_im=lam.imag, t=t, method=cfg.method,
                         value_re=val.real, value_im=val.imag, abs_err_est=err))
        if msg is not None:
            errors.append(f"{pair.spec} lambda={_fmt(lam.real)}{_fmt(lam.imag, True)}i "
                          f"t={_fmt(t)} method={cfg.method}: {msg}")
    return rows, errors


# -- output ------------------------------------------------------------------------

def _fmt(v, signed=False):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        s = "%.17g" % (float(v) + 0.0)
        return ("+" + s if signed and not s.startswith("-") else s)
    return str(v)


def _jsonable(v):
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else str(v)
    if isinstance(v, (np.bool_,)):
        return bool(v)
    return v


def render(rows, header, fmt) -> str:
    if fmt == "json":
        return json.dumps([{k: _jsonable(r[k]) for k in header} for r in rows], indent=2) + "\n"
    lines = [",".join(header)]
    lines += [",".join(_fmt(r[k]) for k in header) for r in rows]
    return "\n".join(lines) + "\n"


def emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands ------------------------------------------------------------------

def cmd_pair_info(args) -> int:
    try:
        pair = parse_pair(args.pair_spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    info = {
        "pair": pair.spec,
        "family": pair.family.value,
        "p": pair.p,
        "q": pair.q,
        "root": "isotropic" if not pair.anisotropic else "anisotropic",
        "m_alpha": pair.m_alpha,
        "m_2alpha": pair.m_2alpha,
        "rho": str(pair.rho) + ("*alpha" if pair.family is Family.GL11 else ""),
        "weyl_order": pair.weyl_order,
        "finite_series": pair.finite_series,
        "phi_methods": phi_methods(pair),
        "c_methods": c_methods(pair),
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(info, indent=2) + "\n")
    else:
        for k, v in info.items():
            sys.stdout.write(f"{k}: {' '.join(v) if isinstance(v, list) else _fmt(v)}\n")
    return EXIT_OK


def _run(cfg: RunConfig) -> int:
    rows, errors = run_rows(cfg)
    emit(render(rows, CSV_HEADER, cfg.fmt), cfg.out)
    for e in errors:
        sys.stderr.write(f"error: {e}\n")
    return EXIT_EVAL_ERROR if errors else EXIT_OK


def cmd_eval(args) -> int:
    return _run(build_config(_merged(args), args.kind))


def cmd_scan(args) -> int:
    m = _merged(args)
    kind = m["kind"]
    if kind not in ("phi", "c"):
        raise UsageError(f"--kind must be phi or c, got {kind!r}")
    return _run(build_config(m, kind, grid=True))


def cmd_verify(args) -> int:
    m = _merged(args)
    fmt = m["format"]
    if fmt not in ("csv", "json"):
        raise UsageError(f"--format must be csv or json, got {fmt!r}")
    if args.suite == "cross":
        cfg = build_config(m, "phi")
        if cfg.pair.family is Family.GL11:
            raise UsageError("verify cross covers the anisotropic families; use verify gl11")
        try:
            rows = verify.cross_report(cfg.pair, cfg.lambdas, cfg.ts, cfg.cutoff, cfg.quad)
        except (ValueError, ArithmeticError, RuntimeError) as exc:
            sys.stderr.write(f"error: {exc}\n")
            return EXIT_EVAL_ERROR
        emit(render(rows, CROSS_HEADER, fmt), m.get("out"))
        return EXIT_OK
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    try:
        seed = int(m["seed"])
    except ValueError:
        raise UsageError(f"--seed must be an integer, got {m['seed']!r}") from None
    checks = [c for name in names for c in verify.run_suite(name, seed)]
    rows = [dict(suite=c.suite, check=c.name, status="pass" if c.passed else "fail",
                 measured=c.measured, tolerance=c.tolerance) for c in checks]
    emit(render(rows, VERIFY_HEADER, fmt), m.get("out"))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_CHECK_FAILED


# pairs and points of the golden table
TABLE_PAIRS = ("u:1:0", "u:2:0", "u:1:1", "u:0:1", "u:0:2", "u:2:1",
               "osp:3:0", "osp:2:1", "osp:1:1", "osp:0:1", "osp:0:2", "osp:2:2")
TABLE_LAMBDAS = (0.7, 1.3, 2.1, 2.7, 0.7 + 0.4j, 2.1 + 0.4j)
TABLE_TS = (0.5, 1.0, 2.0)


def golden_rows():
    rows = []
    for spec in TABLE_PAIRS:
        pair = parse_pair(spec)
        base = RunConfig(pair, "c", TABLE_LAMBDAS, (), "formula", CutoffSpec(), QuadratureSpec(), None, "csv")
        rows += run_rows(base)[0]
        for method in ["series"] + [m for m in ("jacobi", "closed") if m in phi_methods(pair)]:
            cfg = RunConfig(pair, "phi", TABLE_LAMBDAS, TABLE_TS, method, CutoffSpec(),
                            QuadratureSpec(), None, "csv")
            rows += run_rows(cfg)[0]
    g = parse_pair("gl11")
    for mu in (1.0, -0.5 + 0.25j):
        cfg = RunConfig(g, "phi", (mu,), (0.5, -0.25), "closed", CutoffSpec(), QuadratureSpec(),
                        None, "csv", 0.3 + 0j, 0.2)
        rows += run_rows(cfg)[0]
    return rows


def cmd_table(args) -> int:
    fmt = args.format or "csv"
    if fmt not in ("csv", "json"):
        raise UsageError(f"--format must be csv or json, got {fmt!r}")
    rows = golden_rows()
    emit(render(rows, CSV_HEADER, fmt), args.out)
    bad = [r for r in rows if not math.isfinite(r["value_re"])]
    return EXIT_EVAL_ERROR if bad else EXIT_OK


# -- parser ----------------------------------------------------------------------

def _eval_options(p: argparse.ArgumentParser, grid=False):
    p.add_argument("--config", help="flat key=value file merged under the flags")
    p.add_argument("--pair", help="family:p:q, e.g. osp:2:1, u:1:1, gl11")
    if grid:
        p.add_argument("--re", help="real parts of lambda, lo:hi:n")
        p.add_argument("--im", help="imaginary parts of lambda, lo:hi:n (default 0:0:1)")
        p.add_argument("--kind", help="phi (default) or c")
    else:
        p.add_argument("--lambda", dest="lambda", action="append",
                       help="spectral parameter(s) a+bi, comma separated or repeated")
    p.add_argument("--t", action="append", help="t value(s), comma separated or repeated")
    p.add_argument("--method", help="evaluation route")
    p.add_argument("--mu", action="append", help="gl11: lambda(h+), comma separated")
    p.add_argument("--nu", help="gl11: lambda(h-) (default 0)")
    p.add_argument("--h", help="gl11: a+,a- (sets a_plus and t = a_minus)")
    p.add_argument("--a-plus", dest="a_plus", help="gl11: a+ when t lists a_minus (default 0)")
    p.add_argument("--direction", help="gl11: c+,c- with h0 = c+ h+ + c- h- (default 0,1)")
    p.add_argument("--plateau", help="cutoff plateau lo,hi (default 0.6,1.8)")
    p.add_argument("--support", help="cutoff support a,b (default 0.3,2.7)")
    p.add_argument("--epsabs", help="quadrature absolute tolerance (default 1e-10)")
    p.add_argument("--epsrel", help="quadrature relative tolerance (default 1e-10)")
    p.add_argument("--format", help="csv (default) or json")
    p.add_argument("--out", help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hcss", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"hcss {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    pair = sub.add_parser("pair", help="root data of a symmetric pair")
    pair_sub = pair.add_subparsers(dest="action", required=True)
    info = pair_sub.add_parser("info", help="multiplicities, rho, Weyl order, methods")
    info.add_argument("pair_spec", metavar="PAIR")
    info.add_argument("--format", default="text", choices=("text", "json"))
    info.set_defaults(func=cmd_pair_info)

    for kind, help_ in (("c", "Harish-Chandra c-function"), ("phi", "spherical function")):
        top = sub.add_parser(kind, help=help_)
        top_sub = top.add_subparsers(dest="action", required=True)
        ev = top_sub.add_parser("eval", help=f"evaluate the {help_}")
        _eval_options(ev)
        ev.set_defaults(func=cmd_eval, kind=kind)

    scan = sub.add_parser("scan", help="lambda grid x t list sweep")
    _eval_options(scan, grid=True)
    scan.set_defaults(func=cmd_scan)

    ver = sub.add_parser("verify", help="run a self-check suite")
    ver.add_argument("suite", choices=list(verify.SUITES) + ["all", "cross"])
    ver.add_argument("--seed", help="random seed for the sampled checks")
    _eval_options(ver)
    ver.set_defaults(func=cmd_verify)

    tab = sub.add_parser("table", help="regenerate the golden table")
    tab.add_argument("--format", help="csv (default) or json")
    tab.add_argument("--out", help="output file (default stdout)")
    tab.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"hcss: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
