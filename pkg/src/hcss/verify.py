"""Self-check suites behind ``hcss verify``.

Each suite returns a list of :class:`Check`; a suite passes when all of its
checks do.  The suites are desk-sized versions of the invariants exercised by
the test suite.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import cfunc, hcseries, oracle, radial, radialode
from .jets import Jet
from .quadrature import QuadratureSpec
from .rootdata import GL11Param, make_pair, parse_pair
from .special import complex_gamma

__all__ = ["Check", "SUITES", "run_suite", "random_bump_profile", "cross_report"]


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    measured: float
    tolerance: float

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"{flag} {self.suite}:{self.name} measured={self.measured:.3e} tol={self.tolerance:.1e}"


def _check(suite, name, measured, tol):
    measured = float(measured)
    return Check(suite, name, bool(np.isfinite(measured) and measured <= tol), measured, tol)


def random_bump_profile(rng, support=None) -> radial.RadialProfile:
    """Random cubic to quintic polynomial in ``u`` times a smooth bump on ``[0, R]``.

    The bump is flat near ``u = 0``, so point-derivative integrals only see the
    polynomial; degree at least 3 keeps them generically nonzero for ``q <= 3``.
    """
    R = float(rng.uniform(1.5, 3.0)) if support is None else support
    width = 0.6 * R
    coef = rng.normal(size=int(rng.integers(4, 7)))

    def g(u: Jet) -> Jet:
        poly = Jet.constant(np.zeros(np.shape(u.value)), u.order) + coef[-1]
        for c in coef[-2::-1]:
            poly = poly * u + c
        return poly * oracle.smooth_step((R - u) / width)

    return radial.RadialProfile(g, f"poly{len(coef) - 1} x bump(R={R:.3f})",
                                points=(R - width,), support=R)


# -- suites --------------------------------------------------------------------

def suite_localization(rng):
    out = []
    g = radial.gaussian_profile()
    worst = 0.0
    for p in range(6):
        for q in range(4):
            ref = math.pi ** ((p - 2 * q) / 2)
            for val in (radial.radial_integral(p, q, g), radial.localize(p, q, g),
                        radial.BerezinMeasure(p, q).integrate(g)):
                worst = max(worst, abs(val - ref))
    out.append(_check("localization", "gaussian", worst, 1e-10))
    worst = 0.0
    for _ in range(8):
        prof = random_bump_profile(rng)
        p, q = int(rng.integers(2, 6)), int(rng.integers(1, 4))
        base = radial.localize(p, q, prof)
        for k in range(1, min(p // 2, q) + 1):
            pk, qk = radial.reduce_dims(p, q, k)
            val = radial.localize(pk, qk, prof)
            worst = max(worst, abs(val - base) / (1 + abs(base)))
    out.append(_check("localization", "dimension_shift", worst, 1e-8))
    return out


def suite_cfunc(rng):
    out = []
    worst = 0.0
    for z in [0.3, 1.7, 4.2, 9.5, -1.3, -3.7, 2 + 3j, -0.5 + 1.5j, 7 - 2j]:
        g = complex_gamma(z)
        dup = math.pi ** -0.5 * 2 ** (z - 1) * complex_gamma(z / 2) * complex_gamma((z + 1) / 2)
        worst = max(worst, abs(g - dup) / abs(g))
    out.append(_check("cfunc", "duplication", worst, 1e-10))
    grid = [0.7, 1.3, 2.1 + 0.4j]
    for spec in ("u:1:1", "u:0:1", "u:0:2"):
        pair = parse_pair(spec)
        ref = abs(pair.rho) + 2
        integ = [cfunc.c_integral_unitary(pair, lam) for lam in [ref] + grid]
        form = [cfunc.c_formula(pair, lam) for lam in [ref] + grid]
        out.append(_check("cfunc", f"integral_{spec}", cfunc.fit_constant(integ, form)[1], 1e-6))
    for spec in ("osp:3:0", "osp:1:1", "osp:0:2"):
        pair = parse_pair(spec)
        ref = abs(float(pair.rho)) + 2
        integ = [cfunc.c_integral_osp(pair, lam) for lam in [ref] + grid]
        form = [cfunc.c_formula(pair, lam) for lam in [ref] + grid]
        out.append(_check("cfunc", f"integral_{spec}", cfunc.fit_constant(integ, form)[1], 1e-6))
    for spec in ("osp:1:1", "osp:0:2", "osp:2:2"):
        pair = parse_pair(spec)
        lams = np.linspace(0.6, 3.9, 10) + 0.2j
        r = np.array([cfunc.c_formula(pair, l, "quotient") / cfunc.c_formula(pair, l, "ratio") for l in lams])
        out.append(_check("cfunc", f"ratio_constant_{spec}", np.max(np.abs(r / r[0] - 1)), 1e-10))
    pair = parse_pair("u:0:3")
    zeros = cfunc.unitary_zeros(pair)
    out.append(_check("cfunc", "zeros_u:0:3", max(abs(cfunc.c_formula(pair, z)) for z in zeros), 1e-8))
    return out


def suite_series(rng):
    out = []
    worst_res = 0.0
    worst_closed = 0.0
    worst_gangolli = 0.0
    for spec in ("u:1:0", "u:0:1", "u:2:1", "osp:3:0", "osp:1:1", "osp:2:1"):
        pair = parse_pair(spec)
        for lam in rng.uniform(0.3, 3.0, 3) + 1j * rng.uniform(-1, 1, 3):
            co = hcseries.gamma_coeffs(pair, lam, t=0.5)
            worst_res = max(worst_res, float(np.max(co.residuals)))
            for t in (0.5, 1.0, 2.0):
                k = co.gangolli_constant(t)
                ell = np.arange(co.L + 1)
                worst_gangolli = max(worst_gangolli, float(np.max(np.abs(co.gamma) / (k * np.exp(ell * t)))))
            if pair.family.value == "osp":
                for ell in range(min(co.L, 10) + 1):
                    c = hcseries.gamma_closed_osp(pair, lam, ell)
                    if co.gamma[ell] != 0:
                        worst_closed = max(worst_closed, abs(c / co.gamma[ell] - 1))
    out.append(_check("series", "recursion_residual", worst_res, 1e-12))
    out.append(_check("series", "closed_osp", worst_closed, 1e-12))
    out.append(_check("series", "gangolli_bound", worst_gangolli - 1, 1e-14))
    for spec, lams in (("u:1:0", (1.3, 2.3)), ("osp:2:2", (0.7, 2.3)), ("u:0:2", (1.3, 0.7 + 0.4j))):
        pair = parse_pair(spec)
        ser = [hcseries.phi_spherical(pair, l, t) for l in lams for t in (0.5, 1.0)]
        orc = [oracle.phi_integral(pair, l, t) for l in lams for t in (0.5, 1.0)]
        out.append(_check("series", f"vs_oracle_{spec}", cfunc.fit_constant(orc, ser, 1)[1], 1e-5))
    return out


def suite_jacobi(rng):
    out = []
    for spec in ("osp:0:1", "osp:0:2", "osp:2:2"):
        pair = parse_pair(spec)
        n = int(-pair.rho)
        worst_zero = 0.0
        for lam in (2.3, 3.7):
            co = hcseries.gamma_coeffs(pair, lam, L=n + 2, exact_termination=False)
            worst_zero = max(worst_zero, float(np.max(np.abs(co.gamma[n + 1:]))) / abs(co.gamma[0]))
        out.append(_check("jacobi", f"termination_{spec}", worst_zero, 1e-12))
        ser = [hcseries.phi_series(pair, l, t) for l in (2.3, 3.7) for t in (0.5, 1.0, 2.0)]
        jac = [hcseries.phi_jacobi(pair, l, t) for l in (2.3, 3.7) for t in (0.5, 1.0, 2.0)]
        out.append(_check("jacobi", f"series_vs_jacobi_{spec}", cfunc.fit_constant(ser, jac)[1], 1e-12))
        ratios = [hcseries.gamma_finite_binomial(pair, l, k) / hcseries.gamma_coeffs(pair, l).gamma[k]
                  for l in (2.3, 3.7, 1.1 + 0.5j) for k in range(n + 1)]
        ratios = np.array(ratios)
        out.append(_check("jacobi", f"binomial_form_{spec}", np.max(np.abs(ratios / ratios[0] - 1)), 1e-12))
    return out


def suite_gl11(rng):
    worst = 0.0
    for _ in range(100):
        mu, nu = rng.uniform(-1, 1, 2) + 1j * rng.uniform(-1, 1, 2)
        h = tuple(rng.uniform(-0.5, 0.5, 2))
        par = GL11Param(mu, nu)
        worst = max(worst, abs(oracle.phi_integral_gl11(par, h) - hcseries.phi_gl11(par, h)))
    out = [_check("gl11", "closed_vs_berezin", worst, 1e-14)]
    ok = (cfunc.c_gl11(GL11Param(7, 0, (1.0, 0.0))) == 0
          and cfunc.c_gl11(GL11Param(2, 0, (0.0, 1.0))) == -1
          and cfunc.c_gl11(GL11Param(2, 0, (0.0, -1.0))) is None)
    lim = cfunc.c_limit_oracle(make_pair("gl11"), GL11Param(2, 0, (0.3, 1.0)))
    bad = cfunc.c_limit_oracle(make_pair("gl11"), GL11Param(2, 0, (0.0, -1.0)))
    ok = ok and lim.converged and abs(lim.value + 1) < 1e-12 and not bad.converged
    out.append(Check("gl11", "existence_trichotomy", ok, 0.0 if ok else 1.0, 0.0))
    return out


def suite_ode(rng):
    worst = 0.0
    for fam in ("u", "osp"):
        for p in range(4):
            for q in range(3):
                pair = make_pair(fam, p, q)
                for lam in rng.uniform(0.2, 3.0, 2) + 1j * rng.uniform(-1, 1, 2):
                    worst = max(worst, radialode.eigen_residual(pair, lam, "series", (0.7, 1.0, 1.5)))
    return [_check("ode", "series_eigen_residual", worst, 1e-5)]


def suite_symmetry(rng):
    out = []
    worst = 0.0
    for spec in ("u:1:0", "u:0:2", "osp:3:0", "osp:1:1"):
        pair = parse_pair(spec)
        for lam in (0.3, 0.3 + 0.2j):
            a = oracle.phi_integral(pair, lam, 1.0)
            b = oracle.phi_integral(pair, -lam, 1.0)
            worst = max(worst, abs(a - b) / abs(a))
    out.append(_check("symmetry", "weyl_oracle", worst, 1e-4))
    worst = 0.0
    for _ in range(20):
        mu, nu = rng.uniform(-1, 1, 2) + 1j * rng.uniform(-1, 1, 2)
        h = tuple(rng.uniform(-0.5, 0.5, 2))
        a = oracle.phi_integral_gl11(GL11Param(mu, nu), h)
        b = oracle.phi_integral_gl11(GL11Param(-mu, -nu), (-h[0], -h[1]))
        worst = max(worst, abs(a - b))
    out.append(_check("symmetry", "gl11_inversion", worst, 1e-14))
    return out


def suite_cutoff(rng):
    out = []
    c1, c2 = oracle.REFERENCE_CUTOFFS
    worst = 0.0
    for spec in ("u:1:1", "u:0:2", "osp:2:1", "osp:1:1"):
        pair = parse_pair(spec)
        for lam in (1.3, 0.7 + 0.4j):
            a = cfunc.c_integral_unitary(pair, lam, chi=c1) if pair.family.value == "u" \
                else cfunc.c_integral_osp(pair, lam, chi=c1)
            b = cfunc.c_integral_unitary(pair, lam, chi=c2) if pair.family.value == "u" \
                else cfunc.c_integral_osp(pair, lam, chi=c2)
            worst = max(worst, abs(a - b) / abs(a))
    out.append(_check("cutoff", "c_integral_chi_independence", worst, 1e-6))
    worst = 0.0
    part_shift = 0.0
    for spec in ("u:1:0", "u:0:1", "osp:3:0", "osp:2:2"):
        pair = parse_pair(spec)
        a = oracle.phi_integral(pair, 1.3, 1.0, chi=c1, full=True)
        b = oracle.phi_integral(pair, 1.3, 1.0, chi=c2, full=True)
        worst = max(worst, abs(a.value - b.value) / abs(a.value))
        part_shift = max(part_shift, abs(a.parts[0] - b.parts[0]) / abs(a.value))
    out.append(_check("cutoff", "phi_chi_independence", worst, 1e-6))
    # the pieces themselves must move: otherwise the split would be vacuous
    out.append(Check("cutoff", "parts_depend_on_chi", part_shift > 1e-3, part_shift, 1e-3))
    return out


SUITES = {
    "localization": suite_localization,
    "cfunc": suite_cfunc,
    "series": suite_series,
    "jacobi": suite_jacobi,
    "gl11": suite_gl11,
    "ode": suite_ode,
    "symmetry": suite_symmetry,
    "cutoff": suite_cutoff,
}


def run_suite(name: str, seed: int = 20240601):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](np.random.default_rng(seed))


def cross_report(pair, lambdas, ts, chi=None, quad: QuadratureSpec | None = None):
    """Rows comparing every applicable route with the integral oracle.

    A single constant per route is fitted at the first ``(lambda, t)`` and
    ``rel_err`` is measured after that fit.
    """
    methods = ["series"]
    if pair.finite_series:
        methods.append("jacobi")
    if pair.family.value == "osp" and pair.p == 0:
        methods.append("closed")
    points = [(complex(l), float(t)) for l in lambdas for t in ts]
    ref = [oracle.phi_integral(pair, l, t, chi, quad) for l, t in points]
    rows = []
    for m in methods:
        fn = radialode.phi_method(pair, m)
        vals = [fn(l, t) for l, t in points]
        const, _ = cfunc.fit_constant(ref, vals)
        for (l, t), v, r in zip(points, vals, ref):
            w = const.value * v
            rows.append(dict(pair=pair.spec, lambda_re=l.real, lambda_im=l.imag, t=t, method=m,
                             value_re=w.real, value_im=w.imag, ref_method="integral",
                             rel_err=abs(w - r) / abs(r)))
    return rows
