"""Brute-force spherical functions from the cutoff-split integrals over N-bar.

Everything here is built from the horospherical projection ``H`` and the
Berezin localisation of :mod:`hcss.radial`; no series or closed form is used.
Integrands are written in terms of ``x = exp(-2t)``, and ``x = 0`` gives the
``t -> oo`` integrands that define the c-function.

Unitary pairs need an extra real line (the ``2 alpha`` direction, variable
``s``).  The ``s`` integral is computed as ``2 int_0^oo`` after ``s = sigma^2``,
which removes the ``s^(lambda-1)`` endpoint behaviour of the ``I_oo`` part.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grassmann import GrassmannElement, berezin_top
from .jets import Jet, jexp, jlog
from .quadrature import QuadratureSpec, QuadResult, integrate
from .radial import RadialProfile, localize, radial_integral
from .rootdata import Family, GL11Param, SymmetricPair

__all__ = [
    "CutoffSpec",
    "Cutoff",
    "REFERENCE_CUTOFFS",
    "make_cutoff",
    "smooth_step",
    "psi",
    "h_profile_unitary",
    "h_profile_osp",
    "OracleValue",
    "phi_parts_unitary",
    "phi_parts_osp",
    "phi_integral_unitary",
    "phi_integral_osp",
    "phi_integral",
    "phi_integral_gl11",
    "phi_berezin_osp_p0",
]


# -- cutoff -----------------------------------------------------------------

@dataclass(frozen=True)
class CutoffSpec:
    """``chi = 1`` on ``plateau``, ``chi = 0`` outside ``support``."""
    plateau: tuple = (0.6, 1.8)
    support: tuple = (0.3, 2.7)

    def __post_init__(self):
        lo, hi = self.plateau
        a, b = self.support
        if not (0 < a < lo < 1 < hi < b):
            raise ValueError(
                f"cutoff needs 0 < a < lo < 1 < hi < b; got plateau={self.plateau}, "
                f"support={self.support}")


REFERENCE_CUTOFFS = (
    CutoffSpec((0.6, 1.8), (0.3, 2.7)),
    CutoffSpec((0.4, 2.5), (0.2, 3.75)),
)


def _as_jet(x):
    if isinstance(x, Jet):
        return x, True
    return Jet(np.asarray(x, dtype=float)[None, ...]), False


def _with_body(f: Jet, mask, value) -> Jet:
    c = f.coeffs.copy()
    c[0] = np.where(mask, value, c[0])
    return Jet(c, f.center)


def smooth_step(y):
    """``S(y) = e^(-1/y) / (e^(-1/y) + e^(-1/(1-y)))`` clamped to 0 and 1 outside (0, 1)."""
    y, jet_in = _as_jet(y)
    body = np.asarray(y.value).real
    inside = (body > 0) & (body < 1)
    ys = _with_body(y, ~inside, 0.5)
    a = jexp(-1.0 / ys)
    b = jexp(-1.0 / (1.0 - ys))
    s = a / (a + b)
    c = np.where(inside, s.coeffs, 0.0)
    c[0] = np.where(body >= 1, 1.0, c[0])
    out = Jet(c, y.center)
    return out if jet_in else out.value.real


class Cutoff:
    """The smooth cutoff of a :class:`CutoffSpec`; accepts numbers, arrays or jets."""

    def __init__(self, spec: CutoffSpec):
        self.spec = spec

    def __call__(self, x):
        (lo, hi), (a, b) = self.spec.plateau, self.spec.support
        xj, jet_in = _as_jet(x)
        out = smooth_step((xj - a) / (lo - a)) * smooth_step((b - xj) / (b - hi))
        return out if jet_in else out.value.real

    def complement(self, x):
        v = self(x)
        return 1.0 - v

    def __repr__(self):
        return f"Cutoff(plateau={self.spec.plateau}, support={self.spec.support})"


def make_cutoff(spec: CutoffSpec | None = None) -> Cutoff:
    return Cutoff(spec or REFERENCE_CUTOFFS[0])


# -- projection H -------------------------------------------------------------

def psi(c, u, s):
    """``psi(c, u, s) = (c + u)^2 + s^2`` with ``u = ||y||^2``."""
    return (c + u) * (c + u) + s * s


def _log(x):
    return jlog(x) if isinstance(x, Jet) else np.log(x)


def h_profile_unitary(D, EF):
    """``H = 1/2 log((1 - EF)^2 - 4 D^2)`` (coefficient of ``h0``)."""
    arg = (1 - EF) * (1 - EF) - 4 * D * D
    body = arg.value if isinstance(arg, Jet) else np.asarray(arg)
    body = np.asarray(body, dtype=complex)
    if np.any(body.real <= 0) or np.any(np.abs(body.imag) > 1e-12 * np.abs(body)):
        raise ValueError("log argument of H must be positive at the sample point")
    return 0.5 * _log(arg if isinstance(arg, Jet) else body.real)


def h_profile_osp(normsq):
    """``H = log(1 + ||y||^2)``."""
    arg = 1 + normsq
    body = np.asarray(arg.value if isinstance(arg, Jet) else arg)
    if np.any(np.asarray(body).real <= 0):
        raise ValueError("1 + ||y||^2 must be positive at the sample point")
    return _log(arg)


def _cexp(z, h: Jet) -> Jet:
    # exp(z H) with H real: principal power of a positive base
    return jexp(h * z)


# -- unitary ----------------------------------------------------------------

@dataclass
class OracleValue:
    """``value`` with quadrature ``error``; ``parts`` holds ``(I_0, I_oo)``."""
    value: complex
    error: float
    parts: tuple = ()


def _rho(pair):
    return float(pair.rho)


def _unitary_u_points(s, x, spec: CutoffSpec):
    lo, hi = spec.plateau
    a, b = spec.support
    pts = [x, s]
    for c in (hi, b):
        if c - s * s > 1:
            pts.append(math.sqrt(c - s * s) - 1)
        disc = 1 - (c - 1) * ((c - 1) * s * s - 1)
        if disc >= 0:
            for sgn in (-1, 1):
                r = (1 + sgn * math.sqrt(disc)) / (c - 1)
                if r > 0:
                    pts.append(r)
    return tuple(p for p in pts if p > 0)


def _unitary_supports(spec):
    hi, b = spec.plateau[1], spec.support[1]
    s0 = math.sqrt(b - 1)
    u0 = math.sqrt(b) - 1
    uinf = (1 + math.sqrt(hi)) / (hi - 1)
    sinf = math.sqrt(1 / (hi - 1) ** 2 + 1 / (hi - 1))
    return (u0, s0), (uinf, sinf)


def _unitary_profiles(lam, rho, x, s, chi: Cutoff):
    """Profiles ``F_0``, ``F_oo`` in ``u`` at fixed ``s`` (scalar or array)."""
    zm = (lam - rho)
    zp = -(lam + rho)

    def f0(u: Jet) -> Jet:
        p1 = psi(1.0, u, s)
        # H(a_t exp(Y)) part, written through H of the rescaled point
        lead = _cexp(zm, h_profile_unitary(0.5j * x * s, -x * u)) if x else 1.0
        main = _cexp(zp, 0.5 * jlog(p1))
        return main * chi(p1) * lead

    def finf(u: Jet) -> Jet:
        p1 = psi(1.0, u, s)
        p0 = psi(0.0, u, s)
        body = np.broadcast_to(np.asarray(p0.value).real, np.broadcast_shapes(
            np.shape(u.value), np.shape(s)))
        flat = body == 0
        if np.any(flat):
            p0 = _with_body(p0 + 0 * np.zeros(body.shape), flat, 1.0)
            p1 = _with_body(p1 + 0 * np.zeros(body.shape), flat, 2.0)
        shifted = psi(x, u, s) if x else p0
        out = _cexp(zm, 0.5 * jlog(shifted)) * _cexp(zp, 0.5 * jlog(p1)) * chi.complement(p1 / p0)
        if np.any(flat):
            out = Jet(np.where(flat, 0.0, out.coeffs), out.center)
        return out

    return f0, finf


def phi_parts_unitary(pair: SymmetricPair, lam, x: float, chi: CutoffSpec | None = None,
                      quad: QuadratureSpec | None = None) -> OracleValue:
    """``(I_0, I_oo)`` normalised by ``exp(-t(lambda - rho))``; ``x = exp(-2t)``."""
    if pair.family is not Family.UNITARY:
        raise ValueError(f"{pair} is not a unitary pair")
    spec = chi or REFERENCE_CUTOFFS[0]
    cut = make_cutoff(spec)
    quad = quad or QuadratureSpec()
    lam = complex(lam)
    rho = _rho(pair)
    p2, q = 2 * pair.p, pair.q
    d = p2 - 2 * q
    (u0, s0), (uinf, sinf) = _unitary_supports(spec)
    hi, b = spec.plateau[1], spec.support[1]
    s_pts = [math.sqrt(hi - 1), s0, 1 / math.sqrt(b - 1), 1 / math.sqrt(hi - 1)]
    if x > 0:
        s_pts.append(x)

    results = []
    for which, smax, umax in ((0, s0, u0), (1, sinf, uinf)):
        def outer(sig, which=which, umax=umax):
            s = sig * sig
            if d <= 0:
                f0, finf = _unitary_profiles(lam, rho, x, s, cut)
                prof = RadialProfile(f0 if which == 0 else finf)
                vals = radial_integral(p2, q, prof, quad)
            else:
                f0, finf = _unitary_profiles(lam, rho, x, s, cut)
                prof = RadialProfile(f0 if which == 0 else finf,
                                     points=_unitary_u_points(0.0, x, spec),
                                     support=umax, batch=s.shape)
                vals = radial_integral(p2, q, prof, quad)
            # full s-line (even integrand) and ds = 2 sigma dsigma
            return 4.0 * sig * vals

        pts = tuple(math.sqrt(v) for v in s_pts if 0 < v < smax)
        results.append(integrate(outer, 0.0, math.sqrt(smax), quad, points=pts))
    i0, iinf = results
    return OracleValue(i0.value + iinf.value, i0.error + iinf.error, (i0.value, iinf.value))


# -- orthosymplectic ---------------------------------------------------------

def _osp_profiles(lam, rho, x, chi: Cutoff):
    zm = lam - rho
    zp = -(lam + rho)

    def f0(u: Jet) -> Jet:
        lead = _cexp(zm, h_profile_osp(u * x)) if x else 1.0
        return _cexp(zp, h_profile_osp(u)) * chi(1.0 + u) * lead

    def finf(u: Jet) -> Jet:
        body = np.asarray(u.value).real
        flat = body == 0
        us = _with_body(u, flat, 1.0) if np.any(flat) else u
        shifted = _cexp(zm, jlog(us + x))
        out = shifted * _cexp(zp, h_profile_osp(us)) * chi.complement((1.0 + us) / us)
        if np.any(flat):
            if x:
                # 1 - chi((1+u)/u) is identically 1 near u = 0
                near = _cexp(zm, jlog(_with_body(u, flat, 0.0) + x)) * _cexp(zp, h_profile_osp(u))
                out = Jet(np.where(flat, near.coeffs, out.coeffs), out.center)
            else:
                # u^(lambda-rho) has a vanishing jet at 0 once Re lambda > 0
                out = Jet(np.where(flat, 0.0, out.coeffs), out.center)
        return out

    return f0, finf


def phi_parts_osp(pair: SymmetricPair, lam, x: float, chi: CutoffSpec | None = None,
                  quad: QuadratureSpec | None = None) -> OracleValue:
    """``(I_0, I_oo)`` for ``osp`` with ``p > 0``; single exact jet when ``p = 0``."""
    if pair.family is not Family.ORTHOSYMPLECTIC:
        raise ValueError(f"{pair} is not an orthosymplectic pair")
    lam = complex(lam)
    rho = _rho(pair)
    quad = quad or QuadratureSpec()
    if pair.p == 0:
        zm, zp = lam - rho, -(lam + rho)

        def g(u):
            lead = _cexp(zm, h_profile_osp(u * x)) if x else 1.0
            return _cexp(zp, h_profile_osp(u)) * lead

        v = localize(0, pair.q, RadialProfile(g))
        return OracleValue(v, 0.0, (v, 0j))
    spec = chi or REFERENCE_CUTOFFS[0]
    cut = make_cutoff(spec)
    hi, b = spec.plateau[1], spec.support[1]
    f0, finf = _osp_profiles(lam, rho, x, cut)
    pts0 = (hi - 1, b - 1)
    ptsi = tuple(v for v in (1 / (b - 1), 1 / (hi - 1), x) if v > 0)
    r0 = radial_integral(pair.p, pair.q, RadialProfile(f0, points=pts0, support=b - 1),
                         quad, return_result=True)[1]
    ri = radial_integral(pair.p, pair.q, RadialProfile(finf, points=ptsi, support=1 / (hi - 1)),
                         quad, return_result=True)[1]
    return OracleValue(r0.value + ri.value, r0.error + ri.error, (r0.value, ri.value))


# -- spherical functions --------------------------------------------------------

def _check_lambda(lam, t):
    # at finite t every integrand is smooth and compactly supported, so any
    # lambda is allowed; Re lambda > 0 is only needed for the t -> oo limit
    if t <= 0:
        raise ValueError("t must be positive")


def _finish(pair, lam, t, parts: OracleValue, full):
    scale = np.exp(t * (complex(lam) - _rho(pair)))
    if full:
        return OracleValue(scale * parts.value, abs(scale) * parts.error,
                           tuple(scale * v for v in parts.parts))
    return complex(scale * parts.value)


def phi_integral_unitary(pair, lam, t, chi: CutoffSpec | None = None,
                         quad: QuadratureSpec | None = None, full=False):
    _check_lambda(lam, t)
    parts = phi_parts_unitary(pair, lam, math.exp(-2 * t), chi, quad)
    return _finish(pair, lam, t, parts, full)


def phi_integral_osp(pair, lam, t, chi: CutoffSpec | None = None,
                     quad: QuadratureSpec | None = None, full=False):
    _check_lambda(lam, t)
    parts = phi_parts_osp(pair, lam, math.exp(-2 * t), chi, quad)
    return _finish(pair, lam, t, parts, full)


def phi_integral(pair, lam, t, chi=None, quad=None, full=False):
    """Dispatch on the family of an anisotropic pair."""
    if pair.family is Family.UNITARY:
        return phi_integral_unitary(pair, lam, t, chi, quad, full)
    if pair.family is Family.ORTHOSYMPLECTIC:
        return phi_integral_osp(pair, lam, t, chi, quad, full)
    raise ValueError("use phi_integral_gl11 for gl11")


def phi_berezin_osp_p0(q: int, lam, t: float) -> complex:
    """osp(0|2q) spherical function by direct expansion in the Grassmann algebra.

    Both factors ``(1 + e^{-2t} ||eta||^2)^(lam-rho)`` and
    ``(1 + ||eta||^2)^(-(lam+rho))`` are expanded separately, multiplied, and
    the top coefficient is scaled by the Berezin density ``(-2 pi)^(-q)``.
    """
    from .grassmann import apply_analytic, norm_squared
    lam = complex(lam)
    rho = -q
    x = math.exp(-2 * t)
    ns = norm_squared(0, [], q)
    u = Jet.variable(0.0, q)
    first = apply_analytic(jexp(jlog(1 + x * u) * (lam - rho)), ns)
    second = apply_analytic(jexp(jlog(1 + u) * (-(lam + rho))), ns)
    top = berezin_top(first * second)
    return complex((-2 * math.pi) ** (-q) * top * np.exp(t * (lam - rho)))


def phi_integral_gl11(param: GL11Param, h) -> complex:
    """Exact ``0|2`` Berezin integral for GL(1|1) at ``h = a_plus h+ + a_minus h-``."""
    a_plus, a_minus = h
    mu, nu = complex(param.mu), complex(param.nu)
    alpha = 2.0 * a_minus
    xi12 = GrassmannElement.monomial(2, (1, 2))
    left = 1 + (0.5 * mu * np.exp(-2 * alpha)) * xi12
    right = 1 - (0.5 * mu) * xi12
    top = berezin_top(left * right)
    # (lambda - rho)(h) = lambda(h) + alpha(h)
    return complex(top * np.exp(mu * a_plus + nu * a_minus + alpha))
