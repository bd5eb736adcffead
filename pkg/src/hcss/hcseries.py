"""Harish-Chandra series ``Phi_lam(e^{t h0}) = e^{(lam-rho)t} sum_l gamma_l(lam) e^{-2lt}``.

``gamma_0 = c_formula(pair, lam)``, and the remaining coefficients follow from

    l(l - lam) g_l = (m_a/2)(rho - lam + 2(l-1)) g_{l-1} + (rho - lam + l - 2)(rho + l - 2) g_{l-2}.

For ``osp`` with even ``m_alpha <= 0`` the series stops at ``l = -rho``; those
coefficients are set to zero rather than divided out, so integral ``lam``
beyond the last nonzero term is allowed there.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .cfunc import c_formula
from .rootdata import Family, GL11Param, SymmetricPair
from .special import binom, pochhammer

__all__ = [
    "SeriesError",
    "Truncation",
    "SeriesCoefficients",
    "gamma_coeffs",
    "gamma_closed_osp",
    "gamma_finite_binomial",
    "phi_series",
    "phi_spherical",
    "phi_jacobi",
    "phi_jacobi_spherical",
    "jacobi_p",
    "phi_osp_p0",
    "phi_gl11",
    "in_exclusion_set",
    "GUARD",
    "MAX_TERMS",
    "T_MIN",
]

GUARD = 1e-6
MAX_TERMS = 500
T_MIN = 0.05
_RESIDUAL_TOL = 1e-12
_RUN = 5


class SeriesError(ValueError):
    """Raised for exceptional parameters or an uncontrolled series tail."""


class Truncation(enum.Enum):
    TAIL_BOUND = "tail_bound"
    EXACT_TERMINATION = "exact_termination"
    CAP = "cap"


def _near_positive_integer(lam, ell_max):
    k = round(lam.real)
    return 1 <= k <= ell_max and abs(lam - k) < GUARD


def in_exclusion_set(lam) -> bool:
    """``lam`` within ``GUARD`` of a point of ``Z/2``."""
    lam = complex(lam)
    return abs(2 * lam - round(2 * lam.real)) < 2 * GUARD


@dataclass(frozen=True)
class SeriesCoefficients:
    pair: SymmetricPair
    lam: complex
    gamma: np.ndarray
    truncation: Truncation
    residuals: np.ndarray

    @property
    def L(self) -> int:
        return len(self.gamma) - 1

    def certified(self, tol=_RESIDUAL_TOL) -> bool:
        return bool(np.all(self.residuals <= tol))

    def gangolli_constant(self, t: float) -> float:
        """Smallest ``K`` with ``|gamma_l| <= K e^{l t}`` over the stored terms."""
        ell = np.arange(len(self.gamma))
        return float(np.max(np.abs(self.gamma) * np.exp(-ell * t)))

    def tail_bound(self, t: float) -> float:
        """Bound for ``sum_{l > L} |gamma_l e^{-2lt}|`` from the Gangolli estimate."""
        if self.truncation is Truncation.EXACT_TERMINATION:
            return 0.0
        k = self.gangolli_constant(t)
        return k * math.exp(-(self.L + 1) * t) / (1 - math.exp(-t))

    def partial_sum(self, t: float) -> complex:
        ell = np.arange(len(self.gamma))
        return complex(np.sum(self.gamma * np.exp(-2 * ell * t)))


def _rhs(pair, lam, ell, g1, g2):
    rho = float(pair.rho)
    a = 0.5 * pair.m_alpha * (rho - lam + 2 * (ell - 1)) * g1
    b = (rho - lam + ell - 2) * (rho + ell - 2) * g2
    return a + b, max(abs(a), abs(b))


def gamma_coeffs(pair: SymmetricPair, lam, L: int | None = None, *, t: float = 1.0,
                 tol: float = 1e-16, cap: int = MAX_TERMS, gamma0=None,
                 exact_termination: bool = True) -> SeriesCoefficients:
    """Coefficients ``gamma_0..gamma_L``.

    With ``L=None`` the recursion runs until ``_RUN`` consecutive terms satisfy
    ``|gamma_l e^{-2lt}| < tol |partial sum|`` and the Gangolli tail bound is
    below the same threshold; reaching ``cap`` first raises :class:`SeriesError`.
    ``gamma0`` overrides the default ``c_formula(pair, lam)``.  With
    ``exact_termination=False`` terminating series are run through the plain
    recursion (division included), which is how termination is tested.
    """
    if pair.family is Family.GL11:
        raise SeriesError("gl11 has no Harish-Chandra series; use phi_gl11")
    lam = complex(lam)
    g0 = complex(c_formula(pair, lam)) if gamma0 is None else complex(gamma0)
    finite = pair.finite_series and exact_termination
    n_last = int(-pair.rho) if finite else None
    gam = [g0]
    res = [0.0]
    partial = g0
    run = 0
    ell = 0
    reason = Truncation.TAIL_BOUND
    while True:
        ell += 1
        g1 = gam[-1]
        g2 = gam[-2] if len(gam) > 1 else 0j
        rhs, scale = _rhs(pair, lam, ell, g1, g2)
        if finite and ell > n_last:
            g = 0j
        else:
            if _near_positive_integer(lam, ell) and round(lam.real) == ell:
                raise SeriesError(
                    f"lambda = {lam} is within {GUARD} of the positive integer {ell}; "
                    "the recursion divides by l(l - lambda). Use the integral route instead.")
            g = rhs / (ell * (ell - lam))
        lhs = ell * (ell - lam) * g
        scale = max(scale, abs(lhs), abs(g0) * 1e-300)
        res.append(abs(lhs - rhs) / scale if scale else 0.0)
        gam.append(g)
        if L is not None:
            if ell >= L:
                reason = Truncation.EXACT_TERMINATION if (finite and L > n_last) else Truncation.CAP
                break
            continue
        if finite and ell >= n_last + 2:
            reason = Truncation.EXACT_TERMINATION
            break
        term = abs(g) * math.exp(-2 * ell * t)
        partial += g * math.exp(-2 * ell * t)
        run = run + 1 if term < tol * abs(partial) else 0
        if run >= _RUN:
            coeffs = SeriesCoefficients(pair, lam, np.array(gam), Truncation.TAIL_BOUND, np.array(res))
            if coeffs.tail_bound(t) <= max(tol, 1e-15) * abs(partial) or ell >= cap:
                break
        if ell >= cap:
            raise SeriesError(
                f"series for {pair} at lambda = {lam} not controlled at t = {t} within {cap} terms")
    return SeriesCoefficients(pair, lam, np.array(gam), reason, np.array(res))


def gamma_closed_osp(pair: SymmetricPair, lam, ell: int, gamma0=None) -> complex:
    """``gamma_0 prod_{m<l} (m+rho)(m+rho-lam) / ((m+1)(m+1-lam))`` for ``osp``."""
    if pair.family is not Family.ORTHOSYMPLECTIC:
        raise ValueError("the product formula needs m_2alpha = 0 (osp pairs)")
    lam = complex(lam)
    rho = float(pair.rho)
    g = complex(c_formula(pair, lam)) if gamma0 is None else complex(gamma0)
    for m in range(ell):
        num = (m + rho) * (m + rho - lam)
        if num == 0:
            return 0j
        den = (m + 1) * (m + 1 - lam)
        if abs(m + 1 - lam) < GUARD:
            raise SeriesError(f"lambda = {lam} hits the denominator (m + 1 - lambda) at m = {m}")
        g *= num / den
    return g


def gamma_finite_binomial(pair: SymmetricPair, lam, ell: int) -> complex:
    """``(-rho)! C(-lam-rho, -rho-l) C(lam-rho, l)``, the terminating osp coefficients."""
    if not pair.finite_series:
        raise ValueError(f"{pair} does not have a terminating series")
    n = int(-pair.rho)
    lam = complex(lam)
    rho = float(pair.rho)
    if ell < 0 or ell > n:
        return 0j
    return math.factorial(n) * binom(-lam - rho, n - ell) * binom(lam - rho, ell)


def _check_t(t, t_min):
    if t < t_min:
        raise SeriesError(f"t = {t} is below t_min = {t_min}; the series is not controlled there")


def phi_series(pair: SymmetricPair, lam, t: float, tol: float = 1e-16, t_min: float = T_MIN,
               full=False):
    """``Phi_lam`` at ``e^{t h0}``; ``full=True`` returns ``(value, tail_bound, coefficients)``."""
    _check_t(t, t_min)
    lam = complex(lam)
    coeffs = gamma_coeffs(pair, lam, t=t, tol=tol)
    s = coeffs.partial_sum(t)
    pre = np.exp((lam - float(pair.rho)) * t)
    val = complex(pre * s)
    if full:
        return val, abs(pre) * coeffs.tail_bound(t), coeffs
    return val


def phi_spherical(pair: SymmetricPair, lam, t: float, tol: float = 1e-16, t_min: float = T_MIN):
    """``sum_{w in W0} Phi_{w lam}``.

    With a two-element Weyl group ``lam`` in ``Z/2`` is refused.  When ``W0``
    is trivial ``phi = Phi_lam`` and only the recursion's own guard applies.
    """
    lam = complex(lam)
    if pair.weyl_order == 2 and in_exclusion_set(lam):
        raise SeriesError(
            f"lambda = {lam} lies in Z/2 (guard {GUARD}); the series does not define "
            "phi there. Use the integral route.")
    if t <= 0:
        raise SeriesError("t must be positive")
    val = phi_series(pair, lam, t, tol, t_min)
    if pair.weyl_order == 2:
        val += phi_series(pair, -lam, t, tol, t_min)
    return val


def jacobi_p(n: int, a, b, x) -> complex:
    """``P_n^{(a,b)}(x) = (1/n!) sum_l C(n,l) (a+l+1)_{n-l} (a+b+n+1)_l ((x-1)/2)^l``."""
    y = (x - 1) / 2
    total = 0j
    for ell in range(n + 1):
        total += (math.comb(n, ell) * pochhammer(a + ell + 1, n - ell)
                  * pochhammer(a + b + n + 1, ell) * y ** ell)
    return total / math.factorial(n)


def phi_jacobi(pair: SymmetricPair, lam, t: float) -> complex:
    """``e^{(lam-rho)t} P_n^{(-lam, 2rho-1)}(1 - 2e^{-2t})`` with ``n = -rho``.

    This is the terminating ``Phi_lam`` up to the constant ``(-1)^n n!``.
    """
    if not pair.finite_series:
        raise ValueError(f"{pair}: the Jacobi form needs osp with even m_alpha <= 0")
    lam = complex(lam)
    rho = float(pair.rho)
    n = int(-pair.rho)
    x = 1 - 2 * math.exp(-2 * t)
    return complex(np.exp((lam - rho) * t) * jacobi_p(n, -lam, 2 * rho - 1, x))


def phi_jacobi_spherical(pair: SymmetricPair, lam, t: float) -> complex:
    """Weyl sum of :func:`phi_jacobi`, proportional to ``phi_lam`` with the same constant."""
    val = phi_jacobi(pair, lam, t)
    if pair.weyl_order == 2:
        val += phi_jacobi(pair, -complex(lam), t)
    return val


def phi_osp_p0(q: int, lam, t: float) -> complex:
    """``e^{lam t} sum_k C(lam-rho, k) C(-lam-rho, -rho-k) e^{(-rho-2k)t}`` for ``osp(0, q)``."""
    if q < 1:
        raise ValueError("q must be at least 1")
    lam = complex(lam)
    rho = -q
    total = 0j
    for k in range(q + 1):
        total += binom(lam - rho, k) * binom(-lam - rho, q - k) * math.exp((-rho - 2 * k) * t)
    return complex(np.exp(lam * t) * total)


def phi_gl11(param: GL11Param, h) -> complex:
    """``-mu e^{lam(h)} sinh(alpha(h))`` with ``alpha(h) = 2 a_minus``."""
    a_plus, a_minus = h
    mu, nu = complex(param.mu), complex(param.nu)
    return complex(-mu * np.exp(mu * a_plus + nu * a_minus) * np.sinh(2 * a_minus))
