"""Harish-Chandra c-function: Gamma quotients, integral formulas and the limit oracle.

Closed forms carry unit normalisation constants.  Comparisons with an
integral or with the limit oracle go through :func:`fit_constant`, which
fixes one complex constant at a reference point and reports the spread over
the remaining grid.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .jets import Jet, jpow
from .oracle import (CutoffSpec, phi_integral_gl11, phi_parts_osp, phi_parts_unitary)
from .quadrature import QuadratureSpec, integrate
from .rootdata import Family, GL11Param, SymmetricPair
from .special import GammaPole, complex_gamma, rgamma

__all__ = [
    "complex_gamma",
    "c_formula",
    "c_gl11",
    "c_integral_unitary",
    "c_split_unitary",
    "c_integral_osp",
    "c_integral",
    "c_limit_oracle",
    "LimitResult",
    "NormalizationConstant",
    "FitMethod",
    "fit_constant",
    "unitary_zeros",
    "DEFAULT_T_GRID",
]

DEFAULT_T_GRID = (6.0, 8.0, 10.0, 12.0, 16.0, 20.0)


def _anisotropic(pair):
    if pair.family is Family.GL11:
        raise ValueError("gl11 has an isotropic root; use c_gl11")


def c_formula(pair: SymmetricPair, lam, form: str = "auto") -> complex:
    """Closed c-function with unit constant.

    ``form="quotient"`` is ``2^-lam Gamma(lam) / (Gamma((lam + m/2 + 1)/2) Gamma((lam + m/2 + m2)/2))``
    with ``m = m_alpha`` and ``m2 = m_2alpha``.  ``form="ratio"`` is
    ``Gamma(lam) / Gamma(lam + rho)``, available for ``osp``.  The default
    uses ``ratio`` for ``osp`` with ``m_alpha <= 0`` (so the constant of the
    finite product ``prod_k (lam - k)`` is 1) and the quotient everywhere else.
    """
    _anisotropic(pair)
    lam = complex(lam)
    if form == "auto":
        form = "ratio" if (pair.family is Family.ORTHOSYMPLECTIC and pair.m_alpha <= 0) else "quotient"
    if form == "ratio":
        if pair.family is not Family.ORTHOSYMPLECTIC:
            raise ValueError("the Gamma(lam)/Gamma(lam+rho) form applies to osp pairs only")
        return complex_gamma(lam) * rgamma(lam + float(pair.rho))
    if form != "quotient":
        raise ValueError(f"unknown c_formula form {form!r}")
    half = pair.m_alpha / 2
    return (2.0 ** (-lam) * complex_gamma(lam)
            * rgamma(0.5 * (lam + half + 1)) * rgamma(0.5 * (lam + half + pair.m_2alpha)))


def unitary_zeros(pair: SymmetricPair, count: int = 5):
    """Zeros of the unitary c-function in ``Re lam > 0``.

    Both denominator arguments equal ``(lam + p - q + 1)/2``, so ``c`` vanishes
    at ``lam = q - p - 1 - 2k``.
    """
    if pair.family is not Family.UNITARY:
        raise ValueError("zeros are tabulated for unitary pairs only")
    start = pair.q - pair.p - 1
    return [start - 2 * k for k in range(count) if start - 2 * k > 0]


def c_gl11(param: GL11Param):
    """``0`` if ``c_minus = 0``, ``-mu/2`` if ``c_minus > 0``, ``None`` (no limit) if ``c_minus < 0``."""
    _, c_minus = param.direction
    if c_minus == 0:
        return 0j
    if c_minus > 0:
        return -0.5 * complex(param.mu)
    return None


def _check_re(lam):
    if complex(lam).real <= 0:
        raise ValueError("the c-function integrals need Re lambda > 0")


def _unitary_order(pair):
    if pair.family is not Family.UNITARY:
        raise ValueError(f"{pair} is not a unitary pair")
    n = 1 - pair.rho
    if n < 0 or n.denominator != 1:
        raise ValueError(f"{pair} has m_alpha > 0; the point-derivative formula needs q >= p")
    return int(n)


def c_integral_unitary(pair: SymmetricPair, lam, chi: CutoffSpec | None = None,
                       quad: QuadratureSpec | None = None, full=False):
    """``int_0^oo ds d^(1-rho)_{r=0} ((1+r)^2 + s^2)^(-(lam+rho)/2)``.

    With ``chi`` given, the value is instead assembled from the two cutoff
    pieces of :func:`c_split_unitary` and rescaled to the same normalisation
    (the pieces integrate over the whole ``s``-line with the Berezin density).
    ``full=True`` returns ``(value, error_estimate, order)``.
    """
    n = _unitary_order(pair)
    _check_re(lam)
    lam = complex(lam)
    rho = float(pair.rho)
    quad = quad or QuadratureSpec()
    if chi is not None:
        c1, c2, err = c_split_unitary(pair, lam, chi, quad, full=True)
        scale = 2 * (-math.pi) ** (pair.p - pair.q)
        val = (c1 + c2) / scale
        return (val, err / abs(scale), n) if full else val
    z = -(lam + rho) / 2

    def fn(s):
        r = Jet.variable(np.zeros_like(s), n)
        return jpow((1 + r) * (1 + r) + s * s, z).derivative(n)

    res = integrate(fn, 0.0, math.inf, quad, points=(1.0,))
    return (res.value, res.error, n) if full else res.value


def c_split_unitary(pair, lam, chi: CutoffSpec | None = None, quad=None, full=False):
    """The two cutoff pieces ``(c_I, c_II)`` of the unitary c-function.

    ``c_I`` carries ``chi(psi(1))`` and ``c_II`` carries
    ``(1 - chi)(psi(1)/psi(0)) psi(0)^((lam-rho)/2)``; only their sum is
    independent of the cutoff.
    """
    _unitary_order(pair)
    _check_re(lam)
    v = phi_parts_unitary(pair, lam, 0.0, chi, quad)
    c1, c2 = v.parts
    return (c1, c2, v.error) if full else (c1, c2)


def c_integral_osp(pair: SymmetricPair, lam, chi: CutoffSpec | None = None,
                   quad: QuadratureSpec | None = None, full=False):
    """osp c-function from the ``t -> oo`` integrands, through :func:`radial_integral`.

    The branch (classical for ``m_alpha > 0``, point derivative for even
    ``m_alpha <= 0``, ``r^(-1/2)`` weight for odd ``m_alpha < 0``) is selected
    by ``p - 2q`` alone.
    """
    if pair.family is not Family.ORTHOSYMPLECTIC:
        raise ValueError(f"{pair} is not an orthosymplectic pair")
    _check_re(lam)
    v = phi_parts_osp(pair, lam, 0.0, chi, quad)
    return (v.value, v.error) if full else v.value


def c_integral(pair, lam, chi=None, quad=None):
    if pair.family is Family.UNITARY:
        return c_integral_unitary(pair, lam, chi, quad)
    if pair.family is Family.ORTHOSYMPLECTIC:
        return c_integral_osp(pair, lam, chi, quad)
    raise ValueError("gl11 has no integral c-function route; use c_gl11 or c_limit_oracle")


# -- limit oracle --------------------------------------------------------------

@dataclass
class LimitResult:
    """Extrapolated ``lim e^{-t(lam-rho)} phi(t)``.

    ``values`` are the raw scaled oracle values on ``t_grid``; ``diagonal``
    holds successive Neville extrapolants, whose last difference is
    ``error``.  ``converged`` is False when the raw values do not settle.
    """
    value: complex
    error: float
    converged: bool
    t_grid: tuple
    values: np.ndarray
    diagonal: np.ndarray = field(repr=False)


def _neville_at_zero(x, y):
    """Diagonal of the Neville tableau for the polynomial interpolant evaluated at 0."""
    x = np.asarray(x, dtype=float)
    p = np.array(y, dtype=complex)
    diag = [p[0]]
    n = len(x)
    for k in range(1, n):
        for i in range(n - k):
            p[i] = (x[i + k] * p[i] - x[i] * p[i + 1]) / (x[i + k] - x[i])
        diag.append(p[0])
    return np.array(diag)


def _scaled_values_gl11(param: GL11Param, t_grid):
    c_plus, c_minus = param.direction
    mu, nu = complex(param.mu), complex(param.nu)
    out = []
    for t in t_grid:
        # (lam - rho)(t h0) = t (mu c+ + nu c- + 2 c-)
        phi = phi_integral_gl11(param, (t * c_plus, t * c_minus))
        out.append(phi * np.exp(-t * (mu * c_plus + nu * c_minus + 2 * c_minus)))
    return np.array(out)


def c_limit_oracle(pair: SymmetricPair, lam, t_grid=DEFAULT_T_GRID, chi=None, quad=None,
                   rtol: float = 1e-6) -> LimitResult:
    """Richardson (Neville in ``x = e^{-2t}``) limit of the scaled oracle spherical function.

    For ``gl11``, ``lam`` is a :class:`GL11Param` and ``h0`` is its direction.
    """
    t_grid = tuple(sorted(float(t) for t in t_grid))
    if len(t_grid) < 2:
        raise ValueError("need at least two t values")
    if pair.family is Family.GL11:
        if not isinstance(lam, GL11Param):
            raise TypeError("gl11 limits need a GL11Param")
        vals = _scaled_values_gl11(lam, t_grid)
    else:
        _check_re(lam)
        parts = phi_parts_unitary if pair.family is Family.UNITARY else phi_parts_osp
        vals = np.array([parts(pair, lam, math.exp(-2 * t), chi, quad).value for t in t_grid])
    # highest index = largest t = smallest x, as Neville's p[0] after the sweep
    xs = np.exp(-2 * np.array(t_grid))[::-1]
    diag = _neville_at_zero(xs, vals[::-1])
    value = diag[-1]
    error = float(abs(diag[-1] - diag[-2]))
    diffs = np.abs(np.diff(vals))
    scale = max(abs(value), 1e-300)
    settled = bool(np.all(np.isfinite(vals))) and (
        diffs[-1] <= max(diffs[0], rtol * scale) and diffs[-1] <= 1e-2 * max(np.max(np.abs(vals)), 1e-300))
    if not settled:
        value = complex("nan+nanj")
    return LimitResult(complex(value), error, settled, t_grid, vals, diag)


# -- normalisation constants ------------------------------------------------------

class FitMethod(enum.Enum):
    UNIT_CONVENTION = "unit"
    FITTED_TO_ORACLE = "fitted"


@dataclass(frozen=True)
class NormalizationConstant:
    value: complex
    fitted_at: object
    method: FitMethod

    def __post_init__(self):
        if self.value == 0 or not np.isfinite(self.value):
            raise ValueError("normalisation constant must be finite and nonzero")


def fit_constant(reference, model, ref_index: int = 0):
    """Fit ``reference ~ C * model`` at ``ref_index``; return ``(C, max relative error)``.

    Relative errors are taken over all other entries.
    """
    ref = np.asarray(reference, dtype=complex).ravel()
    mod = np.asarray(model, dtype=complex).ravel()
    if ref.shape != mod.shape:
        raise ValueError("reference and model grids differ in size")
    if mod[ref_index] == 0:
        raise ZeroDivisionError("model vanishes at the fit point")
    const = ref[ref_index] / mod[ref_index]
    rel = np.abs(const * mod - ref) / np.maximum(np.abs(ref), 1e-300)
    others = np.delete(rel, ref_index)
    worst = float(np.max(others)) if others.size else 0.0
    return NormalizationConstant(complex(const), ref_index, FitMethod.FITTED_TO_ORACLE), worst
