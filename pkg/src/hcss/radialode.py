"""Radial Laplacian ``(d/dt)^2 + (m_a coth t + 2 m_2a coth 2t) d/dt`` and eigenfunction residuals.

Derivatives are 5-point central differences, independent of the jet code that
produces the values being checked.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rootdata import Family, SymmetricPair

__all__ = ["RadialOperator", "apply", "eigen_residual", "phi_method"]

DEFAULT_H = 1e-3
_EPS = 1e-300


@dataclass(frozen=True)
class RadialOperator:
    m_alpha: float
    m_2alpha: float

    @classmethod
    def for_pair(cls, pair: SymmetricPair) -> "RadialOperator":
        if pair.family is Family.GL11:
            raise ValueError("no radial operator is available for gl11")
        return cls(float(pair.m_alpha), float(pair.m_2alpha))

    def first_order_coefficient(self, t: float) -> float:
        return self.m_alpha / math.tanh(t) + 2 * self.m_2alpha / math.tanh(2 * t)


def apply(op: RadialOperator, f, t: float, h: float = DEFAULT_H) -> complex:
    """``Delta f(t)`` from samples ``f(t + k h)``, ``k = -2..2``."""
    if t - 2 * h <= 0:
        raise ValueError(f"t = {t} is too close to 0 for a stencil of half-width {2 * h}")
    fm2, fm1, f0, fp1, fp2 = (complex(f(t + k * h)) for k in (-2, -1, 0, 1, 2))
    d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
    d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)
    return d2 + op.first_order_coefficient(t) * d1


def phi_method(pair: SymmetricPair, method: str):
    """``t -> phi(lam, t)`` factory for the named evaluation route."""
    from . import hcseries, oracle

    if method == "series":
        return lambda lam, t: hcseries.phi_spherical(pair, lam, t, t_min=1e-3)
    if method == "jacobi":
        return lambda lam, t: hcseries.phi_jacobi_spherical(pair, lam, t)
    if method == "closed":
        if pair.family is Family.ORTHOSYMPLECTIC and pair.p == 0:
            return lambda lam, t: hcseries.phi_osp_p0(pair.q, lam, t)
        raise ValueError(f"no closed form for {pair}; closed is available for osp:0:q")
    if method == "integral":
        return lambda lam, t: oracle.phi_integral(pair, lam, t)
    raise ValueError(f"unknown method {method!r}; expected series, jacobi, closed or integral")


def eigen_residual(pair: SymmetricPair, lam, method="series", t_list=(0.7, 1.3),
                   h: float = DEFAULT_H) -> float:
    """``max_t |Delta phi - (lam^2 - rho^2) phi| / (|lam^2 - rho^2| |phi| + eps)``.

    ``method`` is a route name or a callable ``phi(lam, t)``.
    """
    op = RadialOperator.for_pair(pair)
    fn = phi_method(pair, method) if isinstance(method, str) else method
    lam = complex(lam)
    ev = lam * lam - float(pair.rho) ** 2
    worst = 0.0
    for t in t_list:
        def f(s):
            return fn(lam, s)
        phi = complex(f(t))
        lap = apply(op, f, t, h)
        worst = max(worst, abs(lap - ev * phi) / (abs(ev) * abs(phi) + _EPS))
    return worst
