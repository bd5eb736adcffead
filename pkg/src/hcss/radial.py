"""Rotationally invariant Berezin integrals over A^{p|2q} reduced to 1-D problems.

A profile is described by ``g(u) = f0(sqrt(u))``, a function of the super
norm square ``u = ||y||^2``; supplying profiles in this form makes the even
extension automatic.  All derivatives are taken with :mod:`hcss.jets`.

Singular weights ``r^(p/2 - 1)`` and ``r^(-1/2)`` are removed by the change of
variables ``r = w^2`` before quadrature.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .grassmann import GrassmannElement, berezin_top, norm_squared
from .jets import Jet, jsqrt
from .quadrature import QuadratureSpec, QuadResult, integrate
from .special import complex_gamma

__all__ = [
    "RadialProfile",
    "BerezinMeasure",
    "localize",
    "reduce_dims",
    "radial_integral",
    "gaussian_profile",
]

_EVEN_TOL = 1e-9


@dataclass(frozen=True)
class RadialProfile:
    """Radial profile ``f0`` given through ``g(u) = f0(sqrt(u))``.

    ``g`` maps a :class:`Jet` in ``u`` to a :class:`Jet`; it must handle batched
    jets and be stateless.  ``points`` are breakpoints in ``u`` where the
    integrand changes quickly, and ``support`` (if set) is an upper bound of
    the support in ``u``.

    A profile may depend on array-valued parameters; ``batch`` is then their
    broadcast shape, quadrature nodes are given trailing singleton axes, and
    integrals come back with shape ``batch``.
    """
    g: callable
    description: str = ""
    points: tuple = field(default=())
    support: float | None = None
    batch: tuple = field(default=())

    @classmethod
    def from_radial(cls, f0, description="", points=(), support=None):
        """Wrap an even evaluator ``f0(r_jet)`` of the radial variable."""

        def g(u: Jet) -> Jet:
            body = np.asarray(u.value).real
            if np.all(body > 0):
                return f0(jsqrt(u))
            if np.any(body != 0):
                raise ValueError("from_radial profiles must be sampled at u > 0 or at u = 0 only")
            # Taylor data of g at 0 are the even Taylor data of f0 at 0
            n = u.order
            fj = f0(Jet.variable(np.zeros(body.shape), 2 * n + 1))
            odd = fj.coeffs[1::2]
            scale = max(1.0, float(np.max(np.abs(fj.coeffs))))
            if np.max(np.abs(odd)) > _EVEN_TOL * scale:
                raise ValueError("radial profile is not even: odd Taylor terms at r = 0 do not vanish")
            outer = Jet(fj.coeffs[0::2][: n + 1])
            return u.compose(outer)

        return cls(g, description, tuple(points), support)

    def nodes(self, w):
        """Reshape 1-D quadrature nodes to broadcast against the parameter batch."""
        return w.reshape(w.shape + (1,) * len(self.batch))

    def radial(self, r: Jet) -> Jet:
        """``f0`` itself as a jet in the radial variable."""
        return self.g(r * r)

    def u_jet(self, u, order: int) -> Jet:
        return self.g(Jet.variable(u, order))


def gaussian_profile() -> RadialProfile:
    """``f0(r) = exp(-r^2)``, i.e. ``g(u) = exp(-u)``."""
    from .jets import jexp
    return RadialProfile(lambda u: jexp(-u), "exp(-||y||^2)")


def _w_points(profile):
    return tuple(math.sqrt(p) for p in profile.points if p > 0)


def _w_range(profile):
    if profile.support is None:
        return math.inf
    return math.sqrt(profile.support)


def _integrate_w(fn, profile, quad):
    """Integrate ``fn(w)`` over ``w in (0, sqrt(support))``."""
    return integrate(fn, 0.0, _w_range(profile), quad, points=_w_points(profile))


def _gamma_half(p):
    return complex_gamma(p / 2)


def localize(p: int, q: int, profile: RadialProfile, quad: QuadratureSpec | None = None,
             return_result=False):
    """Berezin integral of the profile over ``A^{p|2q}`` with density ``(-2 pi)^(-q)|Dy|``.

    ``p > 0``: ``pi^((p-2q)/2) (-1)^q / Gamma(p/2) int_0^inf r^(p/2-1) d^q g(r) dr``;
    ``p = 0``: ``(-pi)^(-q) d^q g(0)``.
    """
    _check_dims(p, q)
    if p == 0:
        val = _point((-math.pi) ** (-q) * profile.u_jet(0.0, q).derivative(q))
        return (val, QuadResult(val, 0.0, 0)) if return_result else val

    def fn(w):
        # r = w^2: r^(p/2-1) dr = 2 w^(p-1) dw
        w = profile.nodes(w)
        d = profile.u_jet(w * w, q).derivative(q)
        return _full(profile, 2.0 * w ** (p - 1) * d)

    res = _integrate_w(fn, profile, quad)
    pref = math.pi ** ((p - 2 * q) / 2) * (-1) ** q / _gamma_half(p)
    val = pref * res.value
    if return_result:
        return val, QuadResult(val, abs(pref) * res.error, res.panels)
    return val


def reduce_dims(p: int, q: int, k: int):
    """Dimensions of the equivalent integral after removing ``k`` ``(2|2)`` blocks."""
    _check_dims(p, q)
    if not isinstance(k, (int, np.integer)) or k < 0 or 2 * k > p or k > q:
        raise ValueError(f"k must be an integer with 0 <= k <= min(p/2, q); got k={k} for ({p}, {q})")
    return p - 2 * k, q - k


def radial_integral(p: int, q: int, profile: RadialProfile, quad: QuadratureSpec | None = None,
                    return_result=False):
    """Berezin integral over ``A^{p|2q}`` expressed through ``d = p - 2q`` only.

    * ``d > 0``: ``2 pi^(d/2)/Gamma(d/2) int_0^inf r^(d-1) f0(r) dr``
    * ``d <= 0`` even: ``(-pi)^(d/2) (-d/2)!/(-d)! d^(-d)_{r=0} f0``
    * ``d < 0`` odd: ``(-pi)^((d-1)/2) int_0^inf r^(-1/2) d^((1-d)/2) g(r) dr``
    """
    _check_dims(p, q)
    d = p - 2 * q
    if d > 0:
        def fn(r):
            r = profile.nodes(r)
            return _full(profile, r ** (d - 1) * profile.u_jet(r * r, 0).value)

        res = _integrate_w(fn, profile, quad)
        pref = 2 * math.pi ** (d / 2) / _gamma_half(d)
    elif d % 2 == 0:
        m = -d
        f0 = profile.radial(Jet.variable(0.0, m))
        val = _point((-math.pi) ** (d // 2) * math.factorial(m // 2) / math.factorial(m)
                     * f0.derivative(m))
        return (val, QuadResult(val, 0.0, 0)) if return_result else val
    else:
        k = (1 - d) // 2

        def fn(w):
            # r = w^2: r^(-1/2) dr = 2 dw
            w = profile.nodes(w)
            return _full(profile, 2.0 * profile.u_jet(w * w, k).derivative(k))

        res = _integrate_w(fn, profile, quad)
        pref = (-math.pi) ** ((d - 1) // 2)
    val = pref * res.value
    if return_result:
        return val, QuadResult(val, abs(pref) * res.error, res.panels)
    return val


@dataclass(frozen=True)
class BerezinMeasure:
    """The density ``(-2 pi)^(-q) |Dy|`` on ``A^{p|2q}``.

    :meth:`integrate` is the brute-force route: the profile is expanded in the
    Grassmann algebra at each even sample point, the top coefficient is
    extracted, and the remaining classical integral over ``R^p`` is done in
    polar coordinates.
    """
    p: int
    q: int

    def __post_init__(self):
        _check_dims(self.p, self.q)

    @property
    def normalization(self) -> float:
        return (-2 * math.pi) ** (-self.q)

    def _top_weights(self):
        # top(g(b + soul)) = sum_k g_k top(soul^k); only k = q survives, but the
        # weights are read off the algebra instead of assumed
        ns = norm_squared(0, [], self.q)
        n = 2 * self.q
        power = GrassmannElement.scalar(n)
        tops = [berezin_top(power)]
        for _ in range(self.q):
            power = power * ns.soul
            tops.append(berezin_top(power))
        return np.array(tops)

    def integrate(self, profile: RadialProfile, quad: QuadratureSpec | None = None) -> complex:
        tops = self._top_weights()
        q, p = self.q, self.p

        def top_at(u):
            c = profile.u_jet(u, q).coeffs
            return np.tensordot(tops, c, axes=(0, 0))

        if p == 0:
            return self.normalization * complex(top_at(0.0))

        def fn(rad):
            rad = profile.nodes(rad)
            return _full(profile, rad ** (p - 1) * top_at(rad * rad))

        res = _integrate_w(fn, profile, quad)
        sphere = 2 * math.pi ** (p / 2) / _gamma_half(p)
        return self.normalization * sphere * res.value


def _full(profile, v):
    return np.broadcast_to(v, v.shape[:1] + tuple(profile.batch)) if profile.batch else v


def _point(v):
    # point formulas broadcast over profile parameters; unwrap scalars
    v = np.asarray(v, dtype=complex)
    return complex(v) if v.ndim == 0 else v


def _check_dims(p, q):
    if p < 0 or q < 0:
        raise ValueError(f"dimensions must be nonnegative, got ({p}, {q})")
