"""Truncated Taylor jets with batched, complex coefficients.

A :class:`Jet` of order ``N`` represents ``f(x0 + e) = sum_k c_k e^k mod e^(N+1)``.
Coefficients are stored in Taylor-normalised form (``c_k = f^(k)(x0)/k!``)
with shape ``(N+1, *batch)`` so that one jet can carry many expansion points
at once; this is how the quadrature routines evaluate ``d^k/dr^k`` of a
profile on a whole panel of nodes.
"""
from __future__ import annotations

import math
from numbers import Number

import numpy as np

__all__ = ["Jet", "jexp", "jlog", "jsqrt", "jpow", "derivative"]


def _align(a, b):
    """Insert singleton axes after axis 0 so two coefficient arrays broadcast."""
    da, db = a.ndim, b.ndim
    if da < db:
        a = a.reshape(a.shape[:1] + (1,) * (db - da) + a.shape[1:])
    elif db < da:
        b = b.reshape(b.shape[:1] + (1,) * (da - db) + b.shape[1:])
    return a, b


class Jet:
    __slots__ = ("coeffs", "center")
    __array_priority__ = 100

    def __init__(self, coeffs, center=None):
        c = np.asarray(coeffs, dtype=complex)
        if c.ndim == 0:
            c = c.reshape(1)
        self.coeffs = c
        self.center = center

    # -- constructors -------------------------------------------------------
    @classmethod
    def variable(cls, x, order):
        """Jet of the identity map at ``x`` (scalar or array of points)."""
        x = np.asarray(x, dtype=float)
        c = np.zeros((order + 1,) + x.shape, dtype=complex)
        c[0] = x
        if order >= 1:
            c[1] = 1.0
        return cls(c, center=x)

    @classmethod
    def constant(cls, value, order):
        value = np.asarray(value, dtype=complex)
        c = np.zeros((order + 1,) + value.shape, dtype=complex)
        c[0] = value
        return cls(c)

    @classmethod
    def from_derivatives(cls, derivs, center=None):
        """Build from ``(f(x0), f'(x0), ..., f^(N)(x0))``."""
        d = np.asarray(derivs, dtype=complex)
        fact = np.array([math.factorial(k) for k in range(d.shape[0])], dtype=float)
        return cls(d / fact.reshape((-1,) + (1,) * (d.ndim - 1)), center=center)

    # -- access -------------------------------------------------------------
    @property
    def order(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def value(self):
        return self.coeffs[0]

    def derivative(self, k: int):
        if k > self.order:
            raise ValueError(f"jet of order {self.order} has no derivative of order {k}")
        return math.factorial(k) * self.coeffs[k]

    def derivatives(self):
        fact = np.array([math.factorial(k) for k in range(self.order + 1)], dtype=float)
        return self.coeffs * fact.reshape((-1,) + (1,) * (self.coeffs.ndim - 1))

    def truncate(self, order: int) -> "Jet":
        return Jet(self.coeffs[: order + 1], self.center)

    def __repr__(self):
        return f"Jet(order={self.order}, coeffs={self.coeffs!r})"

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Jet):
            n = min(self.order, other.order)
            a, b = _align(self.coeffs[: n + 1], other.coeffs[: n + 1])
            return a, b
        other = np.asarray(other, dtype=complex)
        b = np.zeros((self.order + 1,) + other.shape, dtype=complex)
        b[0] = other
        return _align(self.coeffs, b)

    def __add__(self, other):
        a, b = self._coerce(other)
        return Jet(a + b, self.center)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        return Jet(a - b, self.center)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        return Jet(b - a, self.center)

    def __neg__(self):
        return Jet(-self.coeffs, self.center)

    def __mul__(self, other):
        if not isinstance(other, Jet):
            other = np.asarray(other, dtype=complex)
            a, b = _align(self.coeffs, other[None, ...])
            return Jet(a * b, self.center)
        a, b = self._coerce(other)
        n = a.shape[0]
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=complex)
        for j in range(n):
            out[j:] += a[j] * b[: n - j]
        return Jet(out, self.center)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            other = np.asarray(other, dtype=complex)
            a, b = _align(self.coeffs, other[None, ...])
            return Jet(a / b, self.center)
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def reciprocal(self) -> "Jet":
        f = self.coeffs
        n = f.shape[0]
        h = np.zeros_like(f)
        h[0] = 1.0 / f[0]
        for k in range(1, n):
            acc = np.zeros_like(f[0])
            for j in range(1, k + 1):
                acc = acc + f[j] * h[k - j]
            h[k] = -acc * h[0]
        return Jet(h, self.center)

    def __pow__(self, alpha):
        return jpow(self, alpha)

    def compose(self, outer: "Jet") -> "Jet":
        """Return ``outer(self)`` where ``outer`` is expanded at ``self.value``."""
        n = min(self.order, outer.order)
        inner = self.truncate(n)
        shift = Jet(inner.coeffs.copy(), inner.center)
        shift.coeffs[0] = 0.0
        oc = outer.coeffs
        # Horner in the nilpotent shift
        a, _ = _align(oc[: n + 1], shift.coeffs)
        acc = Jet.constant(a[n], n)
        for k in range(n - 1, -1, -1):
            acc = acc * shift + a[k]
        acc.center = inner.center
        return acc


def jpow(f: Jet, alpha) -> Jet:
    """``f ** alpha`` on the principal branch; integer powers allow a zero body."""
    if isinstance(alpha, Number) and not isinstance(alpha, complex) and float(alpha).is_integer():
        m = int(alpha)
        if m >= 0:
            result = Jet.constant(np.ones(f.coeffs.shape[1:]), f.order)
            base = f
            while m:
                if m & 1:
                    result = result * base
                m >>= 1
                if m:
                    base = base * base
            result.center = f.center
            return result
        return jpow(f.reciprocal(), -m)
    c = f.coeffs
    n = c.shape[0]
    alpha = np.asarray(alpha, dtype=complex)
    c0 = c[0]
    h = np.zeros(np.broadcast_shapes(c.shape, (1,) + alpha.shape), dtype=complex)
    h[0] = c0 ** alpha
    for k in range(1, n):
        acc = np.zeros_like(h[0])
        for j in range(1, k + 1):
            acc = acc + (alpha * j - (k - j)) * c[j] * h[k - j]
        h[k] = acc / (k * c0)
    return Jet(h, f.center)


def jexp(f: Jet) -> Jet:
    c = f.coeffs
    n = c.shape[0]
    h = np.zeros_like(c)
    h[0] = np.exp(c[0])
    for k in range(1, n):
        acc = np.zeros_like(c[0])
        for j in range(1, k + 1):
            acc = acc + j * c[j] * h[k - j]
        h[k] = acc / k
    return Jet(h, f.center)


def jlog(f: Jet) -> Jet:
    c = f.coeffs
    n = c.shape[0]
    h = np.zeros_like(c)
    h[0] = np.log(c[0])
    for k in range(1, n):
        acc = k * c[k]
        for j in range(1, k):
            acc = acc - j * h[j] * c[k - j]
        h[k] = acc / (k * c[0])
    return Jet(h, f.center)


def jsqrt(f: Jet) -> Jet:
    return jpow(f, 0.5)


def derivative(fn, x, k: int):
    """``d^k/dx^k fn(x)`` for ``fn`` written in jet arithmetic."""
    return fn(Jet.variable(x, k)).derivative(k)
