"""Exterior algebra on ``n = 2q`` odd generators with complex coefficients.

Elements are stored densely: ``coeffs[mask]`` is the coefficient of the
monomial ``eta_{i1} eta_{i2} ...`` (ascending indices) whose generator set is
the bitmask ``mask`` (bit ``k`` is ``eta_{k+1}``).
"""
from __future__ import annotations

import numpy as np

from .jets import Jet

__all__ = [
    "MAX_GENERATORS",
    "GrassmannElement",
    "EvenNilpotent",
    "mul",
    "norm_squared",
    "berezin_top",
    "apply_analytic",
]

MAX_GENERATORS = 16


def _check_n(n):
    if n < 0 or n % 2:
        raise ValueError(f"number of generators must be even and nonnegative, got {n}")
    if n > MAX_GENERATORS:
        raise ValueError(
            f"{n} generators requested; at most {MAX_GENERATORS} (q <= 8) are supported")


def _masks(n):
    return np.arange(1 << n, dtype=np.int64)


def _sign_row(i: int, n: int) -> np.ndarray:
    """Sign of ``mono(i) * mono(j)`` relative to ``mono(i|j)`` for every ``j``.

    Reordering costs one transposition for each pair ``x in i, y in j`` with
    ``x > y``.  Entries with ``i & j != 0`` are zeroed.
    """
    j = _masks(n)
    swaps = np.zeros_like(j)
    for y in range(n):
        above = bin(i >> (y + 1)).count("1")
        if above:
            swaps += ((j >> y) & 1) * above
    sign = np.where(swaps % 2, -1, 1)
    sign[(j & i) != 0] = 0
    return sign


class GrassmannElement:
    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        _check_n(n)
        self.n = n
        if coeffs is None:
            coeffs = np.zeros(1 << n, dtype=complex)
        c = np.array(coeffs, dtype=complex)
        if c.shape != (1 << n,):
            raise ValueError(f"expected {1 << n} coefficients, got shape {c.shape}")
        self.coeffs = c

    @classmethod
    def scalar(cls, n, value=1.0):
        e = cls(n)
        e.coeffs[0] = value
        return e

    @classmethod
    def generator(cls, n, i):
        """``eta_i`` with 1-based index ``i``."""
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} out of range 1..{n}")
        e = cls(n)
        e.coeffs[1 << (i - 1)] = 1.0
        return e

    @classmethod
    def monomial(cls, n, indices, value=1.0):
        """``value * eta_{i1} ... eta_{ik}`` in the given (not necessarily sorted) order."""
        out = cls.scalar(n, value)
        for i in indices:
            out = out * cls.generator(n, i)
        return out

    def __getitem__(self, indices):
        """Coefficient on the ascending monomial with the given generator indices."""
        mask = 0
        for i in indices:
            mask |= 1 << (i - 1)
        return self.coeffs[mask]

    # -- structure ----------------------------------------------------------
    @property
    def body(self) -> complex:
        return complex(self.coeffs[0])

    def grade(self, k: int) -> "GrassmannElement":
        deg = np.bitwise_count(_masks(self.n))
        return GrassmannElement(self.n, np.where(deg == k, self.coeffs, 0))

    def is_even(self, tol=0.0) -> bool:
        deg = np.bitwise_count(_masks(self.n))
        return bool(np.all(np.abs(self.coeffs[deg % 2 == 1]) <= tol))

    def top(self) -> complex:
        return complex(self.coeffs[-1])

    def allclose(self, other, atol=1e-12) -> bool:
        other = self._lift(other)
        return bool(np.allclose(self.coeffs, other.coeffs, rtol=0, atol=atol))

    def __repr__(self):
        terms = []
        for mask in np.nonzero(self.coeffs)[0]:
            gens = "".join(f"e{k + 1}" for k in range(self.n) if mask >> k & 1)
            terms.append(f"({self.coeffs[mask]:.6g}){gens}")
        return f"GrassmannElement(n={self.n}, " + (" + ".join(terms) or "0") + ")"

    # -- arithmetic ---------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, GrassmannElement):
            if other.n != self.n:
                raise ValueError(
                    f"generator counts differ: {self.n} vs {other.n}")
            return other
        return GrassmannElement.scalar(self.n, other)

    def __add__(self, other):
        return GrassmannElement(self.n, self.coeffs + self._lift(other).coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        return GrassmannElement(self.n, self.coeffs - self._lift(other).coeffs)

    def __rsub__(self, other):
        return GrassmannElement(self.n, self._lift(other).coeffs - self.coeffs)

    def __neg__(self):
        return GrassmannElement(self.n, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, GrassmannElement):
            return mul(self, other)
        return GrassmannElement(self.n, self.coeffs * complex(other))

    def __rmul__(self, other):
        return GrassmannElement(self.n, self.coeffs * complex(other))

    def __pow__(self, k: int):
        if not isinstance(k, (int, np.integer)) or k < 0:
            raise ValueError("only nonnegative integer powers are defined")
        out = GrassmannElement.scalar(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out


def mul(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    if a.n != b.n:
        raise ValueError(f"generator counts differ: {a.n} vs {b.n}")
    n = a.n
    out = np.zeros(1 << n, dtype=complex)
    j = _masks(n)
    bnz = b.coeffs != 0
    for i in np.nonzero(a.coeffs)[0]:
        i = int(i)
        sign = _sign_row(i, n)
        sel = bnz & (sign != 0)
        np.add.at(out, i | j[sel], sign[sel] * a.coeffs[i] * b.coeffs[sel])
    return GrassmannElement(n, out)


class EvenNilpotent:
    """``body + soul`` with ``soul`` even and without constant term."""
    __slots__ = ("body", "soul")

    def __init__(self, body, soul: GrassmannElement):
        if not soul.is_even():
            raise ValueError("soul of an even element must have only even-degree terms")
        if soul.coeffs[0] != 0:
            raise ValueError("soul must have zero constant term")
        self.body = complex(body)
        self.soul = soul

    @property
    def n(self):
        return self.soul.n

    def element(self) -> GrassmannElement:
        return self.soul + self.body

    def __repr__(self):
        return f"EvenNilpotent(body={self.body!r}, soul={self.soul!r})"


def norm_squared(p: int, even_values, q: int) -> EvenNilpotent:
    """``sum x_i^2 + 2 sum_j eta_{2j-1} eta_{2j}`` at the numeric point ``x``."""
    vals = np.asarray(even_values, dtype=complex).reshape(-1)
    if vals.size != p:
        raise ValueError(f"expected {p} even coordinates, got {vals.size}")
    n = 2 * q
    soul = GrassmannElement(n)
    for j in range(q):
        soul.coeffs[(1 << (2 * j)) | (1 << (2 * j + 1))] = 2.0
    return EvenNilpotent(np.sum(vals ** 2), soul)


def berezin_top(a: GrassmannElement) -> complex:
    """Coefficient of ``eta_1 ... eta_n``; normalisation constants live elsewhere."""
    return a.top()


def apply_analytic(g: Jet, x: EvenNilpotent) -> GrassmannElement:
    """``g(x) = sum_k g^(k)(body)/k! soul^k`` from a jet of ``g`` at ``x.body``."""
    need = x.n // 2
    if g.order < need:
        raise ValueError(f"jet of order {g.order} is too short; need order >= {need}")
    if g.coeffs.ndim != 1:
        raise ValueError("apply_analytic expects a scalar jet")
    if g.center is not None and abs(complex(np.asarray(g.center)) - x.body) > 1e-12:
        raise ValueError("jet is not expanded at the body of its argument")
    out = GrassmannElement.scalar(x.n, g.coeffs[0])
    power = GrassmannElement.scalar(x.n)
    for k in range(1, need + 1):
        power = power * x.soul
        out = out + power * g.coeffs[k]
    return out
