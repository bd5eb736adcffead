"""Complex Gamma function (Lanczos, g=7, 9 terms) and generalised binomials."""
from __future__ import annotations

import cmath
import math

__all__ = ["GammaPole", "complex_gamma", "rgamma", "binom", "pochhammer"]

_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_POLE_TOL = 1e-12


class GammaPole(ZeroDivisionError):
    """Raised when Gamma is evaluated at (or within 1e-12 of) a nonpositive integer."""


def _nearest_pole(z: complex):
    n = round(z.real)
    if n <= 0 and abs(z - n) < _POLE_TOL:
        return n
    return None


def _lanczos(z: complex) -> complex:
    # valid for Re z >= 0.5
    z = z - 1
    x = _LANCZOS[0]
    for i in range(1, 9):
        x += _LANCZOS[i] / (z + i)
    t = z + _G + 0.5
    return math.sqrt(2 * math.pi) * cmath.exp((z + 0.5) * cmath.log(t) - t) * x


def complex_gamma(z) -> complex:
    z = complex(z)
    n = _nearest_pole(z)
    if n is not None:
        raise GammaPole(f"Gamma has a pole at {n}")
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * _lanczos(1 - z))
    return _lanczos(z)


def rgamma(z) -> complex:
    """1/Gamma(z); an entire function, exactly zero at the poles of Gamma."""
    z = complex(z)
    if _nearest_pole(z) is not None:
        return 0j
    if z.real < 0.5:
        return cmath.sin(math.pi * z) * _lanczos(1 - z) / math.pi
    return 1.0 / _lanczos(z)


def pochhammer(z, k: int) -> complex:
    """Rising factorial ``z (z+1) ... (z+k-1)``."""
    out = 1 + 0j
    for j in range(k):
        out *= z + j
    return out


def binom(z, k: int) -> complex:
    """Generalised binomial ``C(z, k) = z (z-1) ... (z-k+1) / k!`` for integer ``k``."""
    if k < 0:
        return 0j
    out = 1 + 0j
    for j in range(k):
        out *= (z - j) / (j + 1)
    return out
