"""Rank-one symmetric superpairs: multiplicities, rho and Weyl group order.

Three families are supported, spelled ``u:p:q``, ``osp:p:q`` and ``gl11`` on
the command line:

========  =================  ===========  =============
family    m_alpha            m_2alpha     rho
========  =================  ===========  =============
Unitary   2(p - q)           1            1 + p - q
OSp       p - 2q             0            (p - 2q)/2
GL11      -2                 0            -1
========  =================  ===========  =============

``rho`` is kept as an exact :class:`fractions.Fraction`, since branch
predicates (finite series, Jacobi form) depend on its integrality.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "Family",
    "SymmetricPair",
    "GL11Param",
    "make_pair",
    "weyl_order",
    "parse_pair",
]


class Family(enum.Enum):
    UNITARY = "u"
    ORTHOSYMPLECTIC = "osp"
    GL11 = "gl11"


@dataclass(frozen=True)
class SymmetricPair:
    family: Family
    p: int
    q: int
    m_alpha: int = field(init=False)
    m_2alpha: int = field(init=False)
    rho: Fraction = field(init=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise TypeError("p and q must be integers")
        if self.p < 0 or self.q < 0:
            raise ValueError(f"p and q must be nonnegative, got ({self.p}, {self.q})")
        if self.family is Family.GL11 and (self.p, self.q) != (1, 1):
            object.__setattr__(self, "p", 1)
            object.__setattr__(self, "q", 1)
        if self.family is Family.UNITARY:
            ma, m2a = 2 * (self.p - self.q), 1
        elif self.family is Family.ORTHOSYMPLECTIC:
            ma, m2a = self.p - 2 * self.q, 0
        else:
            ma, m2a = -2, 0
        object.__setattr__(self, "m_alpha", ma)
        object.__setattr__(self, "m_2alpha", m2a)
        object.__setattr__(self, "rho", Fraction(ma + 2 * m2a, 2))

    @property
    def anisotropic(self) -> bool:
        return self.family is not Family.GL11

    @property
    def weyl_order(self) -> int:
        return weyl_order(self)

    @property
    def finite_series(self) -> bool:
        """True when the Harish-Chandra series terminates (osp, m_alpha <= 0 even)."""
        return (self.family is Family.ORTHOSYMPLECTIC
                and self.m_alpha <= 0 and self.m_alpha % 2 == 0)

    @property
    def spec(self) -> str:
        if self.family is Family.GL11:
            return "gl11"
        return f"{self.family.value}:{self.p}:{self.q}"

    def __str__(self):
        return self.spec


def make_pair(family, p: int = 1, q: int = 1) -> SymmetricPair:
    """Build a pair; ``family`` may be a :class:`Family` or its short name."""
    if not isinstance(family, Family):
        family = Family(str(family).lower())
    return SymmetricPair(family, p, q)


def weyl_order(pair: SymmetricPair) -> int:
    # the even Weyl group is trivial when alpha has no even part
    if pair.family is Family.GL11:
        return 1
    if pair.family is Family.ORTHOSYMPLECTIC and pair.p == 0:
        return 1
    return 2


def parse_pair(text: str) -> SymmetricPair:
    """Parse ``family:p:q`` (or bare ``gl11``)."""
    parts = [s.strip() for s in text.strip().lower().split(":")]
    name = parts[0]
    if name == "gl11":
        if len(parts) not in (1, 3):
            raise ValueError(f"cannot parse pair {text!r}; expected 'gl11'")
        return make_pair(Family.GL11)
    if name not in ("u", "osp") or len(parts) != 3:
        raise ValueError(
            f"cannot parse pair {text!r}; expected 'u:p:q', 'osp:p:q' or 'gl11'")
    try:
        p, q = int(parts[1]), int(parts[2])
    except ValueError:
        raise ValueError(f"cannot parse pair {text!r}; p and q must be integers") from None
    return make_pair(name, p, q)


@dataclass(frozen=True)
class GL11Param:
    """Spectral data for GL(1|1): ``mu = lambda(h+)``, ``nu = lambda(h-)``.

    ``direction`` gives the decomposition ``h0 = c_plus h+ + c_minus h-`` used
    when a c-function limit is taken.
    """
    mu: complex
    nu: complex = 0.0
    direction: tuple = (0.0, 1.0)

    def __post_init__(self):
        c_plus, c_minus = self.direction
        if c_plus == 0 and c_minus == 0:
            raise ValueError("direction (c_plus, c_minus) must be nonzero")
