"""Harish-Chandra c-functions and spherical superfunctions for rank-one symmetric superspaces.

Families are ``u:p:q`` (unitary), ``osp:p:q`` (orthosymplectic) and ``gl11``.
"""
from .cfunc import c_formula, c_gl11, c_integral, c_limit_oracle, fit_constant
from .hcseries import gamma_coeffs, phi_gl11, phi_jacobi, phi_osp_p0, phi_series, phi_spherical
from .oracle import CutoffSpec, phi_integral, phi_integral_gl11
from .quadrature import QuadratureSpec
from .rootdata import Family, GL11Param, SymmetricPair, make_pair, parse_pair
from .special import complex_gamma

__version__ = "0.1.0"

__all__ = [
    "Family", "SymmetricPair", "GL11Param", "make_pair", "parse_pair",
    "CutoffSpec", "QuadratureSpec", "complex_gamma",
    "c_formula", "c_gl11", "c_integral", "c_limit_oracle", "fit_constant",
    "gamma_coeffs", "phi_series", "phi_spherical", "phi_jacobi", "phi_osp_p0", "phi_gl11",
    "phi_integral", "phi_integral_gl11",
]
