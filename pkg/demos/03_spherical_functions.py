# coding: utf-8

# # Spherical superfunctions
#
# phi_lambda is computed from the Harish-Chandra series, from Jacobi
# polynomials when the series terminates, and by brute-force integration.

# In[1]:

import math

import numpy as np

from hcss import hcseries, oracle
from hcss.cfunc import fit_constant
from hcss.radialode import eigen_residual
from hcss.rootdata import parse_pair


# # Series coefficients
#
# The recursion in l is run until the Gangolli tail bound is below machine
# precision.  For osp with even m_alpha <= 0 it stops on its own.

# In[2]:

co = hcseries.gamma_coeffs(parse_pair("u:1:0"), 2.3 + 0.2j, t=0.5)
print(co.truncation, "terms:", co.L + 1, "tail bound:", co.tail_bound(0.5))
co = hcseries.gamma_coeffs(parse_pair("osp:2:2"), 2.3)
print(co.truncation, np.round(co.gamma, 6))


# # Series against the integral oracle

# In[3]:

pts = [(lam, t) for lam in (0.7, 1.3 + 0.4j) for t in (0.5, 1.0, 2.0)]
for spec in ("u:1:0", "u:0:2", "osp:3:0", "osp:1:1"):
    pair = parse_pair(spec)
    ser = [hcseries.phi_spherical(pair, l, t) for l, t in pts]
    orc = [oracle.phi_integral(pair, l, t) for l, t in pts]
    const, err = fit_constant(orc, ser)
    print(f"{spec:8s} oracle/series = {const.value:.8f}  spread {err:.1e}")


# # Terminating series and Jacobi polynomials
#
# For osp(2|4), rho = -1 and Phi_lambda is e^{(lambda+1)t} times a linear
# polynomial in e^{-2t}.

# In[4]:

pair = parse_pair("osp:2:2")
for t in (0.5, 1.0, 2.0):
    s = hcseries.phi_series(pair, 2.3, t)
    j = hcseries.phi_jacobi(pair, 2.3, t)
    print(f"t={t}: series/jacobi = {s / j:.12f}")


# # The radial Laplacian
#
# Every route gives an eigenfunction of d^2/dt^2 + (m_alpha coth t + 2 m_2alpha coth 2t) d/dt
# with eigenvalue lambda^2 - rho^2.

# In[5]:

for spec, method in [("u:2:1", "series"), ("osp:2:2", "jacobi"), ("osp:0:2", "closed"),
                     ("osp:1:1", "integral")]:
    print(spec, method, f"{eigen_residual(parse_pair(spec), 1.7 + 0.3j, method):.1e}")


# # Weyl symmetry of the oracle
#
# The integral does not know about the Weyl group, yet phi_lambda = phi_{-lambda}.

# In[6]:

pair = parse_pair("u:1:1")
a = oracle.phi_integral(pair, 0.3 + 0.2j, 1.0)
b = oracle.phi_integral(pair, -0.3 - 0.2j, 1.0)
print(a, b, abs(a - b) / abs(a))
