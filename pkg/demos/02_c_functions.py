# coding: utf-8

# # Harish-Chandra c-functions
#
# Three independent routes to c(lambda) for the anisotropic families:
# the Gamma quotient, an explicit integral, and the limit
# lim e^{-t(lambda-rho)} phi_lambda(e^{t h0}) of the brute-force spherical
# function.  The routes differ by one normalisation constant per pair, which
# we fit at lambda = |rho| + 2.

# In[1]:

import numpy as np

from hcss.cfunc import c_formula, c_integral, c_limit_oracle, fit_constant, unitary_zeros
from hcss.rootdata import parse_pair


# In[2]:

for spec in ("u:2:1", "u:0:2", "osp:3:0", "osp:1:1", "osp:0:2"):
    p = parse_pair(spec)
    print(f"{spec:8s} m_alpha={p.m_alpha:3d} m_2alpha={p.m_2alpha} rho={str(p.rho):5s} "
          f"|W0|={p.weyl_order} finite={p.finite_series}")


# # Formula against the limit oracle
#
# The limit is taken by Neville extrapolation in x = e^{-2t} over t in [6, 20].

# In[3]:

grid = [0.7, 1.3, 2.1 + 0.4j, 2.7]
for spec in ("u:1:0", "u:0:2", "osp:2:1", "osp:1:1"):
    pair = parse_pair(spec)
    lams = [abs(float(pair.rho)) + 2] + grid
    lim = [c_limit_oracle(pair, l).value for l in lams]
    form = [c_formula(pair, l) for l in lams]
    const, err = fit_constant(lim, form)
    print(f"{spec:8s} C = {const.value:.6f}   max rel. error after fit = {err:.1e}")


# # The integral route
#
# For m_alpha <= 0 the unitary integral is a point derivative in r of
# ((1+r)^2+s^2)^{-(lambda+rho)/2}, integrated over s.

# In[4]:

pair = parse_pair("u:0:2")
lams = np.array([3.0, 1.5, 2 + 0.3j, 0.8])
ratio = np.array([c_integral(pair, l) / c_formula(pair, l) for l in lams])
print("integral / formula:", np.round(ratio, 10))


# # Zeros
#
# When q > p + 1 the unitary c-function vanishes at lambda = q - p - 1 - 2k.

# In[5]:

pair = parse_pair("u:0:5")
for z in unitary_zeros(pair):
    print(z, c_formula(pair, z), c_formula(pair, z + 0.5))
