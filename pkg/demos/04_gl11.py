# coding: utf-8

# # GL(1|1): an isotropic root
#
# Here the spherical function is elementary, -mu e^{lambda(h)} sinh alpha(h),
# and the c-function only exists along some directions h0.

# In[1]:

import numpy as np

from hcss.cfunc import c_gl11, c_limit_oracle
from hcss.hcseries import phi_gl11
from hcss.oracle import phi_integral_gl11
from hcss.rootdata import GL11Param, make_pair


# The Berezin integral over the two odd coordinates against the closed form:

# In[2]:

rng = np.random.default_rng(1)
worst = 0.0
for _ in range(100):
    param = GL11Param(complex(*rng.uniform(-1, 1, 2)), complex(*rng.uniform(-1, 1, 2)))
    h = tuple(rng.uniform(-0.5, 0.5, 2))
    worst = max(worst, abs(phi_integral_gl11(param, h) - phi_gl11(param, h)))
print("max |integral - closed| =", worst)


# # Existence of the c-function
#
# With h0 = c_plus h+ + c_minus h-: zero for c_minus = 0, -mu/2 for c_minus > 0,
# and no limit for c_minus < 0.

# In[3]:

g = make_pair("gl11")
for direction in [(1.0, 0.0), (0.0, 1.0), (0.4, 0.7), (0.0, -1.0)]:
    param = GL11Param(2.0, 0.5, direction)
    lim = c_limit_oracle(g, param)
    print(direction, "closed:", c_gl11(param), "limit:", lim.value if lim.converged else "diverges")
