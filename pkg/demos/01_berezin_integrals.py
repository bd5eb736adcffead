# coding: utf-8

# # Berezin integrals of rotationally invariant functions
#
# A superfunction on A^{p|2q} that only depends on the super norm square
# ||y||^2 = sum x_i^2 + 2 sum eta_{2j-1} eta_{2j} integrates to a one-dimensional
# expression.  Here we check this on the Gaussian, first by brute force in the
# Grassmann algebra and then through the radial formulas.

# In[1]:

import math

import numpy as np

from hcss.grassmann import GrassmannElement, apply_analytic, berezin_top, norm_squared
from hcss.jets import Jet, jexp
from hcss.radial import BerezinMeasure, gaussian_profile, localize, radial_integral, reduce_dims
from hcss.verify import random_bump_profile


# The norm square on A^{0|2} is the nilpotent 2 eta_1 eta_2.  Its exponential
# truncates after the linear term.

# In[2]:

x = norm_squared(0, [], 1)
e = apply_analytic(jexp(-Jet.variable(0.0, 1)), x)
print(e)
print("top coefficient:", berezin_top(e))      # -2, so the integral is (-2pi)^-1 (-2) = 1/pi


# # The Gaussian table
#
# e^{-||y||^2} integrates to pi^{(p-2q)/2}.  Negative superdimension is fine.

# In[3]:

g = gaussian_profile()
rows = []
for p in range(6):
    for q in range(4):
        ref = math.pi ** ((p - 2 * q) / 2)
        brute = BerezinMeasure(p, q).integrate(g)
        formula = radial_integral(p, q, g)
        rows.append((p, q, ref, abs(brute - ref), abs(formula - ref)))
print(" p  q      pi^(p-2q)/2    |brute - ref|  |radial - ref|")
for p, q, ref, e1, e2 in rows:
    print(f"{p:2d} {q:2d} {ref:16.10f} {e1:14.2e} {e2:14.2e}")


# # Dimension shift
#
# Removing one copy of A^{2|2} does not change the integral.  Check on a few
# random bump times polynomial profiles.

# In[4]:

rng = np.random.default_rng(0)
for _ in range(4):
    prof = random_bump_profile(rng)
    vals = [localize(*reduce_dims(5, 2, k), prof) for k in range(3)]
    print(prof.description, np.round(np.real(vals), 12))
