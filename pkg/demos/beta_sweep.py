# %% [markdown]
# # Codimension of (I^2)_l for I = (f, x_{b+2}, ..., x_n)
#
# The closed form only depends on n, b, d = deg f and l.  Here we compare it
# against row reduction for a few forms f, and tabulate it.

# %%
import random

import numpy as np

from singcurve import Field, Polynomial
from singcurve.invariants import beta_bruteforce, beta_closed_form
from singcurve.polynomial import monomials_of_degree

GF = Field.prime(10007)
rng = random.Random(0)


def random_form(nvars, d):
    return Polynomial(GF, nvars, {m: rng.randrange(1, 10007) for m in monomials_of_degree(nvars - 1, d)})


# %%
n, b, d = 3, 1, 2
f = random_form(b + 2, d)
print("f =", f)
for l in range(2 * d, 2 * d + 5):
    print(l, beta_closed_form(n, b, d, l), beta_bruteforce(n, b, f, l))

# %%
# Closed form over a grid, n = 4, d = 2: rows b, columns l.
table = np.array([[beta_closed_form(4, b, 2, l) for l in range(4, 10)] for b in range(4)])
print(table)
