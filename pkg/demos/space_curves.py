# %% [markdown]
# # Two curves in P^3
#
# The twisted cubic is a local complete intersection, so a form is singular
# along it exactly when it lies in I^2.  The three coordinate axes meet at a
# triple point that is not planar, and there the two spaces differ.

# %%
import numpy as np

from singcurve.cli import load_fixture
from singcurve.invariants import analyze_curve, codim_formula
from singcurve.slices import ideal_square_slice, singular_slice

twisted = load_fixture("twisted_cubic").ideal()
inv = analyze_curve(twisted, window=(1, 12))
print("twisted cubic: d =", inv.d, " p_a =", inv.p_a, " g~+mu =", inv.g_plus_mu)

# %%
ls = np.arange(4, 13)
actual = np.array([singular_slice(twisted, int(l)).codim for l in ls])
predicted = np.array([codim_formula(3, inv.d, inv.p_a, inv.g_plus_mu, int(l)) for l in ls])
print(np.vstack([ls, actual, predicted]))
assert (actual == predicted).all()

# %%
axes = load_fixture("coordinate_axes").ideal()
for l in range(1, 7):
    W, sq = singular_slice(axes, l), ideal_square_slice(axes, l)
    extra = W.dim - sq.dim
    print(f"l={l}: dim W = {W.dim:3d}, dim I^2 = {sq.dim:3d}" + (f"   <- {extra} extra" if extra else ""))

# %%
# The extra form in degree 3 is x0*x1*x2: every partial lies in I, but the
# product itself is not in I^2.
W3 = singular_slice(axes, 3)
print([str(F) for F in W3.polynomials(3)])
