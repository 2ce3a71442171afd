# %% [markdown]
# # Cubics and their singular hypersurfaces
#
# The nodal cubic y^2 z = x^3 + x^2 z has one node at (0:0:1).  We look at
# the forms of degree l that are singular along it, one degree at a time.

# %%
from singcurve import Field, IdealPresentation
from singcurve.invariants import analyze_curve, omega_hilbert
from singcurve.slices import slice_table_row

I = IdealPresentation.from_strings(["y^2*z - x^3 - x^2*z"], ["x", "y", "z"], Field.prime(10007))

# %%
# One row per degree.  dim_W is the space of degree-l forms singular along
# the curve; for a plane curve it always equals dim (I^2)_l.
print(f"{'l':>3} {'dim S':>6} {'dim I':>6} {'dim I^2':>8} {'dim W':>6} {'Omega':>6}")
for l in range(1, 13):
    r = slice_table_row(I, l)
    print(f"{l:>3} {r['dim_S']:>6} {r['dim_I']:>6} {r['dim_I2']:>8} {r['dim_W']:>6} {r['omega']:>6}")

# %%
inv = analyze_curve(I, g_tilde=0)
print("degree", inv.d, "arithmetic genus", inv.p_a)
print("g~ + mu =", inv.g_plus_mu, " so mu =", inv.mu)

# %% [markdown]
# The cusp y^2 z = x^3 has the same numbers: both curves are rational with a
# single double point, and the Omega polynomial only sees d and p_a.

# %%
cusp = IdealPresentation.from_strings(["y^2*z - x^3"], ["x", "y", "z"], Field.prime(10007))
for name, ideal in [("node", I), ("cusp", cusp)]:
    print(name, omega_hilbert(ideal).polynomial_str())
