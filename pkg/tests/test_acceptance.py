"""End-to-end acceptance checks.

Each test covers one acceptance criterion with exact integer equality.
Running this file directly prints one PASS/FAIL line per criterion::

    python tests/test_acceptance.py
"""

import os
import random
import subprocess
import sys
import time
from itertools import product

import numpy as np

from singcurve import Field, IdealPresentation, Polynomial
from singcurve.cli import load_fixture
from singcurve.invariants import (
    beta_bruteforce,
    beta_closed_form,
    curve_invariants,
    mu_plus_gtilde,
    omega_hilbert,
    singular_codim_hilbert,
)
from singcurve.linalg import Subspace, kernel_basis, rref
from singcurve.polynomial import dim_S, monomials_of_degree
from singcurve.slices import (
    ideal_slice,
    ideal_square_slice,
    omega_slice_dim,
    singular_slice,
    slice_table_row,
)

P = 10007
GF = Field.prime(P)
QQ = Field.rational()
SEED = 7321


def _fixture(name, field=None):
    doc = load_fixture(name)
    if field is not None:
        doc.field = field
    return doc.ideal()


def _random_form(rng, field, nvars, degree, dense=False):
    terms = {}
    for mon in monomials_of_degree(nvars - 1, degree):
        if dense or rng.random() < 0.5:
            terms[mon] = rng.randrange(1, P)
    if not terms:
        terms[(degree,) + (0,) * (nvars - 1)] = 1
    return Polynomial(field, nvars, terms)


# -- criterion 1 ----------------------------------------------------------


def test_nodal_cubic_slices():
    I = _fixture("nodal_cubic", GF)
    inv = curve_invariants(I, (1, 14))
    assert (inv.d, inv.p_a) == (3, 1)
    for l in range(6, 15):
        W = singular_slice(I, l)
        assert W.codim == 6 * l - 9, l
        assert W.dim == ideal_square_slice(I, l).dim, l
        assert omega_slice_dim(I, l) == 3 * l, l


# -- criterion 2 ----------------------------------------------------------

PLANE_CASES = {
    "smooth_conic": (2, -1),
    "nodal_cubic": (3, 0),
    "cuspidal_cubic": (3, 0),
    "smooth_quartic": (4, 2),
}


def test_plane_omega_polynomials():
    for name, expected in PLANE_CASES.items():
        I = _fixture(name, GF)
        rec = omega_hilbert(I)
        assert tuple(rec.coeffs) == expected, (name, rec.polynomial_str())


# -- criterion 3 ----------------------------------------------------------


def test_twisted_cubic():
    I = _fixture("twisted_cubic", GF)
    window = (1, 12)
    inv = curve_invariants(I, window)
    assert (inv.d, inv.p_a) == (3, 0)
    start = max(inv.hilbert.stable_from, singular_codim_hilbert(I, window).stable_from)
    assert start <= 12
    for l in range(start, 13):
        W = singular_slice(I, l)
        assert W.codim == 9 * l - 7, l
    for l in range(1, 13):
        assert singular_slice(I, l).space == ideal_square_slice(I, l).space, l
    assert tuple(omega_hilbert(I, window).coeffs) == (3, -1)
    assert mu_plus_gtilde(I, window) == 0


# -- criterion 4 ----------------------------------------------------------


def test_beta_sweep():
    rng = random.Random(SEED)
    mismatches = []
    cases = 0
    for n in range(1, 5):
        for b, d in product(range(n), range(1, 4)):
            nv = b + 2
            forms = [
                Polynomial.monomial(GF, (d,) + (0,) * (nv - 1)),
                _random_form(rng, GF, nv, d, dense=True),
            ]
            for f in forms:
                for l in range(2 * d, 2 * d + 5):
                    cases += 1
                    brute = beta_bruteforce(n, b, f, l)
                    closed = beta_closed_form(n, b, d, l)
                    if brute != closed:
                        mismatches.append((n, b, d, l, str(f), brute, closed))
    assert cases == 2 * 5 * 3 * (1 + 2 + 3 + 4)
    assert mismatches == []


# -- criterion 5 ----------------------------------------------------------


def test_coordinate_axes_witness():
    I = _fixture("coordinate_axes", GF)
    strict = []
    for l in range(1, 9):
        sq, W, Il = ideal_square_slice(I, l).space, singular_slice(I, l).space, ideal_slice(I, l).space
        assert sq.issubspace(W) and W.issubspace(Il), l
        if W.dim > sq.dim:
            strict.append(l)
    assert strict, "no degree with (W_C)_l strictly larger than (I^2)_l"


# -- criterion 6 ----------------------------------------------------------


def test_euler_identity():
    rng = random.Random(SEED)
    for _ in range(500):
        n = rng.randrange(1, 5)
        l = rng.randrange(1, 9)
        F = _random_form(rng, GF, n + 1, l)
        lhs = Polynomial(GF, n + 1)
        for j in range(n + 1):
            lhs = lhs + Polynomial.variable(GF, n + 1, j) * F.diff(j)
        assert lhs == F.scale(l)


def _random_matrix(rng, rows, cols):
    k = rng.randrange(0, min(rows, cols) + 1)
    A = np.array([[rng.randrange(P) for _ in range(k)] for _ in range(rows)], dtype=np.int64).reshape(rows, k)
    B = np.array([[rng.randrange(P) for _ in range(cols)] for _ in range(k)], dtype=np.int64).reshape(k, cols)
    M = GF.matmul(A, B)
    # sprinkle a few sparse rows so the singleton path is exercised too
    if rows and rng.random() < 0.3:
        M[rng.randrange(rows)] = 0
        M[rng.randrange(rows), rng.randrange(cols)] = rng.randrange(1, P)
    return M


def test_rref_idempotent_and_rank_nullity():
    rng = random.Random(SEED)
    for _ in range(500):
        rows, cols = rng.randrange(1, 12), rng.randrange(1, 12)
        M = _random_matrix(rng, rows, cols)
        R, rk, piv = rref(M, GF)
        R2, rk2, piv2 = rref(R, GF, cols=cols)
        assert np.array_equal(R, R2) and rk == rk2 and piv == piv2
        kernel = kernel_basis(M, GF, cols=cols)
        assert rk + kernel.dim == cols
        assert not GF.matmul(M, kernel.basis.T).any()


def test_canonical_under_shuffles():
    rng = random.Random(SEED)
    for _ in range(500):
        rows, cols = rng.randrange(1, 10), rng.randrange(1, 10)
        M = _random_matrix(rng, rows, cols)
        perm = list(range(rows))
        rng.shuffle(perm)
        mixed = M[perm]
        # add a random multiple of one row to another: same row space
        if rows > 1:
            i, j = rng.sample(range(rows), 2)
            mixed[i] = GF.reduce(mixed[i] + rng.randrange(P) * mixed[j])
        assert Subspace.span(GF, M, cols) == Subspace.span(GF, mixed, cols)
    I = _fixture("nodal_cubic", GF)
    shuffled = IdealPresentation(GF, I.n, tuple(reversed(I.generators)) + I.generators)
    for l in range(1, 9):
        assert ideal_slice(I, l).space == ideal_slice(shuffled, l).space


def _run_cli(argv, hash_seed):
    env = dict(os.environ, PYTHONHASHSEED=str(hash_seed))
    proc = subprocess.run([sys.executable, "-m", "singcurve", *argv], capture_output=True, env=env)
    return proc.returncode, proc.stdout


def test_cli_deterministic():
    for argv in (
        ["hilbert", "fixture:nodal_cubic", "--json"],
        ["verify", "fixture:twisted_cubic", "--json", "--window", "1:10"],
        ["wspace", "fixture:smooth_conic", "4", "--json"],
    ):
        first = _run_cli(argv, 1)
        second = _run_cli(argv, 2)
        assert first[0] == 0, argv
        assert first == second, argv


# -- criterion 7 ----------------------------------------------------------


def test_backends_agree_on_nodal_cubic():
    mod = _fixture("nodal_cubic", GF)
    rat = _fixture("nodal_cubic", QQ)
    for l in range(1, 11):
        assert slice_table_row(mod, l) == slice_table_row(rat, l), l
        assert dim_S(2, l) == slice_table_row(rat, l)["dim_S"]


CRITERIA = [
    ("1 nodal cubic slices and Omega dims on [6,14]", [test_nodal_cubic_slices]),
    ("2 plane Omega polynomials", [test_plane_omega_polynomials]),
    ("3 twisted cubic", [test_twisted_cubic]),
    ("4 closed form vs row reduction sweep", [test_beta_sweep]),
    ("5 coordinate axes witness and nesting", [test_coordinate_axes_witness]),
    ("6 property suites and determinism", [
        test_euler_identity,
        test_rref_idempotent_and_rank_nullity,
        test_canonical_under_shuffles,
        test_cli_deterministic,
    ]),
    ("7 F_10007 vs rational on nodal cubic [1,10]", [test_backends_agree_on_nodal_cubic]),
]


def run_all() -> bool:
    ok_all = True
    for label, tests in CRITERIA:
        t0 = time.perf_counter()
        failure = None
        for fn in tests:
            try:
                fn()
            except AssertionError as exc:
                failure = f"{fn.__name__}: {exc}"
                break
        elapsed = time.perf_counter() - t0
        verdict = "PASS" if failure is None else "FAIL"
        ok_all &= failure is None
        line = f"{verdict}  criterion {label}  ({elapsed:.1f}s)"
        print(line if failure is None else f"{line}  {failure}")
    return ok_all


if __name__ == "__main__":
    sys.exit(0 if run_all() else 1)
