"""Hilbert polynomials, curve invariants and degree-by-degree formula checks.

All identities relating the graded slices to the invariants of a curve
hold only for large degree, and no effective bound is available, so every
sweep first detects where a dimension sequence becomes polynomial and only
trusts degrees from there on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .field import Field
from .polynomial import IdealPresentation, Polynomial, dim_S
from .slices import (
    CharDividesDegree,
    ideal_slice,
    ideal_square_slice,
    omega_slice_dim,
    quotient_dim,
    singular_slice,
)

MAX_SLICE_COLUMNS = 5000


class NoStabilization(ValueError):
    """No suffix of the window is long enough to pin down a polynomial."""


class NotACurve(ValueError):
    """The Hilbert polynomial of S/I does not have degree one."""


class LeadingMismatch(ValueError):
    """The Omega_C Hilbert polynomial does not have leading coefficient d."""


class DomainError(ValueError):
    pass


class TheoremViolation(AssertionError):
    """The plane-curve Omega_C polynomial differs from dl + p_a - 1."""


# -- interpolation -------------------------------------------------------


def _newton_fit(points: Sequence[tuple[int, int]]) -> list[Fraction]:
    """Power-basis coefficients (highest first) of the interpolant through ``points``.

    Divided differences; on consecutive integers these are the forward
    differences divided by k!.
    """
    xs = [Fraction(x) for x, _ in points]
    table = [Fraction(y) for _, y in points]
    newton = [table[0]]
    for k in range(1, len(xs)):
        table = [(table[i + 1] - table[i]) / (xs[i + k] - xs[i]) for i in range(len(table) - 1)]
        newton.append(table[0])
    # Horner on the Newton form, coefficients lowest first.
    poly = [Fraction(0)]
    for k in range(len(newton) - 1, -1, -1):
        shifted = [Fraction(0)] + poly
        for i, c in enumerate(poly):
            shifted[i] -= xs[k] * c
        shifted[0] += newton[k]
        poly = shifted
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly[::-1]


def evaluate(coeffs: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def format_polynomial(coeffs: Sequence[Fraction], var: str = "l") -> str:
    deg = len(coeffs) - 1
    parts = []
    for i, c in enumerate(coeffs):
        k = deg - i
        if c == 0 and (k or parts):
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = "" if mag == 1 else f"{mag}*"
            body += var if k == 1 else f"{var}^{k}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts) or "0"


@dataclass
class HilbertRecord:
    """A sampled dimension sequence and the polynomial it settles into."""

    dims: list[tuple[int, int]]
    stable_from: int
    coeffs: tuple[Fraction, ...]
    skipped: list[int] = dc_field(default_factory=list)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if any(self.coeffs) else -1

    def __call__(self, l) -> Fraction:
        return evaluate(self.coeffs, l)

    @property
    def is_curve(self) -> bool:
        return self.degree == 1

    @property
    def degree_d(self) -> int | None:
        if not self.is_curve:
            return None
        return self.coeffs[0]

    @property
    def genus_pa(self) -> int | None:
        if not self.is_curve:
            return None
        return 1 - self.coeffs[1]

    def polynomial_str(self) -> str:
        return format_polynomial(self.coeffs)

    def to_dict(self) -> dict:
        return {
            "dims": [[l, d] for l, d in self.dims],
            "stable_from": self.stable_from,
            "coeffs": [_jsonable(c) for c in self.coeffs],
            "polynomial": self.polynomial_str(),
            "skipped": list(self.skipped),
        }


def _jsonable(c: Fraction):
    return int(c) if c.denominator == 1 else str(c)


def hilbert_data(dim_fn: Callable[[int], int], window: tuple[int, int]) -> HilbertRecord:
    """Sample ``dim_fn`` over ``window`` and fit its eventual polynomial.

    Degrees at which ``dim_fn`` raises :class:`CharDividesDegree` are
    skipped.  The smallest polynomial degree D is chosen for which a suffix
    of at least D + 3 sampled degrees agrees exactly with the interpolant
    through the last D + 1 samples; ``stable_from`` is the first degree of
    the longest such suffix.
    """
    lo, hi = window
    dims, skipped = [], []
    for l in range(lo, hi + 1):
        try:
            dims.append((l, int(dim_fn(l))))
        except CharDividesDegree:
            skipped.append(l)
    for D in range(0, max(len(dims) - 2, 0)):
        coeffs = _newton_fit(dims[-(D + 1):])
        start = len(dims)
        while start > 0 and evaluate(coeffs, dims[start - 1][0]) == dims[start - 1][1]:
            start -= 1
        if len(dims) - start < D + 3:
            continue
        if start > 0 and hi - dims[start - 1][0] < 2:
            continue
        return HilbertRecord(dims, dims[start][0], tuple(coeffs), skipped)
    raise NoStabilization(f"no polynomial behaviour detected on window [{lo}, {hi}]")


def default_window(I: IdealPresentation) -> tuple[int, int]:
    hi = max(2 * max(I.degrees) + I.n + 4, 12)
    while hi > 1 and dim_S(I.n, hi) > MAX_SLICE_COLUMNS:
        hi -= 1
    return 1, hi


def quotient_hilbert(I: IdealPresentation, window=None) -> HilbertRecord:
    """Hilbert data of S/I."""
    window = window or default_window(I)
    return hilbert_data(lambda l: quotient_dim(I, l), window)


def omega_hilbert(I: IdealPresentation, window=None) -> HilbertRecord:
    """Hilbert data of the Omega_C slice dimensions."""
    window = window or default_window(I)
    return hilbert_data(lambda l: omega_slice_dim(I, l), window)


def singular_codim_hilbert(I: IdealPresentation, window=None) -> HilbertRecord:
    window = window or default_window(I)
    return hilbert_data(lambda l: singular_slice(I, l).codim, window)


# -- curve invariants ----------------------------------------------------


@dataclass
class CurveInvariants:
    d: int
    p_a: int
    g_plus_mu: int | None = None
    mu: int | None = None
    hilbert: HilbertRecord | None = None
    omega: HilbertRecord | None = None

    def to_dict(self) -> dict:
        return {"d": self.d, "p_a": self.p_a, "g_plus_mu": self.g_plus_mu, "mu": self.mu}


def curve_invariants(I: IdealPresentation, window=None) -> CurveInvariants:
    """Degree and arithmetic genus from dim (S/I)_l = d*l + 1 - p_a."""
    rec = quotient_hilbert(I, window)
    if not rec.is_curve or any(c.denominator != 1 for c in rec.coeffs) or rec.coeffs[0] < 1:
        raise NotACurve(f"Hilbert polynomial of S/I is {rec.polynomial_str()}, not of a curve")
    return CurveInvariants(int(rec.degree_d), int(rec.genus_pa), hilbert=rec)


def mu_plus_gtilde(I: IdealPresentation, window=None, inv: CurveInvariants | None = None) -> int:
    """g~ + mu(C): one more than the constant term of the Omega_C polynomial."""
    inv = inv or curve_invariants(I, window)
    rec = omega_hilbert(I, window)
    inv.omega = rec
    if rec.degree != 1 or rec.coeffs[0] != inv.d:
        raise LeadingMismatch(
            f"Omega polynomial {rec.polynomial_str()} does not have leading coefficient d={inv.d}"
        )
    if rec.coeffs[1].denominator != 1:
        raise LeadingMismatch(f"Omega polynomial {rec.polynomial_str()} is not integral")
    inv.g_plus_mu = int(rec.coeffs[1]) + 1
    return inv.g_plus_mu


def analyze_curve(I: IdealPresentation, window=None, g_tilde: int | None = None) -> CurveInvariants:
    """d, p_a, g~+mu, and mu when the normalization genus is supplied."""
    inv = curve_invariants(I, window)
    mu_plus_gtilde(I, window, inv)
    if g_tilde is not None:
        inv.mu = mu_given_genus(inv, g_tilde)
    return inv


def mu_given_genus(inv: CurveInvariants, g_tilde: int) -> int:
    """mu(C) = (g~ + mu) - g~.  Negative values are returned as computed."""
    if g_tilde < 0:
        raise ValueError("the normalization genus is nonnegative")
    if inv.g_plus_mu is None:
        raise ValueError("g_plus_mu has not been computed")
    return inv.g_plus_mu - g_tilde


# -- the codimension of (I^2)_l for I = (f, x_{b+2}, ..., x_n) -------------


def _binom(a: int, k: int) -> int:
    return math.comb(a, k) if 0 <= k <= a else 0


def beta_closed_form(n: int, b: int, d: int, l: int) -> int:
    if not 0 <= b <= n - 1:
        raise DomainError(f"need 0 <= b <= n-1, got b={b}, n={n}")
    if d < 1:
        raise DomainError("d must be positive")
    if l < 2 * d:
        raise DomainError(f"closed form needs l >= 2d, got l={l}, d={d}")
    return (
        _binom(l + b + 1, b + 1)
        - _binom(l - 2 * d + b + 1, b + 1)
        + (n - b - 1) * (_binom(l + b, b + 1) - _binom(l - d + b, b + 1))
    )


def _embed(f: Polynomial, nvars: int) -> Polynomial:
    pad = (0,) * (nvars - f.nvars)
    return Polynomial(f.field, nvars, {m + pad: c for m, c in f.items()})


def beta_ideal(n: int, b: int, f: Polynomial) -> IdealPresentation:
    """(f, x_{b+2}, ..., x_n) with f a form in x_0..x_{b+1}."""
    if not 0 <= b <= n - 1:
        raise DomainError(f"need 0 <= b <= n-1, got b={b}, n={n}")
    if f.nvars < n + 1:
        f = _embed(f, n + 1)
    if f.nvars != n + 1 or not f.is_homogeneous() or f.is_zero():
        raise ValueError("f must be a nonzero form")
    if any(j > b + 1 for j in f.variables_used()):
        raise ValueError(f"f may only involve x_0..x_{b + 1}")
    gens = [f] + [Polynomial.variable(f.field, n + 1, j) for j in range(b + 2, n + 1)]
    return IdealPresentation(f.field, n, tuple(gens))


def beta_bruteforce(n: int, b: int, f: Polynomial, l: int) -> int:
    """Codimension of (I^2)_l in S_l by row reduction."""
    I = beta_ideal(n, b, f)
    return ideal_square_slice(I, l).codim


# -- verification drivers ------------------------------------------------


@dataclass
class CheckReport:
    name: str
    passed: bool
    rows: list[dict] = dc_field(default_factory=list)
    first_failure: int | None = None
    detail: str = ""
    skipped: list[int] = dc_field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "first_failure": self.first_failure,
            "detail": self.detail,
            "rows": self.rows,
            "skipped": self.skipped,
        }


def _valid_degrees(I: IdealPresentation, degrees: Iterable[int]) -> tuple[list[int], list[int]]:
    p = I.field.characteristic
    ok, bad = [], []
    for l in degrees:
        (bad if (p and l % p == 0) or l < 1 else ok).append(l)
    return ok, bad


def _finish(report: CheckReport) -> CheckReport:
    for row in report.rows:
        if not row["ok"]:
            report.passed = False
            report.first_failure = row["l"]
            break
    return report


def nesting_check(I: IdealPresentation, degrees: Iterable[int]) -> CheckReport:
    """(I^2)_l in (W_C)_l in I_l at every degree."""
    ok_degrees, skipped = _valid_degrees(I, degrees)
    report = CheckReport("nesting", True, skipped=skipped)
    for l in ok_degrees:
        sq, W, Il = ideal_square_slice(I, l).space, singular_slice(I, l).space, ideal_slice(I, l).space
        inner, outer = sq.issubspace(W), W.issubspace(Il)
        report.rows.append({"l": l, "dim_I2": sq.dim, "dim_W": W.dim, "dim_I": Il.dim,
                            "I2_in_W": inner, "W_in_I": outer, "ok": inner and outer})
    return _finish(report)


def lci_check(I: IdealPresentation, degrees: Iterable[int]) -> CheckReport:
    """(W_C)_l == (I^2)_l at every degree, as it must be for a local complete intersection."""
    ok_degrees, skipped = _valid_degrees(I, degrees)
    report = CheckReport("lci", True, skipped=skipped)
    for l in ok_degrees:
        sq, W = ideal_square_slice(I, l).space, singular_slice(I, l).space
        report.rows.append({"l": l, "dim_I2": sq.dim, "dim_W": W.dim, "ok": sq == W})
    report = _finish(report)
    if not report.passed:
        report.detail = f"(W_C)_l is strictly larger than (I^2)_l at l={report.first_failure}"
    return report


def codim_formula(n: int, d: int, p_a: int, g_plus_mu: int, l: int) -> int:
    return n * d * l + 1 + (n + 1) * (1 - d - p_a) - g_plus_mu


def verify_codim_formula(
    I: IdealPresentation,
    g_plus_mu: int,
    window=None,
    degrees: Iterable[int] | None = None,
    inv: CurveInvariants | None = None,
) -> CheckReport:
    """dim S_l - dim (W_C)_l against n*d*l + 1 + (n+1)(1-d-p_a) - (g~+mu).

    Without explicit ``degrees``, every valid degree of the window from the
    point where both S/I and codim (W_C)_l have stabilized is checked.
    """
    window = window or default_window(I)
    inv = inv or curve_invariants(I, window)
    if degrees is None:
        start = max(inv.hilbert.stable_from, singular_codim_hilbert(I, window).stable_from)
        degrees = range(start, window[1] + 1)
    ok_degrees, skipped = _valid_degrees(I, degrees)
    report = CheckReport("codim_formula", True, skipped=skipped)
    for l in ok_degrees:
        actual = singular_slice(I, l).codim
        expected = codim_formula(I.n, inv.d, inv.p_a, g_plus_mu, l)
        report.rows.append({"l": l, "codim_W": actual, "formula": expected, "ok": actual == expected})
    report = _finish(report)
    report.detail = (
        f"codim (W_C)_l vs {format_polynomial((I.n * inv.d, 1 + (I.n + 1) * (1 - inv.d - inv.p_a) - g_plus_mu))}"
    )
    return report


def verify_plane_theorem(I: IdealPresentation, window=None, strict: bool = False) -> CheckReport:
    """Omega_C Hilbert polynomial of an integral plane curve equals d*l + p_a - 1.

    With ``strict`` a failure raises :class:`TheoremViolation`.
    """
    if I.n != 2 or len(I.generators) != 1:
        raise ValueError("the plane-curve theorem needs a single generator in P^2")
    inv = curve_invariants(I, window)
    rec = omega_hilbert(I, window)
    expected = (Fraction(inv.d), Fraction(inv.p_a - 1))
    passed = tuple(rec.coeffs) == expected
    report = CheckReport(
        "plane_theorem",
        passed,
        rows=[{"l": l, "omega": v, "expected": inv.d * l + inv.p_a - 1,
               "ok": v == inv.d * l + inv.p_a - 1}
              for l, v in rec.dims if l >= rec.stable_from],
        skipped=rec.skipped,
        detail=f"Omega polynomial {rec.polynomial_str()} vs {format_polynomial(expected)}",
    )
    if not passed:
        report.first_failure = next((r["l"] for r in report.rows if not r["ok"]), None)
        if strict:
            raise TheoremViolation(report.detail)
    return report


def backend_dimensions(I: IdealPresentation, window, field: Field) -> list[dict]:
    """Per-degree dimension table of ``I`` read into ``field``."""
    from .slices import slice_table_row

    J = I.with_field(field) if field != I.field else I
    return [slice_table_row(J, l) for l in range(window[0], window[1] + 1)]
