"""Degree-by-degree linear algebra for a homogeneous ideal I of S.

Every graded piece is a :class:`~singcurve.linalg.Subspace` of S_m in the
grevlex monomial basis, or of (S/I)_{l-1}^(n+1) in quotient coordinates.
The quotient (S/I)_m is coordinatized by the non-pivot monomials of the
RREF of I_m: each monomial of degree m reduces to a unique combination of
them.

I_m here is the span of generator multiples.  That can be smaller than the
slice of the saturated ideal in low degrees, so only degrees past
stabilization carry geometric meaning.  All functions are pure and memoized
per (ideal, degree).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import Subspace, kernel_basis
from .polynomial import (
    IdealPresentation,
    Polynomial,
    dim_S,
    monomial_table,
    monomials_of_degree,
)


class CharDividesDegree(ValueError):
    """The characteristic divides the degree, so the Euler relation degenerates."""


@dataclass(frozen=True, eq=False)
class DegreeSlice:
    degree: int
    ambient: str
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def codim(self) -> int:
        return self.space.codim

    @property
    def ambient_dim(self) -> int:
        return self.space.ambient_dim

    def polynomials(self, n: int) -> list[Polynomial]:
        """Basis as forms of degree ``self.degree`` (only for ambient S_l)."""
        if not self.ambient.startswith("S_"):
            raise ValueError("basis vectors are not forms for this ambient")
        f = self.space.field
        return [Polynomial.from_vector(f, n, self.degree, row) for row in self.space.basis]


@dataclass(frozen=True, eq=False)
class QuotientSlice:
    """(S/I)_m with the non-pivot monomials of I_m's RREF as basis."""

    degree: int
    ideal_slice: Subspace
    free_cols: np.ndarray
    normal_forms: np.ndarray  # (dim S_m, dim_quotient): coordinates of each monomial

    @property
    def dim_quotient(self) -> int:
        return len(self.free_cols)


@lru_cache(maxsize=None)
def _column_lookup(n: int, m: int):
    table = monomial_table(n, m)
    radix = (m + 1) ** np.arange(n + 1, dtype=np.int64)
    keys = table @ radix
    order = np.argsort(keys)
    return radix, keys[order], order


def column_of(exponents: np.ndarray, n: int, m: int) -> np.ndarray:
    """Column indices in S_m of an array of degree-m exponent rows."""
    radix, sorted_keys, order = _column_lookup(n, m)
    keys = np.asarray(exponents, dtype=np.int64) @ radix
    return order[np.searchsorted(sorted_keys, keys)]


def multiples_matrix(generators, n: int, m: int, field) -> np.ndarray:
    """Rows are mu*g for every generator g with deg g <= m and every monomial mu of degree m - deg g."""
    blocks = []
    ncols = dim_S(n, m)
    for g in generators:
        k = m - g.degree
        if k < 0:
            continue
        shifts = monomial_table(n, k)
        items = list(g.items())
        exps = np.array([e for e, _ in items], dtype=np.int64)
        coeffs = np.array([c for _, c in items], dtype=field.dtype)
        prod = shifts[:, None, :] + exps[None, :, :]
        cols = column_of(prod.reshape(-1, n + 1), n, m).reshape(len(shifts), len(items))
        block = field.zeros((len(shifts), ncols))
        rows = np.repeat(np.arange(len(shifts)), len(items))
        block[rows, cols.ravel()] = np.tile(coeffs, len(shifts))
        blocks.append(block)
    if not blocks:
        return field.zeros((0, ncols))
    return np.vstack(blocks)


@lru_cache(maxsize=1024)
def _ideal_space(I: IdealPresentation, m: int) -> Subspace:
    rows = multiples_matrix(I.generators, I.n, m, I.field)
    return Subspace.span(I.field, rows, dim_S(I.n, m))


def ideal_slice(I: IdealPresentation, m: int) -> DegreeSlice:
    """I_m, the span of generator multiples in degree ``m``."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    return DegreeSlice(m, f"S_{m}", _ideal_space(I, m))


@lru_cache(maxsize=256)
def _squared(I: IdealPresentation) -> IdealPresentation:
    return I.squared()


def ideal_square_slice(I: IdealPresentation, l: int) -> DegreeSlice:
    """(I^2)_l, spanned by multiples of the pairwise generator products."""
    if l < 0:
        raise ValueError("degree must be nonnegative")
    return DegreeSlice(l, f"S_{l}", _ideal_space(_squared(I), l))


@lru_cache(maxsize=1024)
def quotient_slice(I: IdealPresentation, m: int) -> QuotientSlice:
    space = _ideal_space(I, m)
    f = I.field
    free = space.free_columns
    nf = f.zeros((space.ambient_dim, len(free)))
    nf[free, np.arange(len(free))] = f.one()
    if space.dim and len(free):
        nf[list(space.pivots)] = f.reduce(-space.basis[:, free])
    return QuotientSlice(m, space, free, nf)


def quotient_dim(I: IdealPresentation, m: int) -> int:
    return quotient_slice(I, m).dim_quotient if m >= 0 else 0


def _check_degree(I: IdealPresentation, l: int):
    if l < 1:
        raise ValueError("degree must be at least 1")
    p = I.field.characteristic
    if p and l % p == 0:
        raise CharDividesDegree(f"characteristic {p} divides degree {l}")


def jacobian_matrix(I: IdealPresentation, l: int) -> np.ndarray:
    """Matrix of F -> (dF/dx_j mod I_{l-1})_j, one row per monomial of S_l.

    Columns are grouped by j, each block in the quotient coordinates of
    (S/I)_{l-1}.
    """
    n, f = I.n, I.field
    q = quotient_slice(I, l - 1)
    mons = monomial_table(n, l)
    blocks = []
    for j in range(n + 1):
        block = f.zeros((len(mons), q.dim_quotient))
        has = np.flatnonzero(mons[:, j] > 0)
        if has.size and q.dim_quotient:
            lowered = mons[has].copy()
            lowered[:, j] -= 1
            src = column_of(lowered, n, l - 1)
            mult = f.array(mons[has, j]).reshape(-1, 1)
            block[has] = f.reduce(q.normal_forms[src] * mult)
        blocks.append(block)
    return np.hstack(blocks)


def euler_matrix(I: IdealPresentation, l: int) -> np.ndarray:
    """Matrix of (A_j) -> sum_j x_j A_j from (S/I)_{l-1}^(n+1) to (S/I)_l."""
    n, f = I.n, I.field
    lo, hi = quotient_slice(I, l - 1), quotient_slice(I, l)
    mons = monomial_table(n, l - 1)[lo.free_cols]
    blocks = []
    for j in range(n + 1):
        raised = mons.copy()
        raised[:, j] += 1
        blocks.append(hi.normal_forms[column_of(raised, n, l)] if len(raised) else
                      f.zeros((0, hi.dim_quotient)))
    return np.vstack(blocks)


@lru_cache(maxsize=1024)
def _euler_kernel(I: IdealPresentation, l: int) -> Subspace:
    E = euler_matrix(I, l)
    ambient = E.shape[0]
    if E.shape[1] == 0:
        return Subspace.full(I.field, ambient)
    return kernel_basis(E.T, I.field, cols=ambient)


def euler_kernel(I: IdealPresentation, l: int) -> DegreeSlice:
    """K_l = ker((S/I)_{l-1}^(n+1) -> (S/I)_l), the degree-l piece of Omega_P^n / I Omega_P^n."""
    if l < 1:
        raise ValueError("degree must be at least 1")
    return DegreeSlice(l, f"(S/I)_{l - 1}^{I.n + 1}", _euler_kernel(I, l))


@lru_cache(maxsize=1024)
def _singular_space(I: IdealPresentation, l: int) -> Subspace:
    J = jacobian_matrix(I, l)
    ambient = J.shape[0]
    if J.shape[1] == 0:
        W = Subspace.full(I.field, ambient)
    else:
        W = kernel_basis(J.T, I.field, cols=ambient)
    # Euler: l*F = sum x_j dF/dx_j, so W lies in I_l whenever p does not divide l.
    assert W.issubspace(_ideal_space(I, l)), "singular slice escaped I_l"
    return W


def singular_slice(I: IdealPresentation, l: int) -> DegreeSlice:
    """(W_C)_l: forms F of degree l with every dF/dx_j in I_{l-1}.

    Raises :class:`CharDividesDegree` when the characteristic divides ``l``.
    """
    _check_degree(I, l)
    return DegreeSlice(l, f"S_{l}", _singular_space(I, l))


def jacobian_image(I: IdealPresentation, l: int) -> Subspace:
    """Image of I_l under F -> (dF/dx_j)_j, inside (S/I)_{l-1}^(n+1)."""
    _check_degree(I, l)
    J = jacobian_matrix(I, l)
    basis = _ideal_space(I, l).basis
    return Subspace.span(I.field, I.field.matmul(basis, J), J.shape[1])


def omega_slice_dim(I: IdealPresentation, l: int) -> int:
    """dim coker(I_l -> K_l) = dim K_l - dim I_l + dim (W_C)_l.

    For l past stabilization this is dim Gamma(C, Omega_C(l)).
    """
    _check_degree(I, l)
    return euler_kernel(I, l).dim - ideal_slice(I, l).dim + singular_slice(I, l).dim


def slice_table_row(I: IdealPresentation, l: int) -> dict:
    """All per-degree dimensions at ``l`` (Jacobian-side entries are None when p | l)."""
    row = {
        "l": l,
        "dim_S": dim_S(I.n, l),
        "dim_I": ideal_slice(I, l).dim,
        "dim_I2": ideal_square_slice(I, l).dim,
        "dim_quotient": quotient_dim(I, l),
        "dim_W": None,
        "dim_K": None,
        "omega": None,
    }
    if l >= 1:
        row["dim_K"] = euler_kernel(I, l).dim
        try:
            row["dim_W"] = singular_slice(I, l).dim
            row["omega"] = row["dim_K"] - row["dim_I"] + row["dim_W"]
        except CharDividesDegree:
            pass
    return row


def clear_caches():
    for fn in (_ideal_space, _squared, quotient_slice, _euler_kernel, _singular_space):
        fn.cache_clear()


__all__ = [
    "CharDividesDegree",
    "DegreeSlice",
    "QuotientSlice",
    "ideal_slice",
    "ideal_square_slice",
    "quotient_slice",
    "quotient_dim",
    "euler_kernel",
    "singular_slice",
    "omega_slice_dim",
    "jacobian_matrix",
    "euler_matrix",
    "jacobian_image",
    "slice_table_row",
    "monomials_of_degree",
]
