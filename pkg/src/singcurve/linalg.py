"""Dense exact linear algebra over a :class:`~singcurve.field.Field`.

Matrices are numpy arrays: int64 residues for word-sized primes, object
arrays of ``Fraction`` (or big ints) otherwise.  Row reduction is plain
Gauss-Jordan elimination.  Before the dense pass, rows with a single
nonzero entry are peeled off and their columns cleared everywhere; slice
matrices built from monomial multiples are full of such rows, and the
result is the same canonical RREF.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .field import Field


class DimensionMismatch(ValueError):
    pass


def _as_matrix(M, field: Field, cols: int | None = None) -> np.ndarray:
    A = np.array(M, dtype=field.dtype, copy=True)
    if A.ndim == 1:
        if A.size == 0 and cols is not None:
            A = A.reshape(0, cols)
        else:
            A = A.reshape(1, -1)
    if A.dtype == object and field.is_prime:
        A = A % field.p
    elif A.dtype == object:
        A = np.vectorize(Fraction, otypes=[object])(A) if A.size else A
    else:
        A %= field.p
    return A


def _nonzero(A: np.ndarray) -> np.ndarray:
    return np.asarray(A != 0, dtype=bool)


def _bitsize(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


def _gauss_jordan(A: np.ndarray, field: Field) -> tuple[np.ndarray, list[int]]:
    m, n = A.shape
    rational = not field.is_prime
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        below = np.flatnonzero(_nonzero(A[r:, c]))
        if below.size == 0:
            continue
        if rational and below.size > 1:
            k = r + min(below, key=lambda i: _bitsize(A[r + i, c]))
        else:
            k = r + below[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        support = c + np.flatnonzero(_nonzero(A[r, c:]))
        A[r, support] = field.reduce(A[r, support] * field.inv(A[r, c]))
        col = A[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(_nonzero(col))
        if others.size:
            block = np.ix_(others, support)
            A[block] = field.reduce(A[block] - np.outer(col[others], A[r, support]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rref(M, field: Field, cols: int | None = None) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row-echelon form of ``M``.

    Returns ``(R, rank, pivot_cols)`` where ``R`` has exactly ``rank`` rows
    (zero rows dropped).  The result is canonical: row-equivalent inputs
    give identical ``R``.
    """
    A = _as_matrix(M, field, cols)
    ncols = A.shape[1]
    A = A[_nonzero(A).any(axis=1)]

    unit_cols: list[int] = []
    while A.shape[0]:
        nz = _nonzero(A)
        single = np.flatnonzero(nz.sum(axis=1) == 1)
        if single.size == 0:
            break
        cs = np.unique(nz[single].argmax(axis=1))
        unit_cols.extend(int(c) for c in cs)
        A[:, cs] = 0
        A = A[_nonzero(A).any(axis=1)]

    rest = np.setdiff1d(np.arange(ncols), np.array(unit_cols, dtype=np.int64))
    dense, dense_piv = _gauss_jordan(A[:, rest], field) if A.shape[0] else (A[:0, rest], [])

    rank = len(unit_cols) + len(dense_piv)
    R = field.zeros((rank, ncols))
    pivots = sorted(unit_cols + [int(rest[c]) for c in dense_piv])
    row_of = {c: i for i, c in enumerate(pivots)}
    for c in unit_cols:
        R[row_of[c], c] = field.one()
    for i, c in enumerate(dense_piv):
        R[row_of[int(rest[c])], rest] = dense[i]
    return R, rank, pivots


def rank(M, field: Field) -> int:
    return rref(M, field)[1]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of k^ambient_dim stored as its canonical RREF basis."""

    field: Field
    ambient_dim: int
    basis: np.ndarray
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, field: Field, rows, ambient_dim: int) -> Subspace:
        R, _, piv = rref(rows, field, cols=ambient_dim)
        if R.shape[1] != ambient_dim:
            raise DimensionMismatch(f"rows have length {R.shape[1]}, expected {ambient_dim}")
        return cls(field, ambient_dim, R, tuple(piv))

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> Subspace:
        return cls(field, ambient_dim, field.zeros((0, ambient_dim)), ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> Subspace:
        eye = field.zeros((ambient_dim, ambient_dim))
        for i in range(ambient_dim):
            eye[i, i] = field.one()
        return cls(field, ambient_dim, eye, tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    @property
    def free_columns(self) -> np.ndarray:
        """Non-pivot columns; their unit vectors span a complement."""
        mask = np.ones(self.ambient_dim, dtype=bool)
        mask[list(self.pivots)] = False
        return np.flatnonzero(mask)

    def residues(self, V) -> np.ndarray:
        """Rows of ``V`` reduced against the basis (zero exactly on members)."""
        V = _as_matrix(V, self.field, self.ambient_dim)
        if V.shape[1] != self.ambient_dim:
            raise DimensionMismatch(f"vector length {V.shape[1]} != ambient {self.ambient_dim}")
        if not self.dim:
            return V
        return self.field.reduce(V - self.field.matmul(V[:, list(self.pivots)], self.basis))

    def contains(self, v) -> bool:
        return subspace_contains(self, v)

    def contains_all(self, V) -> bool:
        return not _nonzero(self.residues(V)).any()

    def issubspace(self, other: Subspace) -> bool:
        """True iff ``self`` is contained in ``other``."""
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return self.dim <= other.dim and other.contains_all(self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return Subspace.span(self.field, np.vstack([self.basis, other.basis]), self.ambient_dim)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    __hash__ = None

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, {self.field})"


def subspace_contains(U: Subspace, v) -> bool:
    """Membership of a single vector, by reduction against the RREF rows."""
    v = np.asarray(v)
    if v.ndim != 1:
        raise DimensionMismatch("expected a vector")
    return not _nonzero(U.residues(v.reshape(1, -1))).any()


def kernel_basis(M, field: Field, cols: int | None = None) -> Subspace:
    """The right kernel ``{v : M v = 0}`` as a canonical subspace."""
    R, rk, pivots = rref(M, field, cols)
    ncols = R.shape[1]
    free = [c for c in range(ncols) if c not in set(pivots)]
    K = field.zeros((len(free), ncols))
    for i, f in enumerate(free):
        K[i, f] = field.one()
        if rk:
            K[i, pivots] = field.reduce(-R[:, f])
    return Subspace.span(field, K, ncols)
