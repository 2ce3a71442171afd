"""Sparse homogeneous polynomials in S = k[x_0, ..., x_n].

A monomial is a tuple of n+1 exponents.  Monomials of a fixed degree are
always listed in graded reverse lexicographic order, largest first; that
list is the column order of every matrix built from degree slices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .field import Field

Monomial = tuple


class NonHomogeneousGenerator(ValueError):
    """A generator that must be homogeneous is not."""


def grevlex_key(exponents: Monomial):
    """Sort key: larger key means larger monomial in grevlex order."""
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, m: int) -> tuple[Monomial, ...]:
    """All C(m+n, n) monomials of degree ``m`` in ``n+1`` variables, grevlex-descending."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    mons = []
    for combo in itertools.combinations_with_replacement(range(n + 1), m):
        e = [0] * (n + 1)
        for j in combo:
            e[j] += 1
        mons.append(tuple(e))
    mons.sort(key=grevlex_key, reverse=True)
    return tuple(mons)


@lru_cache(maxsize=None)
def monomial_index(n: int, m: int) -> dict[Monomial, int]:
    return {mon: i for i, mon in enumerate(monomials_of_degree(n, m))}


@lru_cache(maxsize=None)
def monomial_table(n: int, m: int) -> np.ndarray:
    """Exponent matrix of shape (C(m+n, n), n+1), rows in grevlex-descending order."""
    mons = monomials_of_degree(n, m)
    return np.array(mons, dtype=np.int64).reshape(len(mons), n + 1)


def dim_S(n: int, m: int) -> int:
    return math.comb(m + n, n) if m >= 0 else 0


class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to nonzero coefficients."""

    __slots__ = ("field", "nvars", "_terms", "_hash")

    def __init__(self, field: Field, nvars: int, terms: Mapping[Monomial, object] = ()):
        self.field = field
        self.nvars = nvars
        clean = {}
        for mon, c in dict(terms).items():
            mon = tuple(int(e) for e in mon)
            if len(mon) != nvars or min(mon, default=0) < 0:
                raise ValueError(f"bad exponent vector {mon} for {nvars} variables")
            c = field(c)
            if c:
                clean[mon] = field.add(clean.get(mon, field.zero()), c)
                if not clean[mon]:
                    del clean[mon]
        self._terms = clean
        self._hash = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, field: Field, nvars: int, c=1) -> Polynomial:
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field: Field, nvars: int, j: int) -> Polynomial:
        e = [0] * nvars
        e[j] = 1
        return cls(field, nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, field: Field, exponents: Sequence[int], c=1) -> Polynomial:
        return cls(field, len(exponents), {tuple(exponents): c})

    @classmethod
    def from_vector(cls, field: Field, n: int, m: int, vec) -> Polynomial:
        """Inverse of :meth:`to_vector` for degree-``m`` forms."""
        mons = monomials_of_degree(n, m)
        return cls(field, n + 1, {mons[i]: vec[i] for i in np.flatnonzero(np.asarray(vec != 0))})

    # -- inspection ------------------------------------------------------

    @property
    def n(self) -> int:
        return self.nvars - 1

    @property
    def terms(self) -> dict[Monomial, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {sum(m) for m in self._terms}

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coefficient(self, mon: Monomial):
        return self._terms.get(tuple(mon), self.field.zero())

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        return sorted(self._terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def variables_used(self) -> set[int]:
        return {j for mon in self._terms for j, e in enumerate(mon) if e}

    def to_vector(self, m: int | None = None) -> np.ndarray:
        """Coefficient vector over the grevlex basis of S_m (homogeneous input)."""
        if m is None:
            m = max(self.degree, 0)
        if any(d != m for d in self.degrees()):
            raise NonHomogeneousGenerator(f"polynomial is not a form of degree {m}")
        index = monomial_index(self.n, m)
        vec = self.field.zeros(len(index))
        for mon, c in self._terms.items():
            vec[index[mon]] = c
        return vec

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: Polynomial):
        if self.field != other.field or self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.field, self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for mon, c in other.items():
            terms[mon] = self.field.add(terms.get(mon, 0), c)
        return Polynomial(self.field, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, self.nvars, {m: self.field.neg(c) for m, c in self.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return multiply(self, self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = Polynomial.constant(self.field, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> Polynomial:
        c = self.field(c)
        return Polynomial(self.field, self.nvars, {m: self.field.mul(v, c) for m, v in self.items()})

    def diff(self, j: int) -> Polynomial:
        return partial_derivative(self, j)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.field, self.nvars, self._terms) == (other.field, other.nvars, other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def render(self, names: Sequence[str] | None = None) -> str:
        return render(self, names)

    def __repr__(self):
        return f"Polynomial({render(self)!r}, {self.field})"

    def __str__(self):
        return render(self)


def partial_derivative(P: Polynomial, j: int) -> Polynomial:
    """d P / d x_j; terms whose multiplier vanishes in the field are dropped."""
    if not 0 <= j < P.nvars:
        raise IndexError(f"variable index {j} out of range")
    f = P.field
    terms = {}
    for mon, c in P.items():
        e = mon[j]
        if e:
            new = mon[:j] + (e - 1,) + mon[j + 1:]
            terms[new] = f.mul(c, f(e))
    return Polynomial(f, P.nvars, terms)


def multiply(P: Polynomial, Q: Polynomial) -> Polynomial:
    P._check(Q)
    f = P.field
    terms: dict = {}
    for m1, c1 in P.items():
        for m2, c2 in Q.items():
            mon = tuple(a + b for a, b in zip(m1, m2))
            terms[mon] = f.add(terms.get(mon, f.zero()), f.mul(c1, c2))
    return Polynomial(f, P.nvars, terms)


def default_names(nvars: int) -> list[str]:
    return [f"x{i}" for i in range(nvars)]


def _render_coeff(c) -> str:
    return str(c)


def render(P: Polynomial, names: Sequence[str] | None = None) -> str:
    """Canonical text: grevlex-descending terms, explicit ``*`` and ``^``."""
    names = list(names) if names is not None else default_names(P.nvars)
    if P.is_zero():
        return "0"
    parts = []
    for mon, c in P.sorted_terms():
        c = P.field.signed(c)
        negative = c < 0
        c = -c if negative else c
        factors = []
        for name, e in zip(names, mon):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if c != 1 or not factors:
            factors.insert(0, _render_coeff(c))
        body = "*".join(factors)
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)


@dataclass(frozen=True)
class IdealPresentation:
    """A homogeneous ideal of S = k[x_0..x_n] given by generators."""

    field: Field
    n: int
    generators: tuple[Polynomial, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
            if len(self.names) != self.n + 1 or len(set(self.names)) != len(self.names):
                raise ValueError("variable names must be n+1 distinct strings")
        if not self.generators:
            raise ValueError("an ideal presentation needs at least one generator")
        for g in self.generators:
            if g.field != self.field or g.nvars != self.n + 1:
                raise ValueError("generator lives in a different ring")
            if g.is_zero():
                raise ValueError("generators must be nonzero")
            if not g.is_homogeneous():
                raise NonHomogeneousGenerator(f"generator {g} is not homogeneous")

    @classmethod
    def from_strings(cls, texts: Iterable[str], names: Sequence[str], field: Field | None = None):
        from .parser import parse_polynomial

        field = field or Field.prime()
        gens = [parse_polynomial(t, names, field) for t in texts]
        for t, g in zip(texts, gens):
            if g.is_zero():
                raise ValueError(f"generator {t!r} is zero over {field}")
            if not g.is_homogeneous():
                raise NonHomogeneousGenerator(f"generator {t!r} is not homogeneous")
        return cls(field, len(names) - 1, tuple(gens), tuple(names))

    @property
    def nvars(self) -> int:
        return self.n + 1

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    def variable_names(self) -> list[str]:
        return list(self.names) if self.names else default_names(self.nvars)

    def with_field(self, field: Field) -> IdealPresentation:
        """Same generators with integer coefficients read into another field."""
        gens = []
        for g in self.generators:
            gens.append(Polynomial(field, g.nvars, {m: self.field.signed(c) for m, c in g.items()}))
        return IdealPresentation(field, self.n, tuple(gens), self.names)

    def squared(self) -> IdealPresentation:
        """Presentation of I^2 by the pairwise products of generators."""
        g = self.generators
        prods = tuple(g[i] * g[j] for i in range(len(g)) for j in range(i, len(g)))
        return IdealPresentation(self.field, self.n, prods, self.names)
