"""Exact coefficient fields: prime fields F_p and the rationals.

Elements are plain Python values in canonical form: an ``int`` in
``[0, p)`` for a prime field, a ``fractions.Fraction`` (always in lowest
terms with positive denominator) for the rationals.  Canonical form makes
equality of elements representational equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

DEFAULT_PRIME = 10007

# Above this modulus products of two residues no longer fit in int64.
_INT64_SAFE_PRIME = 2**31

FieldElement = Union[int, Fraction]


class ZeroInverse(ZeroDivisionError):
    """Raised when inverting zero."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """A coefficient field, either ``Field("prime", p)`` or ``Field("rational")``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "prime":
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise ValueError(f"modulus must be a prime, got {self.p!r}")
        elif self.kind == "rational":
            if self.p is not None:
                raise ValueError("the rational field takes no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> Field:
        return cls("prime", p)

    @classmethod
    def rational(cls) -> Field:
        return cls("rational")

    @classmethod
    def parse(cls, text: str) -> Field:
        """Parse a command-line field selector: ``prime:P``, ``prime`` or ``rational``."""
        text = text.strip().lower()
        if text in ("rational", "q", "qq"):
            return cls.rational()
        if text == "prime":
            return cls.prime()
        if text.startswith("prime:"):
            try:
                return cls.prime(int(text[6:]))
            except ValueError:
                raise ValueError(f"bad field selector {text!r}") from None
        raise ValueError(f"bad field selector {text!r}")

    @classmethod
    def from_dict(cls, data: dict | None) -> Field:
        if not data:
            return cls.prime()
        kind = data.get("type", "prime")
        if kind == "prime":
            return cls.prime(int(data.get("p", DEFAULT_PRIME)))
        if kind == "rational":
            return cls.rational()
        raise ValueError(f"unknown field type {kind!r}")

    def to_dict(self) -> dict:
        if self.is_prime:
            return {"type": "prime", "p": self.p}
        return {"type": "rational"}

    def __str__(self):
        return f"GF({self.p})" if self.is_prime else "QQ"

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    @property
    def characteristic(self) -> int:
        return self.p if self.is_prime else 0

    # -- scalars ---------------------------------------------------------

    def __call__(self, value) -> FieldElement:
        """Canonical element for an int or Fraction."""
        if self.is_prime:
            if isinstance(value, Fraction):
                return self.div(value.numerator, value.denominator)
            return int(value) % self.p
        return Fraction(value)

    def zero(self) -> FieldElement:
        return self(0)

    def one(self) -> FieldElement:
        return self(1)

    def add(self, a, b) -> FieldElement:
        return (a + b) % self.p if self.is_prime else a + b

    def sub(self, a, b) -> FieldElement:
        return (a - b) % self.p if self.is_prime else a - b

    def neg(self, a) -> FieldElement:
        return (-a) % self.p if self.is_prime else -a

    def mul(self, a, b) -> FieldElement:
        return (a * b) % self.p if self.is_prime else a * b

    def inv(self, a) -> FieldElement:
        if self.is_prime:
            a = int(a) % self.p
            if a == 0:
                raise ZeroInverse("0 has no inverse")
            return pow(a, -1, self.p)
        if a == 0:
            raise ZeroInverse("0 has no inverse")
        return 1 / Fraction(a)

    def div(self, a, b) -> FieldElement:
        return self.mul(self(a), self.inv(self(b)))

    def signed(self, a) -> int | Fraction:
        """Representative closest to zero, used when rendering."""
        if self.is_prime and a > self.p // 2:
            return a - self.p
        return a

    # -- arrays ----------------------------------------------------------

    @property
    def dtype(self):
        if self.is_prime and self.p < _INT64_SAFE_PRIME:
            return np.int64
        return object

    def array(self, values) -> np.ndarray:
        """Array of canonical elements (int64 residues or object Fractions)."""
        if self.dtype is np.int64:
            return np.asarray(values, dtype=np.int64) % self.p
        a = np.array(values, dtype=object)
        return np.vectorize(self, otypes=[object])(a) if a.size else a

    def zeros(self, shape) -> np.ndarray:
        if self.dtype is np.int64:
            return np.zeros(shape, dtype=np.int64)
        z = np.empty(shape, dtype=object)
        z.fill(self.zero())
        return z

    def reduce(self, a: np.ndarray) -> np.ndarray:
        """Bring an array of raw int64/object values back to canonical form."""
        if self.is_prime:
            return a % self.p
        return a

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Exact matrix product with canonical entries.

        Word-sized primes go through float64 BLAS in chunks small enough
        that every partial sum stays below 2**53, hence exact.
        """
        if self.dtype is not np.int64:
            return self._sparse_object_matmul(a, b)
        k = a.shape[-1]
        chunk = max(1, 2**53 // max(1, (self.p - 1) ** 2))
        out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
        for s in range(0, k, chunk):
            part = a[..., s:s + chunk].astype(np.float64) @ b[s:s + chunk].astype(np.float64)
            out = (out + part.astype(np.int64) % self.p) % self.p
        return out

    def _sparse_object_matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        # Exact scalars are slow; skip the zero entries, which dominate slice matrices.
        vector = b.ndim == 1
        b2 = b.reshape(-1, 1) if vector else b
        a2 = a.reshape(1, -1) if a.ndim == 1 else a
        out = self.zeros((a2.shape[0], b2.shape[1]))
        b_nz = [np.flatnonzero(np.asarray(row != 0, dtype=bool)) for row in b2]
        for i in range(a2.shape[0]):
            acc = {}
            for k in np.flatnonzero(np.asarray(a2[i] != 0, dtype=bool)):
                c = a2[i, k]
                for j in b_nz[k]:
                    acc[j] = acc.get(j, 0) + c * b2[k, j]
            for j, v in acc.items():
                out[i, j] = v
        out = self.reduce(out)
        if vector:
            out = out[:, 0]
        return out[0] if a.ndim == 1 else out
