"""Prime-field scalars.

All arithmetic of the toolkit happens over F_p for a large prime p, which
stands in for a field of characteristic zero. Coefficient arrays are numpy
int64 vectors of canonical residues in [0, p).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np
import sympy

from app.core.config import MAX_PRIME, MIN_PRIME, settings
from app.services.algebra.exceptions import AlgebraError, FieldMismatchError

ScalarLike = Union["Scalar", int]


@dataclass(frozen=True, slots=True)
class PrimeField:
    """The ambient field F_p."""

    prime: int

    def __post_init__(self) -> None:
        if not MIN_PRIME <= self.prime < MAX_PRIME or not sympy.isprime(self.prime):
            raise AlgebraError(f"unsupported modulus {self.prime}")

    @classmethod
    def default(cls) -> PrimeField:
        """Field built from the configured prime."""
        return cls(settings.prime)

    def __call__(self, value: ScalarLike) -> Scalar:
        if isinstance(value, Scalar):
            self.check(value.field)
            return value
        return Scalar(int(value) % self.prime, self)

    def check(self, other: PrimeField) -> None:
        if other.prime != self.prime:
            raise FieldMismatchError(f"F_{self.prime} vs F_{other.prime}")

    def reduce(self, values: np.ndarray | list[int]) -> np.ndarray:
        """Canonical residues of an integer array."""
        return np.mod(np.asarray(values, dtype=np.int64), self.prime)

    def inverse(self, value: int) -> int:
        value %= self.prime
        if value == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return pow(value, -1, self.prime)

    def random_elements(self, rng: np.random.Generator, size: int | tuple[int, ...]) -> np.ndarray:
        """Uniform residues in [0, p)."""
        return rng.integers(0, self.prime, size=size, dtype=np.int64)

    def random_nonzero_vector(self, rng: np.random.Generator, length: int) -> np.ndarray:
        """Uniform vector of F_p^length minus the origin."""
        while True:
            vector = self.random_elements(rng, length)
            if np.any(vector):
                return vector


@dataclass(frozen=True, slots=True)
class Scalar:
    """An element of F_p with canonical representative 0 <= value < p."""

    value: int
    field: PrimeField

    def _coerce(self, other: ScalarLike) -> int:
        if isinstance(other, Scalar):
            self.field.check(other.field)
            return other.value
        return int(other)

    def __add__(self, other: ScalarLike) -> Scalar:
        return self.field(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> Scalar:
        return self.field(self.value - self._coerce(other))

    def __rsub__(self, other: ScalarLike) -> Scalar:
        return self.field(self._coerce(other) - self.value)

    def __neg__(self) -> Scalar:
        return self.field(-self.value)

    def __mul__(self, other: ScalarLike) -> Scalar:
        return self.field(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> Scalar:
        return self * self.field.inverse(self._coerce(other))

    def __pow__(self, exponent: int) -> Scalar:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return self.field(pow(self.value, exponent, self.field.prime))

    def inverse(self) -> Scalar:
        return self.field(self.field.inverse(self.value))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.field.prime == other.field.prime and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.prime
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field.prime))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.prime})"
