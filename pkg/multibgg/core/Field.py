from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

import numpy as np
from sympy import GF, QQ, isprime, mod_inverse

from multibgg.errors import InvalidRingError

Coefficient = Union[int, Fraction]


@dataclass(frozen=True)
class Field:
    """
    QQ (characteristic 0, coefficients are `Fraction`) or ZZ/p (coefficients
    are ints in [0, p)). Arithmetic is exact in both cases.
    """
    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p != 0 and not isprime(p)):
            raise InvalidRingError(f"characteristic {p} is not prime", "/field")

    @staticmethod
    def rationals() -> "Field":
        return Field(0)

    @staticmethod
    def prime(p: int) -> "Field":
        return Field(p)

    @property
    def name(self) -> str:
        return "QQ" if self.characteristic == 0 else f"ZZ/{self.characteristic}"

    def __repr__(self):
        return self.name

    @property
    def zero(self) -> Coefficient:
        return self(0)

    @property
    def one(self) -> Coefficient:
        return self(1)

    def __call__(self, value) -> Coefficient:
        """Coerce ints, Fractions and strings like "3/4" into the field."""
        if isinstance(value, str):
            value = Fraction(value)
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Rational) and not isinstance(value, int):
            value = Fraction(value)
            return value.numerator * mod_inverse(value.denominator, p) % p
        return int(value) % p

    def add(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return (a + b) % self.characteristic if self.characteristic else a + b

    def sub(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return (a - b) % self.characteristic if self.characteristic else a - b

    def mul(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return (a * b) % self.characteristic if self.characteristic else a * b

    def neg(self, a: Coefficient) -> Coefficient:
        return (-a) % self.characteristic if self.characteristic else -a

    def inv(self, a: Coefficient) -> Coefficient:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return mod_inverse(a, self.characteristic)
        return 1 / Fraction(a)

    def div(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return self.mul(a, self.inv(b))

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        """Bring an object-dtype array back into canonical form after vector arithmetic."""
        if self.characteristic:
            return arr % self.characteristic
        return arr

    def signed(self, a: Coefficient) -> Coefficient:
        """Symmetric representative, used only for printing (100 in ZZ/101 prints as -1)."""
        p = self.characteristic
        if p and a > p // 2:
            return a - p
        return a

    @property
    def domain(self):
        """The sympy domain with the same elements, for DomainMatrix elimination."""
        return _sympy_domain(self.characteristic)

    def to_domain(self, a: Coefficient):
        if self.characteristic:
            return self.domain(int(a))
        return self.domain(a.numerator, a.denominator)

    def from_domain(self, a) -> Coefficient:
        if self.characteristic:
            return int(self.domain.to_int(a)) % self.characteristic
        return Fraction(int(a.numerator), int(a.denominator))

    def to_json(self):
        return "QQ" if self.characteristic == 0 else {"Fp": self.characteristic}


@lru_cache(maxsize=None)
def _sympy_domain(p: int):
    return GF(p) if p else QQ
