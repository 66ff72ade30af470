"""
Exact scalar fields: the rationals and prime fields F_p.

Scalars are sympy domain elements (``QQ`` or ``GF(p)`` with canonical
residues); one FieldSpec is shared by every matrix of a computation.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain


@lru_cache(maxsize=None)
def _domain_for(characteristic: int) -> Domain:
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class FieldSpec:
    """
    Ground field of an algebra.

    Attributes:
        characteristic: 0 for the rationals, otherwise a prime p
    """
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic < 0 or (self.characteristic and not isprime(self.characteristic)):
            raise ValueError(f"characteristic must be 0 or a prime, got {self.characteristic}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """'Q' (or 'QQ') for the rationals, a prime number for F_p."""
        token = text.strip()
        if token.upper() in ("Q", "QQ"):
            return cls(0)
        try:
            return cls(int(token))
        except ValueError:
            raise ValueError(f"unknown field '{text}', expected Q or a prime")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime field"

    @property
    def domain(self) -> Domain:
        return _domain_for(self.characteristic)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def __call__(self, value: Union[int, Fraction, str, Any]):
        """Coerce an int, Fraction, 'p/q' string or domain element to a scalar."""
        K = self.domain
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return K(value.numerator)
            if self.characteristic and value.denominator % self.characteristic == 0:
                raise ValueError(f"{value} is not defined in F_{self.characteristic}")
            return K(value.numerator) / K(value.denominator)
        if isinstance(value, int):
            return K(value)
        if K.of_type(value):
            return value
        return K.convert(value)

    def format(self, a) -> str:
        if self.characteristic:
            return str(int(a))
        return str(a)

    def elements(self):
        """All field elements; prime fields only."""
        if not self.characteristic:
            raise ValueError("the rationals are not enumerable")
        return [self.domain(k) for k in range(self.characteristic)]

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"
