"""
Exact Angles
Rational multiples of pi, normalized into [0, 2pi), plus a float-valued
counterpart for phases that are not rational multiples of pi.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import InvalidAngle


TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class RationalAngle:
    """
    Angle (numerator/denominator) * pi.
    Stored reduced with the value in [0, 2pi), so equality is exact modulo 2pi.
    """
    numerator: int
    denominator: int = 1

    def __post_init__(self):
        if self.denominator <= 0:
            raise InvalidAngle(f"denominator must be positive, got {self.denominator}")
        turns = Fraction(self.numerator, self.denominator) % 2
        object.__setattr__(self, 'numerator', turns.numerator)
        object.__setattr__(self, 'denominator', turns.denominator)

    @classmethod
    def of(cls, value: Union[Fraction, int, str]) -> "RationalAngle":
        """Build from a multiple of pi, e.g. Fraction(-1, 4) or "3/4"."""
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @property
    def multiple_of_pi(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __add__(self, other: "Angle") -> "Angle":
        if isinstance(other, RationalAngle):
            return RationalAngle.of(self.multiple_of_pi + other.multiple_of_pi)
        if isinstance(other, RealAngle):
            return RealAngle(self.to_radians() + other.radians)
        return NotImplemented

    def __neg__(self) -> "RationalAngle":
        return RationalAngle(-self.numerator, self.denominator)

    def __sub__(self, other: "Angle") -> "Angle":
        return self + (-other)

    def is_zero(self) -> bool:
        return self.numerator == 0

    def is_pi(self) -> bool:
        return self.numerator == 1 and self.denominator == 1

    def to_radians(self) -> float:
        """The only lossy exit point."""
        return math.pi * self.numerator / self.denominator

    def __str__(self) -> str:
        if self.numerator == 0:
            return "0"
        head = "π" if self.numerator == 1 else f"{self.numerator}π"
        return head if self.denominator == 1 else f"{head}/{self.denominator}"


@dataclass(frozen=True)
class RealAngle:
    """Float-valued angle in radians, normalized into [0, 2pi)."""
    radians: float

    def __post_init__(self):
        object.__setattr__(self, 'radians', float(self.radians) % TWO_PI)

    def __add__(self, other: "Angle") -> "RealAngle":
        if isinstance(other, (RationalAngle, RealAngle)):
            return RealAngle(self.radians + other.to_radians())
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "RealAngle":
        return RealAngle(-self.radians)

    def __sub__(self, other: "Angle") -> "RealAngle":
        return self + (-other)

    def to_radians(self) -> float:
        return self.radians

    def __str__(self) -> str:
        return f"{self.radians:.12g} rad"


Angle = Union[RationalAngle, RealAngle]

ZERO = RationalAngle(0)
PI = RationalAngle(1)
