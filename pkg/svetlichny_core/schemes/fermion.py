"""
Fermion Scheme
Half-integer spin: the inductive phase construction reaching 2^{N-1} sqrt 2.
"""

from fractions import Fraction
from typing import List, Optional, Tuple

from ..errors import NotHalfInteger
from ..logging import LogStreamer
from ..spin import RationalAngle, SpinJ, ZERO
from ..svetlichny import Scenario
from .base import BasePhaseScheme
from .predict import predicted_max


FIRST_PARTY_PHASES = (RationalAngle.of(Fraction(-1, 4)), RationalAngle.of(Fraction(1, 4)))
LATER_PARTY_PHASES = (ZERO, RationalAngle.of(Fraction(1, 2)))


def inductive_phases(n: int) -> List[Tuple[RationalAngle, RationalAngle]]:
    """
    Party 1 gets (-pi/4, pi/4); every further party appends (0, pi/2).

    Adding a party with (0, pi/2) keeps a tuple's residue class when x=0 and
    moves it to the next class, whose target is pi/2 further on, when x=1.
    """
    return [FIRST_PARTY_PHASES] + [LATER_PARTY_PHASES] * (n - 1)


class FermionScheme(BasePhaseScheme):
    """Phases identical for every m > 0."""

    def __init__(self, n: int, j: SpinJ, logger: Optional[LogStreamer] = None):
        if not j.is_half_integer():
            raise NotHalfInteger(f"fermion scheme needs half-integer spin, got j={j}")
        super().__init__(n, j, logger)

    @property
    def name(self) -> str:
        return "fermion"

    def upper_phases(self) -> List[Tuple[RationalAngle, RationalAngle]]:
        return inductive_phases(self.n)

    def zero_phases(self) -> List[Tuple[Optional[RationalAngle], Optional[RationalAngle]]]:
        return [(None, None)] * self.n

    def predicted_value(self) -> float:
        return predicted_max(self.n, self.j)


def fermion_scheme(n: int, j: SpinJ) -> Scenario:
    return FermionScheme(n, j).build()
