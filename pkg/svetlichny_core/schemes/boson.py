"""
Boson Scheme
Integer spin: the inductive phases for m != 0 plus an m=0 sign choice.
"""

from typing import List, Optional, Tuple

from ..errors import NotInteger, ShapeMismatch
from ..logging import LogStreamer
from ..spin import PI, RationalAngle, SpinJ, ZERO
from ..svetlichny import Scenario
from .base import BasePhaseScheme
from .fermion import inductive_phases
from .predict import predicted_max
from .signs import SignAssignment


class BosonScheme(BasePhaseScheme):
    """m=0 phase is 0 where the sign is +1 and pi where it is -1."""

    def __init__(
        self,
        n: int,
        j: SpinJ,
        zero_signs: SignAssignment,
        logger: Optional[LogStreamer] = None
    ):
        if not j.is_integer():
            raise NotInteger(f"boson scheme needs integer spin, got j={j}")
        if zero_signs.n_parties != n:
            raise ShapeMismatch(f"{zero_signs.n_parties} sign pairs for {n} parties")
        super().__init__(n, j, logger)
        self.zero_signs = zero_signs

    @property
    def name(self) -> str:
        return "boson"

    def upper_phases(self) -> List[Tuple[RationalAngle, RationalAngle]]:
        return inductive_phases(self.n)

    def zero_phases(self) -> List[Tuple[Optional[RationalAngle], Optional[RationalAngle]]]:
        return [
            tuple(ZERO if s == 1 else PI for s in pair)
            for pair in self.zero_signs.signs
        ]

    def predicted_value(self) -> float:
        return predicted_max(self.n, self.j, self.zero_signs.tuple_sum())


def boson_scheme(n: int, j: SpinJ, zero_signs: SignAssignment) -> Scenario:
    return BosonScheme(n, j, zero_signs).build()
