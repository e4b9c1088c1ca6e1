"""
Base Phase Scheme
Fermion and boson schemes inherit from this base class.
"""

from abc import ABC, abstractmethod
from typing import List, Optional, Tuple

from ..errors import InvalidPartyCount, InvariantViolation
from ..logging import LogStreamer
from ..spin import RationalAngle, SpinJ, make_phase_table
from ..states import DEFAULT_DIMENSION_GUARD
from ..svetlichny import MIN_PARTIES, Scenario, evaluate
from ..types import SvetlichnyReport


PREDICTION_TOLERANCE = 1e-9


class BasePhaseScheme(ABC):
    """
    Abstract base class for phase schemes.
    Builds the scenario from per-party phases that are uniform in m > 0,
    evaluates it and checks the value against the closed form.
    """

    def __init__(self, n: int, j: SpinJ, logger: Optional[LogStreamer] = None):
        if n < MIN_PARTIES:
            raise InvalidPartyCount(f"n must be ≥ {MIN_PARTIES}, got {n}")
        self.n = n
        self.j = j
        self.logger = logger

    @property
    @abstractmethod
    def name(self) -> str:
        """Scheme name used in logs"""
        pass

    @abstractmethod
    def upper_phases(self) -> List[Tuple[RationalAngle, RationalAngle]]:
        """Per party, the (setting 0, setting 1) phase shared by every m > 0."""
        pass

    @abstractmethod
    def zero_phases(self) -> List[Tuple[Optional[RationalAngle], Optional[RationalAngle]]]:
        """Per party, the m=0 phases (None for half-integer spin)."""
        pass

    @abstractmethod
    def predicted_value(self) -> float:
        """Closed-form expectation value of the scheme."""
        pass

    def build(self) -> Scenario:
        settings = []
        for upper, zero in zip(self.upper_phases(), self.zero_phases()):
            settings.append(tuple(
                make_phase_table(self.j, [upper[x]] * self.j.positive_count, zero[x])
                for x in (0, 1)
            ))
        return Scenario(self.j, tuple(settings))

    def run(
        self,
        oracle: bool = False,
        dimension_guard: int = DEFAULT_DIMENSION_GUARD
    ) -> Tuple[Scenario, SvetlichnyReport]:
        """
        Build and evaluate the scheme.

        Raises:
            InvariantViolation: if the evaluated value misses the closed form
        """
        scenario = self.build()
        report = evaluate(scenario, oracle=oracle, dimension_guard=dimension_guard)
        expected = self.predicted_value()
        if abs(report.value - expected) > PREDICTION_TOLERANCE:
            self._log(
                f"n={self.n}, j={self.j}: value {report.value} != predicted {expected}",
                level='error'
            )
            raise InvariantViolation(
                f"{self.name} scheme n={self.n}, j={self.j}: value {report.value} "
                f"differs from predicted {expected}"
            )
        self._log(
            f"n={self.n}, j={self.j}: <S_N> = {report.value:.9g}, ratio {report.ratio:.9g}",
            level='success' if report.violated else 'info'
        )
        return scenario, report

    def _log(self, message: str, level: str = 'info') -> None:
        """Log a message using the configured logger"""
        if self.logger:
            self.logger.write(message, level=level, source='scheme')
