"""
Spin Space
Spin values, magnetic indices, phase tables and the antidiagonal
measurement operators |m> -> e^{i phase(m)} |-m>.

Basis states are ordered by increasing m: basis index 0 is m = -j.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import (
    AntisymmetryViolation,
    IllegalZeroPhase,
    InvalidMagneticIndex,
    InvariantViolation,
    MissingZeroPhase,
    NonRationalPhase,
    NonZeroSpinRequired,
    NotHermitian,
    ScenarioParseError,
    SpinParseError,
    WrongArity,
    ZeroPhaseForbidden,
)
from .angles import Angle, RationalAngle, RealAngle


HERMITIAN_TOLERANCE = 1e-12
INVOLUTION_TOLERANCE = 1e-12
EIGENVALUE_TOLERANCE = 1e-9


def json_int(value: Any, field: str) -> int:
    """Integer from parsed JSON; floats, strings and booleans are rejected."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioParseError(f"{field} must be an integer, got {value!r}")
    return value


_SPIN_PATTERN = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


@dataclass(frozen=True, order=True)
class SpinJ:
    """Spin j, stored as twice its value."""
    twice_j: int

    def __post_init__(self):
        if self.twice_j < 1:
            raise NonZeroSpinRequired(f"spin must be non-zero, got twice_j={self.twice_j}")

    @classmethod
    def parse(cls, text: str) -> "SpinJ":
        """Parse "1/2", "3/2", "1", "2" ... into a spin."""
        match = _SPIN_PATTERN.match(text)
        if not match:
            raise SpinParseError(f"malformed spin {text!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2) or 1)
        if denominator not in (1, 2):
            raise SpinParseError(f"spin denominator must be 1 or 2, got {text!r}")
        twice_j = numerator * (2 // denominator)
        if twice_j == 0:
            raise NonZeroSpinRequired(f"spin must be non-zero, got {text!r}")
        if twice_j < 0:
            raise SpinParseError(f"spin must be positive, got {text!r}")
        return cls(twice_j)

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_j, 2)

    @property
    def dimension(self) -> int:
        return self.twice_j + 1

    def is_half_integer(self) -> bool:
        return self.twice_j % 2 == 1

    def is_integer(self) -> bool:
        return self.twice_j % 2 == 0

    @property
    def positive_count(self) -> int:
        """Number of magnetic indices with m > 0."""
        return (self.twice_j + 1) // 2

    def magnetic_indices(self) -> Tuple["MagneticIndex", ...]:
        """All m from -j to j in increasing order."""
        return tuple(MagneticIndex(t) for t in range(-self.twice_j, self.twice_j + 1, 2))

    def positive_indices(self) -> Tuple["MagneticIndex", ...]:
        return tuple(m for m in self.magnetic_indices() if m.twice_m > 0)

    def index_of(self, m: "MagneticIndex") -> int:
        """Basis index of m."""
        if abs(m.twice_m) > self.twice_j or (m.twice_m - self.twice_j) % 2:
            raise InvalidMagneticIndex(f"m={m} is not a magnetic index of j={self}")
        return (m.twice_m + self.twice_j) // 2

    def __str__(self) -> str:
        return str(self.twice_j // 2) if self.is_integer() else f"{self.twice_j}/2"


@dataclass(frozen=True, order=True)
class MagneticIndex:
    """Magnetic quantum number m, stored as twice its value."""
    twice_m: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_m, 2)

    def negated(self) -> "MagneticIndex":
        return MagneticIndex(-self.twice_m)

    def __str__(self) -> str:
        if self.twice_m % 2 == 0:
            return str(self.twice_m // 2)
        return f"{self.twice_m}/2"


@dataclass(frozen=True)
class PhaseTable:
    """
    Phases of one observer setting, indexed by basis index (increasing m).

    Antisymmetry phase(-m) = -phase(m) is enforced on construction, and for
    integer j the m=0 phase must be exactly 0 or pi.
    """
    j: SpinJ
    phases: Tuple[Angle, ...]

    def __post_init__(self):
        object.__setattr__(self, 'phases', tuple(self.phases))
        if len(self.phases) != self.j.dimension:
            raise WrongArity(
                f"expected {self.j.dimension} phases for j={self.j}, got {len(self.phases)}"
            )
        for m in self.j.positive_indices():
            upper = self.phase(m)
            lower = self.phase(m.negated())
            if lower != -upper:
                raise AntisymmetryViolation(
                    f"m={m.negated()}: phase {lower} is not the negative of phase(m={m}) = {upper}"
                )
        if self.j.is_integer():
            _check_zero_phase(self.phases[self.j.index_of(MagneticIndex(0))])

    def phase(self, m: MagneticIndex) -> Angle:
        return self.phases[self.j.index_of(m)]

    def upper_phases(self) -> List[Angle]:
        """Phases for m > 0 in increasing m."""
        return [self.phase(m) for m in self.j.positive_indices()]

    @property
    def zero_phase(self) -> Optional[Angle]:
        if self.j.is_half_integer():
            return None
        return self.phase(MagneticIndex(0))

    def is_rational(self) -> bool:
        return all(isinstance(p, RationalAngle) for p in self.phases)

    def radians(self) -> np.ndarray:
        """Phases in radians as a float array ordered by basis index."""
        return np.array([p.to_radians() for p in self.phases], dtype=float)

    def negated(self) -> "PhaseTable":
        return PhaseTable(self.j, tuple(-p for p in self.phases))

    def to_dict(self) -> Dict[str, Any]:
        """JSON form listing only m >= 0; negative m is implied."""
        if not self.is_rational():
            raise NonRationalPhase("only rational phase tables can be serialized")
        entries = []
        for m in self.j.magnetic_indices():
            if m.twice_m < 0:
                continue
            angle = self.phase(m)
            entries.append({
                'twice_m': m.twice_m,
                'num': angle.numerator,
                'den': angle.denominator,
            })
        return {'twice_j': self.j.twice_j, 'phases': entries}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PhaseTable":
        """
        Build a table from its JSON form.

        Explicit negative-m entries are accepted but must agree with
        antisymmetry.
        """
        j = SpinJ(json_int(data['twice_j'], 'twice_j'))
        given: Dict[int, RationalAngle] = {}
        for entry in data['phases']:
            m = MagneticIndex(json_int(entry['twice_m'], 'twice_m'))
            j.index_of(m)
            if m.twice_m in given:
                raise WrongArity(f"m={m} listed twice")
            given[m.twice_m] = RationalAngle(
                json_int(entry['num'], f"m={m}: num"),
                json_int(entry['den'], f"m={m}: den"),
            )

        phases: List[Optional[Angle]] = [None] * j.dimension
        for m in j.magnetic_indices():
            if m.twice_m < 0:
                continue
            if m.twice_m not in given:
                raise WrongArity(f"missing phase for m={m}")
            phases[j.index_of(m)] = given[m.twice_m]
            if m.twice_m > 0:
                phases[j.index_of(m.negated())] = -given[m.twice_m]

        for twice_m, angle in given.items():
            if twice_m < 0 and phases[j.index_of(MagneticIndex(twice_m))] != angle:
                raise AntisymmetryViolation(
                    f"m={MagneticIndex(twice_m)}: phase {angle} is not the negative of "
                    f"phase(m={MagneticIndex(-twice_m)}) = {given[-twice_m]}"
                )
        return cls(j, tuple(phases))


def _check_zero_phase(angle: Angle) -> None:
    if not isinstance(angle, RationalAngle) or not (angle.is_zero() or angle.is_pi()):
        raise IllegalZeroPhase(f"m=0: phase must be 0 or π, got {angle}")


def make_phase_table(
    j: SpinJ,
    upper_phases: Sequence[Angle],
    zero_phase: Optional[RationalAngle] = None
) -> PhaseTable:
    """
    Build a phase table from the phases for m > 0 (increasing m).

    Negative m is filled in by antisymmetry. ``zero_phase`` is required for
    integer j and forbidden for half-integer j.
    """
    if len(upper_phases) != j.positive_count:
        raise WrongArity(
            f"j={j} needs {j.positive_count} phases for m > 0, got {len(upper_phases)}"
        )
    if j.is_half_integer() and zero_phase is not None:
        raise ZeroPhaseForbidden(f"j={j} has no m=0 state")
    if j.is_integer():
        if zero_phase is None:
            raise MissingZeroPhase(f"j={j} needs an m=0 phase (0 or π)")
        _check_zero_phase(zero_phase)

    phases: List[Optional[Angle]] = [None] * j.dimension
    for m, angle in zip(j.positive_indices(), upper_phases):
        phases[j.index_of(m)] = angle
        phases[j.index_of(m.negated())] = -angle
    if j.is_integer():
        phases[j.index_of(MagneticIndex(0))] = zero_phase
    return PhaseTable(j, tuple(phases))


def make_phase_table_radians(
    j: SpinJ,
    upper_radians: Sequence[float],
    zero_phase: Optional[RationalAngle] = None
) -> PhaseTable:
    """Float-valued variant of make_phase_table; exact checks will reject it."""
    return make_phase_table(j, [RealAngle(r) for r in upper_radians], zero_phase)


@dataclass(frozen=True, eq=False)
class MeasurementOperator:
    """Dense d x d operator of one observer setting."""
    j: SpinJ
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=complex)
        if matrix.shape != (self.j.dimension, self.j.dimension):
            raise WrongArity(
                f"operator for j={self.j} must be {self.j.dimension}x{self.j.dimension}, "
                f"got {matrix.shape}"
            )
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    @property
    def dimension(self) -> int:
        return self.j.dimension


def make_operator(table: PhaseTable) -> MeasurementOperator:
    """Entry (index(-m), index(m)) = e^{i phase(m)}, zero elsewhere."""
    d = table.j.dimension
    matrix = np.zeros((d, d), dtype=complex)
    radians = table.radians()
    for col in range(d):
        matrix[d - 1 - col, col] = np.exp(1j * radians[col])
    return MeasurementOperator(table.j, matrix)


def check_hermitian(op: MeasurementOperator) -> bool:
    """Max entrywise |M - M^dagger| <= 1e-12."""
    deviation = np.abs(op.matrix - op.matrix.conj().T)
    return bool(deviation.max() <= HERMITIAN_TOLERANCE)


def check_involution(op: MeasurementOperator) -> bool:
    """Max entrywise |M M - I| <= 1e-12."""
    deviation = np.abs(op.matrix @ op.matrix - np.eye(op.dimension))
    return bool(deviation.max() <= INVOLUTION_TOLERANCE)


def eigenvalue_set(op: MeasurementOperator) -> Tuple[float, ...]:
    """
    Spectrum as a sorted multiset of +-1.

    Raises:
        NotHermitian: if the operator fails check_hermitian
        InvariantViolation: if an eigenvalue is not within 1e-9 of +-1
    """
    if not check_hermitian(op):
        raise NotHermitian(f"operator for j={op.j} is not Hermitian")
    eigenvalues = np.linalg.eigvalsh(op.matrix)
    snapped = np.where(eigenvalues >= 0, 1.0, -1.0)
    worst = np.abs(eigenvalues - snapped).max()
    if worst > EIGENVALUE_TOLERANCE:
        raise InvariantViolation(f"eigenvalue {worst:.3e} away from +-1")
    return tuple(float(v) for v in np.sort(snapped))
