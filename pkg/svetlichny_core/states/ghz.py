"""
GHZ States
The N-party spin-j state (2j+1)^{-1/2} sum_m |m>^{(x)N} and party-local
application of measurement operators.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import DimensionGuardExceeded, ShapeMismatch, SpinMismatch, ValidationError
from ..spin import MeasurementOperator, SpinJ
from ..types import SettingsTuple


DEFAULT_DIMENSION_GUARD = 2 ** 21
NORM_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class StateVector:
    """
    Dense amplitudes over the (2j+1)^N product basis.
    Basis index = sum_i (m-index of party i) * d^(N-1-i), party 0 most significant.
    """
    n_parties: int
    j: SpinJ
    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = np.asarray(self.amplitudes, dtype=complex)
        expected = self.j.dimension ** self.n_parties
        if amplitudes.shape != (expected,):
            raise ShapeMismatch(
                f"state of {self.n_parties} spin-{self.j} parties needs {expected} amplitudes, "
                f"got shape {amplitudes.shape}"
            )
        amplitudes.setflags(write=False)
        object.__setattr__(self, 'amplitudes', amplitudes)

    @property
    def dimension(self) -> int:
        return self.amplitudes.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def inner(self, other: "StateVector") -> complex:
        """<self|other>"""
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def check_dimension(n: int, j: SpinJ, guard: int = DEFAULT_DIMENSION_GUARD) -> int:
    """Return d^n, raising DimensionGuardExceeded above the guard."""
    dimension = j.dimension ** n
    if dimension > guard:
        raise DimensionGuardExceeded(dimension, guard)
    return dimension


def make_ghz(n: int, j: SpinJ, dimension_guard: int = DEFAULT_DIMENSION_GUARD) -> StateVector:
    """Amplitude (2j+1)^{-1/2} wherever every party shares the same m."""
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    dimension = check_dimension(n, j, dimension_guard)
    d = j.dimension
    # b * (1 + d + ... + d^(n-1)) is the index of |b>|b>...|b>
    stride = (dimension - 1) // (d - 1)
    amplitudes = np.zeros(dimension, dtype=complex)
    amplitudes[np.arange(d) * stride] = 1.0 / np.sqrt(d)
    return StateVector(n, j, amplitudes)


def apply_operators(state: StateVector, ops: Sequence[MeasurementOperator]) -> StateVector:
    """
    (O_1 (x) ... (x) O_N)|state>, one d x d factor per party.
    The d^N x d^N product matrix is never built.
    """
    if len(ops) != state.n_parties:
        raise ShapeMismatch(f"need {state.n_parties} operators, got {len(ops)}")
    d = state.j.dimension
    psi = state.amplitudes.reshape((d,) * state.n_parties)
    for party, op in enumerate(ops):
        if op.j != state.j:
            raise SpinMismatch(f"party {party + 1}: operator spin {op.j} != state spin {state.j}")
        psi = np.moveaxis(np.tensordot(op.matrix, psi, axes=([1], [party])), 0, party)
    return StateVector(state.n_parties, state.j, psi.reshape(-1))


def apply_setting(
    state: StateVector,
    ops: Sequence[Sequence[MeasurementOperator]],
    settings: SettingsTuple
) -> StateVector:
    """Apply the operator each party picks with its setting bit; ops[i] = (setting 0, setting 1)."""
    if len(settings) != state.n_parties or len(ops) != state.n_parties:
        raise ShapeMismatch(
            f"{state.n_parties} parties, {len(ops)} operator pairs, {len(settings)} settings"
        )
    chosen = []
    for party, (pair, x) in enumerate(zip(ops, settings.bits)):
        if len(pair) != 2:
            raise ShapeMismatch(f"party {party + 1}: expected 2 settings, got {len(pair)}")
        chosen.append(pair[x])
    return apply_operators(state, chosen)
