"""
Svetlichny Evaluator
Sign function v_k, correlators, the analytic expectation value on the GHZ
state, an independent matrix oracle, and the three bounds.
"""

import math
from typing import NamedTuple, Optional

import numpy as np

from ..errors import ImaginaryResidue, InvalidPartyCount, InvariantViolation, ShapeMismatch
from ..spin import SpinJ
from ..states import DEFAULT_DIMENSION_GUARD, apply_setting, check_dimension, make_ghz
from ..types import SettingsTuple, SvetlichnyReport
from .scenario import MIN_PARTIES, Scenario


IMAGINARY_TOLERANCE = 1e-10
VIOLATION_TOLERANCE = 1e-9

# Largest n whose bounds fit in a float; sqrt(2^{n+1}) overflows above it
MAX_BOUND_PARTIES = 1022

# v_k = (-1)^{k(k-1)/2} depends only on k mod 4
_SIGN_BY_RESIDUE = (1, 1, -1, -1)


class Bounds(NamedTuple):
    lhv: float
    quantum: float
    fixed_sign: float


def sign_v(k: int) -> int:
    """(-1)^{k(k-1)/2}: +1 for k mod 4 in {0, 1}, -1 for {2, 3}."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return _SIGN_BY_RESIDUE[k % 4]


def tuple_matrix(n: int) -> np.ndarray:
    """All 2^n settings tuples as rows of a (2^n, n) 0/1 array, lexicographic order."""
    indices = np.arange(2 ** n, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((indices[:, None] >> shifts[None, :]) & 1).astype(np.int64)


def sign_vector(n: int) -> np.ndarray:
    """v_k for every tuple of tuple_matrix(n)."""
    k = tuple_matrix(n).sum(axis=1)
    return np.asarray(_SIGN_BY_RESIDUE, dtype=np.int64)[k % 4]


def correlator(scenario: Scenario, settings: SettingsTuple) -> complex:
    """(1/(2j+1)) sum_m exp(i sum_i phase_i(x_i, m))"""
    if len(settings) != scenario.n_parties:
        raise ShapeMismatch(
            f"tuple of length {len(settings)} for a {scenario.n_parties}-party scenario"
        )
    phases = scenario.phase_array()
    total = phases[np.arange(scenario.n_parties), list(settings.bits), :].sum(axis=0)
    return complex(np.exp(1j * total).mean())


def _real_part(value: complex) -> float:
    if abs(value.imag) > IMAGINARY_TOLERANCE:
        raise ImaginaryResidue(abs(value.imag), IMAGINARY_TOLERANCE)
    return float(value.real)


def expectation_analytic(scenario: Scenario) -> float:
    """
    <S_N> = sum over all 2^N tuples of v_k times the tuple's correlator.

    Raises:
        ImaginaryResidue: if |Im| > 1e-10, i.e. a table broke antisymmetry
    """
    n = scenario.n_parties
    phases = scenario.phase_array()
    bits = tuple_matrix(n)
    sums = phases[np.arange(n)[None, :], bits, :].sum(axis=1)
    correlators = np.exp(1j * sums).mean(axis=1)
    return _real_part(complex(np.sum(sign_vector(n) * correlators)))


def expectation_oracle(
    scenario: Scenario,
    dimension_guard: int = DEFAULT_DIMENSION_GUARD
) -> float:
    """
    <psi_N| S_N |psi_N> from the dense GHZ vector, one tensor-product
    operator per tuple. Independent of expectation_analytic.
    """
    state = make_ghz(scenario.n_parties, scenario.j, dimension_guard)
    ops = scenario.operators()
    total = 0j
    for settings in SettingsTuple.enumerate(scenario.n_parties):
        total += sign_v(settings.k) * state.inner(apply_setting(state, ops, settings))
    return _real_part(total)


def bounds(n: int) -> Bounds:
    """(2^{n-1}, 2^{n-1} sqrt 2, sqrt(2^{n+1}))"""
    if n < MIN_PARTIES:
        raise InvalidPartyCount(f"n must be ≥ {MIN_PARTIES}, got {n}")
    if n > MAX_BOUND_PARTIES:
        raise InvalidPartyCount(f"n must be ≤ {MAX_BOUND_PARTIES} for float bounds, got {n}")
    lhv = float(2 ** (n - 1))
    return Bounds(lhv, lhv * math.sqrt(2), math.sqrt(2 ** (n + 1)))


def make_report(
    n: int,
    j: SpinJ,
    value: float,
    oracle_value: Optional[float] = None
) -> SvetlichnyReport:
    """Attach bounds, ratio and the violation flag to a value."""
    lhv, quantum, fixed_sign = bounds(n)
    if abs(value) > quantum + VIOLATION_TOLERANCE:
        raise InvariantViolation(f"|<S_{n}>| = {abs(value)} exceeds the quantum bound {quantum}")
    report = SvetlichnyReport(
        n=n,
        twice_j=j.twice_j,
        value=value,
        lhv_bound=lhv,
        quantum_bound=quantum,
        fixed_sign_bound=fixed_sign,
        ratio=value / lhv,
        violated=abs(value) > lhv + VIOLATION_TOLERANCE,
    )
    if oracle_value is not None:
        report.oracle_value = oracle_value
        report.difference = abs(value - oracle_value)
    return report


def evaluate(
    scenario: Scenario,
    oracle: bool = False,
    dimension_guard: int = DEFAULT_DIMENSION_GUARD
) -> SvetlichnyReport:
    """Analytic value, optionally cross-checked against the matrix oracle."""
    oracle_value = None
    if oracle:
        check_dimension(scenario.n_parties, scenario.j, dimension_guard)
        oracle_value = expectation_oracle(scenario, dimension_guard)
    value = expectation_analytic(scenario)
    return make_report(scenario.n_parties, scenario.j, value, oracle_value)
