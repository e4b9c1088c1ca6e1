"""
Random Scenarios
Seeded generators of valid phase tables and scenarios with exact rational
phases, for property checks and oracle cross-checks.
"""

from typing import List, Tuple

import numpy as np

from ..spin import PI, PhaseTable, RationalAngle, SpinJ, ZERO, make_phase_table
from .scenario import Scenario


DEFAULT_MAX_DENOMINATOR = 24

# (n, twice_j) pairs with d^n <= 2^16, cheap enough for the matrix oracle
ORACLE_CASES: List[Tuple[int, int]] = [
    (3, 1), (3, 2), (3, 3), (3, 5), (3, 7), (3, 15),
    (4, 1), (4, 2), (4, 4), (4, 7), (4, 15),
    (5, 1), (5, 2), (5, 3),
    (6, 1), (6, 2), (6, 3),
    (7, 1), (8, 1), (8, 2), (9, 2), (10, 1), (12, 1),
]


def random_angle(rng: np.random.Generator, max_denominator: int = DEFAULT_MAX_DENOMINATOR) -> RationalAngle:
    """Uniform numerator over [0, 2 * den) for a random den <= max_denominator."""
    denominator = int(rng.integers(1, max_denominator + 1))
    numerator = int(rng.integers(0, 2 * denominator))
    return RationalAngle(numerator, denominator)


def random_phase_table(
    rng: np.random.Generator,
    j: SpinJ,
    max_denominator: int = DEFAULT_MAX_DENOMINATOR
) -> PhaseTable:
    upper = [random_angle(rng, max_denominator) for _ in range(j.positive_count)]
    zero = None
    if j.is_integer():
        zero = PI if rng.integers(0, 2) else ZERO
    return make_phase_table(j, upper, zero)


def random_scenario(
    rng: np.random.Generator,
    n: int,
    j: SpinJ,
    max_denominator: int = DEFAULT_MAX_DENOMINATOR
) -> Scenario:
    settings = tuple(
        (random_phase_table(rng, j, max_denominator), random_phase_table(rng, j, max_denominator))
        for _ in range(n)
    )
    return Scenario(j, settings)
