"""Svetlichny operator: sign function, correlators, expectation values, bounds."""
from .scenario import MIN_PARTIES, Scenario
from .sampling import ORACLE_CASES, random_angle, random_phase_table, random_scenario
from .evaluator import (
    Bounds,
    sign_v,
    tuple_matrix,
    sign_vector,
    correlator,
    expectation_analytic,
    expectation_oracle,
    bounds,
    make_report,
    evaluate,
)

__all__ = [
    "MIN_PARTIES",
    "Scenario",
    "Bounds",
    "sign_v",
    "tuple_matrix",
    "sign_vector",
    "correlator",
    "expectation_analytic",
    "expectation_oracle",
    "bounds",
    "make_report",
    "evaluate",
    "ORACLE_CASES",
    "random_angle",
    "random_phase_table",
    "random_scenario",
]
