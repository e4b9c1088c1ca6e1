"""Optimal phase schemes, the m=0 sign search and the fixed-sign bound."""
from .signs import SIGN_PAIRS, SignAssignment
from .conditions import CONDITION_TARGETS, residue_class, verify_condition
from .predict import predicted_max, integer_spin_bracket, violation_horizon
from .base import BasePhaseScheme
from .fermion import FermionScheme, fermion_scheme, inductive_phases
from .boson import BosonScheme, boson_scheme
from .search import (
    DEFAULT_SEARCH_GUARD,
    SearchResult,
    BoundVerification,
    SignSearch,
    f_function,
    search_zero_signs,
    verify_fixed_sign_bound,
)
from .reference import REFERENCE_ZERO_SIGNS, REFERENCE_MAXIMA, REFERENCE_SPIN_ONE_RATIOS
from .sweep import SWEEP_HEADER, SweepCase, sweep_cases, run_sweep, sweep_row

__all__ = [
    "SIGN_PAIRS",
    "SignAssignment",
    "CONDITION_TARGETS",
    "residue_class",
    "verify_condition",
    "predicted_max",
    "integer_spin_bracket",
    "violation_horizon",
    "BasePhaseScheme",
    "FermionScheme",
    "fermion_scheme",
    "inductive_phases",
    "BosonScheme",
    "boson_scheme",
    "DEFAULT_SEARCH_GUARD",
    "SearchResult",
    "BoundVerification",
    "SignSearch",
    "f_function",
    "search_zero_signs",
    "verify_fixed_sign_bound",
    "REFERENCE_ZERO_SIGNS",
    "REFERENCE_MAXIMA",
    "REFERENCE_SPIN_ONE_RATIOS",
    "SWEEP_HEADER",
    "SweepCase",
    "sweep_cases",
    "run_sweep",
    "sweep_row",
]
