"""Spin-j GHZ states and tensor-product operator application."""
from .ghz import (
    DEFAULT_DIMENSION_GUARD,
    StateVector,
    check_dimension,
    make_ghz,
    apply_operators,
    apply_setting,
)

__all__ = [
    "DEFAULT_DIMENSION_GUARD",
    "StateVector",
    "check_dimension",
    "make_ghz",
    "apply_operators",
    "apply_setting",
]
