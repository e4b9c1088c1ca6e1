"""Spin-j phase tables and measurement operators."""
from .angles import Angle, RationalAngle, RealAngle, ZERO, PI
from .space import (
    SpinJ,
    MagneticIndex,
    PhaseTable,
    MeasurementOperator,
    make_phase_table,
    make_phase_table_radians,
    make_operator,
    check_hermitian,
    check_involution,
    eigenvalue_set,
    json_int,
)

__all__ = [
    "Angle",
    "RationalAngle",
    "RealAngle",
    "ZERO",
    "PI",
    "SpinJ",
    "MagneticIndex",
    "PhaseTable",
    "MeasurementOperator",
    "make_phase_table",
    "make_phase_table_radians",
    "make_operator",
    "check_hermitian",
    "check_involution",
    "eigenvalue_set",
    "json_int",
]
