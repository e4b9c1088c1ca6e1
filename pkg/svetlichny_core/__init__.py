"""
Svetlichny Core
Spin-j measurement operators, N-party GHZ states, the Svetlichny operator
and the optimal phase schemes for fermionic and bosonic spins.
"""

from .types import (
    Command,
    OutputFormat,
    SettingsTuple,
    SvetlichnyReport,
    SearchProgress,
    CheckResult,
    RunConfig,
)
from .spin import SpinJ, MagneticIndex, RationalAngle, PhaseTable, MeasurementOperator
from .states import StateVector
from .svetlichny import Scenario
from .schemes import SignAssignment, SearchResult

__version__ = "0.1.0"
__all__ = [
    "Command",
    "OutputFormat",
    "SettingsTuple",
    "SvetlichnyReport",
    "SearchProgress",
    "CheckResult",
    "RunConfig",
    "SpinJ",
    "MagneticIndex",
    "RationalAngle",
    "PhaseTable",
    "MeasurementOperator",
    "StateVector",
    "Scenario",
    "SignAssignment",
    "SearchResult",
]
