"""
Svetlichny Core Type Definitions
Enums and dataclasses shared by the evaluator, the schemes and the CLI.
"""

import itertools
from enum import Enum
from dataclasses import dataclass, field
from typing import Optional, Dict, Any, List, Iterator, Tuple

from .errors import ValidationError
from .spin import SpinJ


class Command(Enum):
    """CLI command"""
    BOUNDS = "bounds"
    SCHEME = "scheme"
    EVALUATE = "evaluate"
    SEARCH = "search"
    SWEEP = "sweep"
    VERIFY = "verify"


class OutputFormat(Enum):
    """Report output format"""
    JSON = "json"
    CSV = "csv"
    TABLE = "table"


@dataclass(frozen=True)
class SettingsTuple:
    """Measurement choices (x_1, ..., x_N), each 0 or 1"""
    bits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'bits', tuple(int(b) for b in self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise ValidationError(f"settings must be 0 or 1, got {self.bits}")

    def __len__(self) -> int:
        return len(self.bits)

    @property
    def k(self) -> int:
        """Number of settings equal to 1."""
        return sum(self.bits)

    @property
    def residue(self) -> int:
        """l = k mod 4"""
        return self.k % 4

    @property
    def q(self) -> int:
        """q = (k - l) / 4"""
        return self.k // 4

    @classmethod
    def enumerate(cls, n: int) -> Iterator["SettingsTuple"]:
        """All 2^n tuples in lexicographic order (party 1 most significant)."""
        for bits in itertools.product((0, 1), repeat=n):
            yield cls(bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass
class SvetlichnyReport:
    """Expectation value of the Svetlichny operator with its bounds"""
    n: int
    twice_j: int
    value: float
    lhv_bound: float
    quantum_bound: float
    fixed_sign_bound: float
    ratio: float
    violated: bool
    oracle_value: Optional[float] = None
    difference: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            'n': self.n,
            'twice_j': self.twice_j,
            'value': self.value,
            'lhv_bound': self.lhv_bound,
            'quantum_bound': self.quantum_bound,
            'fixed_sign_bound': self.fixed_sign_bound,
            'ratio': self.ratio,
            'violated': self.violated,
        }
        if self.oracle_value is not None:
            record['oracle_value'] = self.oracle_value
            record['difference'] = self.difference
        return record


@dataclass
class SearchProgress:
    """Progress tracking for exhaustive sign searches"""
    total: int = 0
    evaluated: int = 0
    blocks_total: int = 0
    blocks_done: int = 0
    is_running: bool = False

    @property
    def percent(self) -> float:
        if self.total == 0:
            return 0.0
        return (self.evaluated / self.total) * 100


@dataclass
class CheckResult:
    """Outcome of one reproduction check"""
    name: str
    passed: bool
    detail: str = ""


@dataclass
class RunConfig:
    """Parsed CLI invocation"""
    command: Command
    n_values: List[int] = field(default_factory=list)
    spins: List[SpinJ] = field(default_factory=list)
    dimension_guard: int = 2 ** 21
    search_guard: int = 14
    output_format: OutputFormat = OutputFormat.TABLE
    oracle: bool = False
    scenario_file: Optional[str] = None
    output_file: Optional[str] = None
    signs: Optional[str] = None
    auto_signs: bool = False
    threads: int = 0
    quick: bool = False
    fixtures_dir: Optional[str] = None
    max_reported_assignments: int = 64
    max_parties: int = 16
    results_dir: str = "./results"

    @property
    def n(self) -> Optional[int]:
        return self.n_values[0] if self.n_values else None

    @property
    def spin(self) -> Optional[SpinJ]:
        return self.spins[0] if self.spins else None
