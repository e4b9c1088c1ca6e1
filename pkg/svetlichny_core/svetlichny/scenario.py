"""
Scenario
N observers, each with two phase tables (setting 0 and setting 1), all for
the same spin.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from ..errors import (
    InvalidPartyCount,
    ScenarioParseError,
    ShapeMismatch,
    SpinMismatch,
    ValidationError,
)
from ..spin import MeasurementOperator, PhaseTable, SpinJ, json_int, make_operator

MIN_PARTIES = 3


@dataclass(frozen=True)
class Scenario:
    j: SpinJ
    settings: Tuple[Tuple[PhaseTable, PhaseTable], ...]

    def __post_init__(self):
        settings = tuple(tuple(pair) for pair in self.settings)
        object.__setattr__(self, 'settings', settings)
        if len(settings) < MIN_PARTIES:
            raise InvalidPartyCount(f"n must be ≥ {MIN_PARTIES}, got {len(settings)}")
        for party, pair in enumerate(settings, start=1):
            if len(pair) != 2:
                raise ShapeMismatch(f"party {party}: expected 2 settings, got {len(pair)}")
            for x, table in enumerate(pair):
                if table.j != self.j:
                    raise SpinMismatch(
                        f"party {party}, setting {x}: table spin {table.j} != scenario spin {self.j}"
                    )

    @property
    def n_parties(self) -> int:
        return len(self.settings)

    def table(self, party: int, x: int) -> PhaseTable:
        """Phase table of party (0-based) for setting x."""
        return self.settings[party][x]

    def is_rational(self) -> bool:
        return all(t.is_rational() for pair in self.settings for t in pair)

    def phase_array(self) -> np.ndarray:
        """Radians with shape (N, 2, d)."""
        return np.array(
            [[pair[0].radians(), pair[1].radians()] for pair in self.settings],
            dtype=float,
        )

    def operators(self) -> List[Tuple[MeasurementOperator, MeasurementOperator]]:
        return [(make_operator(a), make_operator(b)) for a, b in self.settings]

    def negated(self) -> "Scenario":
        """Every phase negated."""
        return Scenario(self.j, tuple((a.negated(), b.negated()) for a, b in self.settings))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n_parties,
            'twice_j': self.j.twice_j,
            'parties': [
                {'setting0': a.to_dict(), 'setting1': b.to_dict()}
                for a, b in self.settings
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Scenario":
        """
        Parse the scenario JSON form.

        Raises:
            ScenarioParseError: naming the party and setting of the offending
                table (and m, when a phase is at fault)
        """
        try:
            n = json_int(data['n'], 'n')
            j = SpinJ(json_int(data['twice_j'], 'twice_j'))
            parties: Sequence[Dict[str, Any]] = data['parties']
            if not isinstance(parties, list):
                raise ScenarioParseError(f"parties must be a list, got {type(parties).__name__}")
        except (KeyError, TypeError, ValueError) as e:
            raise ScenarioParseError(f"malformed scenario header: {e}") from e
        except ValidationError as e:
            raise ScenarioParseError(f"scenario header: {e}") from e

        if len(parties) != n:
            raise ScenarioParseError(f"scenario declares n={n} but lists {len(parties)} parties")

        settings = []
        for party, entry in enumerate(parties, start=1):
            pair = []
            for x in (0, 1):
                try:
                    table = PhaseTable.from_dict(entry[f'setting{x}'])
                except (KeyError, TypeError, ValueError) as e:
                    raise ScenarioParseError(
                        f"party {party}, setting {x}: malformed phase table ({e})"
                    ) from e
                except ValidationError as e:
                    raise ScenarioParseError(f"party {party}, setting {x}: {e}") from e
                if table.j != j:
                    raise ScenarioParseError(
                        f"party {party}, setting {x}: table spin {table.j} != scenario spin {j}"
                    )
                pair.append(table)
            settings.append(tuple(pair))

        try:
            return cls(j, tuple(settings))
        except ValidationError as e:
            raise ScenarioParseError(str(e)) from e
