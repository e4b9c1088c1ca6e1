"""
Phase Conditions
Residue classes l = k mod 4 and the exact per-m phase-sum targets that make
every tuple contribute sqrt(2)/2.
"""

from fractions import Fraction
from typing import Dict

from ..errors import InvalidMagneticIndex, NonRationalPhase
from ..spin import MagneticIndex, RationalAngle
from ..svetlichny import Scenario
from ..types import SettingsTuple


CONDITION_TARGETS: Dict[int, RationalAngle] = {
    0: RationalAngle.of(Fraction(-1, 4)),
    1: RationalAngle.of(Fraction(1, 4)),
    2: RationalAngle.of(Fraction(3, 4)),
    3: RationalAngle.of(Fraction(5, 4)),
}


def residue_class(settings: SettingsTuple) -> int:
    """k mod 4"""
    return settings.residue


def verify_condition(scenario: Scenario, m: MagneticIndex) -> bool:
    """
    True iff for every tuple the phase sum at m equals the target of its
    residue class, exactly modulo 2pi.

    Raises:
        InvalidMagneticIndex: if m <= 0 or not an index of the scenario spin
        NonRationalPhase: if any phase at m is float-valued
    """
    if m.twice_m <= 0:
        raise InvalidMagneticIndex(f"condition is checked for m > 0, got m={m}")
    scenario.j.index_of(m)

    phases = []
    for party, pair in enumerate(scenario.settings, start=1):
        row = []
        for x, table in enumerate(pair):
            angle = table.phase(m)
            if not isinstance(angle, RationalAngle):
                raise NonRationalPhase(f"party {party}, setting {x}, m={m}: phase {angle}")
            row.append(angle)
        phases.append(row)

    for settings in SettingsTuple.enumerate(scenario.n_parties):
        total = RationalAngle(0)
        for row, x in zip(phases, settings.bits):
            total = total + row[x]
        if total != CONDITION_TARGETS[residue_class(settings)]:
            return False
    return True
