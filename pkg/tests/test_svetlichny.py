import math
from fractions import Fraction

import numpy as np
import pytest

from svetlichny_core.errors import (
    DimensionGuardExceeded,
    ImaginaryResidue,
    InvalidPartyCount,
    InvariantViolation,
    ScenarioParseError,
    ShapeMismatch,
    SpinMismatch,
    ValidationError,
)
from svetlichny_core.schemes import REFERENCE_ZERO_SIGNS, boson_scheme, fermion_scheme
from svetlichny_core.spin import RationalAngle, SpinJ, ZERO, make_phase_table
from svetlichny_core.svetlichny import (
    ORACLE_CASES,
    Scenario,
    bounds,
    correlator,
    evaluate,
    expectation_analytic,
    expectation_oracle,
    make_report,
    random_scenario,
    sign_v,
    sign_vector,
    tuple_matrix,
)
from svetlichny_core.types import SettingsTuple


FOUR_ROOT_TWO = 4 * math.sqrt(2)
THREE_PARTY_SPIN_ONE = 2 * (2 + 4 * math.sqrt(2)) / 3


def zero_scenario(n, j):
    zero = None if j.is_half_integer() else ZERO
    table = make_phase_table(j, [ZERO] * j.positive_count, zero)
    return Scenario(j, tuple((table, table) for _ in range(n)))


# Sign function and tuples

@pytest.mark.parametrize(["k", "expected"], ((0, 1), (1, 1), (2, -1), (3, -1), (4, 1)))
def test_sign_v(k, expected):
    assert sign_v(k) == expected


def test_sign_v_matches_exponent_form():
    for k in range(65):
        assert sign_v(k) == (-1) ** (k * (k - 1) // 2)


def test_sign_v_rejects_negative():
    with pytest.raises(ValueError):
        sign_v(-1)


def test_tuple_enumeration():
    tuples = list(SettingsTuple.enumerate(4))
    assert len(tuples) == len({t.bits for t in tuples}) == 16
    assert tuples[0].bits == (0, 0, 0, 0) and tuples[1].bits == (0, 0, 0, 1)
    np.testing.assert_array_equal(tuple_matrix(4), [t.bits for t in tuples])
    assert list(sign_vector(4)) == [sign_v(t.k) for t in tuples]


def test_settings_tuple_derived_values():
    settings = SettingsTuple((1, 1, 1, 1, 1, 0))
    assert (settings.k, settings.residue, settings.q) == (5, 1, 1)
    assert str(settings) == "111110"
    with pytest.raises(ValidationError):
        SettingsTuple((0, 2))


# Scenario

def test_scenario_requires_three_parties(half):
    table = make_phase_table(half, [ZERO])
    with pytest.raises(InvalidPartyCount, match="n must be ≥ 3"):
        Scenario(half, ((table, table),) * 2)


def test_scenario_requires_shared_spin(half, spin_one):
    a = make_phase_table(half, [ZERO])
    b = make_phase_table(spin_one, [ZERO], ZERO)
    with pytest.raises(SpinMismatch):
        Scenario(half, ((a, a), (a, a), (a, b)))


def test_scenario_json_form(spin_one):
    scenario = boson_scheme(3, spin_one, REFERENCE_ZERO_SIGNS[3])
    data = scenario.to_dict()
    assert data['n'] == 3 and data['twice_j'] == 2
    assert Scenario.from_dict(data) == scenario


def test_scenario_json_names_broken_table(half):
    data = fermion_scheme(3, half).to_dict()
    data['parties'][1]['setting1']['phases'].append({'twice_m': -1, 'num': 1, 'den': 2})
    with pytest.raises(ScenarioParseError, match=r"party 2, setting 1: m=-1/2"):
        Scenario.from_dict(data)


def test_scenario_json_party_count_checked(half):
    data = fermion_scheme(3, half).to_dict()
    data['n'] = 4
    with pytest.raises(ScenarioParseError):
        Scenario.from_dict(data)


def test_scenario_json_missing_header():
    with pytest.raises(ScenarioParseError):
        Scenario.from_dict({'parties': []})


def test_scenario_json_rejects_fractional_numbers(half):
    data = fermion_scheme(3, half).to_dict()
    data['parties'][0]['setting1']['phases'][0]['num'] = 7.9
    with pytest.raises(ScenarioParseError, match=r"party 1, setting 1: m=1/2: num must be an integer"):
        Scenario.from_dict(data)

    for key, value in (('n', 3.0), ('twice_j', True)):
        data = fermion_scheme(3, half).to_dict()
        data[key] = value
        with pytest.raises(ScenarioParseError, match=f"{key} must be an integer"):
            Scenario.from_dict(data)


def test_scenario_json_parties_must_be_list(half):
    data = fermion_scheme(3, half).to_dict()
    data['parties'] = 5
    with pytest.raises(ScenarioParseError, match="parties must be a list"):
        Scenario.from_dict(data)


# Correlator and expectation

def test_correlator_all_zero_is_one():
    for twice_j in (1, 2, 5):
        scenario = zero_scenario(4, SpinJ(twice_j))
        for settings in SettingsTuple.enumerate(4):
            assert abs(correlator(scenario, settings) - 1) <= 1e-12


def test_correlator_fermion_first_tuple(half):
    value = correlator(fermion_scheme(3, half), SettingsTuple((0, 0, 0)))
    assert abs(value - math.sqrt(2) / 2) <= 1e-12


def test_correlator_length_checked(half):
    with pytest.raises(ShapeMismatch):
        correlator(fermion_scheme(3, half), SettingsTuple((0, 0)))


def test_correlator_matches_single_operator_oracle(spin_one):
    scenario = boson_scheme(3, spin_one, REFERENCE_ZERO_SIGNS[3])
    settings = SettingsTuple((1, 1, 1))
    # m=+-1: phase sum +-(pi/4 + pi/2 + pi/2) = +-5pi/4; m=0: pi
    expected = (2 * math.cos(5 * math.pi / 4) - 1) / 3
    assert abs(correlator(scenario, settings) - expected) <= 1e-12


def test_expectation_fermion_three_party(half):
    assert abs(expectation_analytic(fermion_scheme(3, half)) - FOUR_ROOT_TWO) <= 1e-9


def test_expectation_boson_three_party(spin_one):
    value = expectation_analytic(boson_scheme(3, spin_one, REFERENCE_ZERO_SIGNS[3]))
    assert abs(value - THREE_PARTY_SPIN_ONE) <= 1e-9


def test_expectation_all_zero_phases_vanishes(half):
    assert abs(expectation_analytic(zero_scenario(3, half))) <= 1e-12


def test_broken_antisymmetry_leaves_imaginary_residue(half):
    scenario = zero_scenario(3, half)
    broken = make_phase_table(half, [ZERO])
    object.__setattr__(broken, 'phases', (ZERO, RationalAngle.of(Fraction(1, 4))))
    tampered = Scenario(half, ((broken, scenario.table(0, 1)),) + scenario.settings[1:])
    with pytest.raises(ImaginaryResidue):
        expectation_analytic(tampered)


def test_oracle_fermion_three_party(half):
    assert abs(expectation_oracle(fermion_scheme(3, half)) - FOUR_ROOT_TWO) <= 1e-9


def test_oracle_four_party_spin_one(spin_one):
    value = expectation_oracle(boson_scheme(4, spin_one, REFERENCE_ZERO_SIGNS[4]))
    assert abs(value - 8 * 1.10948) <= 1e-4


def test_oracle_dimension_guard(half):
    with pytest.raises(DimensionGuardExceeded):
        expectation_oracle(fermion_scheme(5, half), dimension_guard=16)


def test_oracle_agrees_with_analytic(rng):
    largest = 0
    for index in range(200):
        n, twice_j = ORACLE_CASES[index % len(ORACLE_CASES)]
        largest = max(largest, SpinJ(twice_j).dimension ** n)
        scenario = random_scenario(rng, n, SpinJ(twice_j))
        analytic = expectation_analytic(scenario)
        assert abs(analytic - expectation_oracle(scenario)) <= 1e-9
        assert abs(analytic) <= 2 ** (n - 1) * math.sqrt(2) + 1e-9
    assert largest == 2 ** 16


def test_negated_scenario_has_same_value(rng):
    for n, twice_j in ((3, 1), (4, 2), (5, 3)):
        scenario = random_scenario(rng, n, SpinJ(twice_j))
        negated = scenario.negated()
        assert abs(expectation_analytic(scenario) - expectation_analytic(negated)) <= 1e-12


# Bounds and reports

def test_bounds():
    assert bounds(3) == pytest.approx((4, FOUR_ROOT_TWO, 4))
    assert bounds(4) == pytest.approx((8, 8 * math.sqrt(2), math.sqrt(32)))
    assert bounds(8) == pytest.approx((128, 128 * math.sqrt(2), math.sqrt(512)))
    with pytest.raises(InvalidPartyCount, match="n must be ≥ 3"):
        bounds(2)


def test_bounds_reject_float_overflow():
    lhv, quantum, fixed_sign = bounds(1022)
    assert math.isfinite(quantum) and fixed_sign == math.sqrt(2 ** 1023)
    with pytest.raises(InvalidPartyCount, match="float bounds"):
        bounds(1023)


def test_report_flags(half):
    report = make_report(3, half, FOUR_ROOT_TWO)
    assert report.violated
    assert report.ratio == pytest.approx(math.sqrt(2))
    assert not make_report(3, half, 4.0).violated
    assert make_report(3, half, -4.5).violated


def test_report_quantum_ceiling(half):
    with pytest.raises(InvariantViolation):
        make_report(3, half, 6.0)


def test_report_field_order(half):
    keys = list(make_report(3, half, 1.0).to_dict())
    assert keys == [
        'n', 'twice_j', 'value', 'lhv_bound', 'quantum_bound',
        'fixed_sign_bound', 'ratio', 'violated',
    ]


def test_evaluate_with_oracle(spin_one):
    report = evaluate(boson_scheme(3, spin_one, REFERENCE_ZERO_SIGNS[3]), oracle=True)
    assert report.value == pytest.approx(THREE_PARTY_SPIN_ONE, abs=1e-9)
    assert report.difference <= 1e-9
    assert list(report.to_dict())[-2:] == ['oracle_value', 'difference']


def test_evaluate_oracle_guard(half):
    with pytest.raises(DimensionGuardExceeded):
        evaluate(fermion_scheme(4, half), oracle=True, dimension_guard=8)
