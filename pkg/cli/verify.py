"""
Reproduction Checks
Every golden number in one run: scheme maxima, sign-search values, the
fixed-sign bound, oracle agreement, operator properties, the large-j limit,
phase conditions and the shipped scenario fixtures.
"""

import math
from pathlib import Path
from typing import Callable, List, Optional, Tuple

import numpy as np

from svetlichny_core.errors import SvetlichnyError
from svetlichny_core.logging import LogStreamer
from svetlichny_core.schemes import (
    REFERENCE_MAXIMA,
    REFERENCE_SPIN_ONE_RATIOS,
    REFERENCE_ZERO_SIGNS,
    BosonScheme,
    FermionScheme,
    fermion_scheme,
    predicted_max,
    search_zero_signs,
    verify_condition,
    verify_fixed_sign_bound,
)
from svetlichny_core.spin import (
    SpinJ,
    check_hermitian,
    check_involution,
    eigenvalue_set,
    make_operator,
)
from svetlichny_core.storage import list_fixtures, read_scenario_json
from svetlichny_core.svetlichny import (
    ORACLE_CASES,
    Scenario,
    evaluate,
    expectation_analytic,
    expectation_oracle,
    random_phase_table,
    random_scenario,
)
from svetlichny_core.types import CheckResult


DEFAULT_FIXTURES_DIR = Path(__file__).resolve().parent.parent / "svetlichny_core" / "fixtures"
QUICK_ORACLE_DIMENSION = 2 ** 12
VALUE_TOLERANCE = 1e-9
RATIO_TOLERANCE = 1e-5
SEED = 20240601

Check = Callable[[], Tuple[bool, str]]


class Verifier:
    """Runs the reproduction checks and collects CheckResults."""

    def __init__(
        self,
        quick: bool = False,
        fixtures_dir: Optional[str] = None,
        threads: int = 1,
        dimension_guard: int = 2 ** 21,
        logger: Optional[LogStreamer] = None
    ):
        self.quick = quick
        self.fixtures_dir = Path(fixtures_dir) if fixtures_dir else DEFAULT_FIXTURES_DIR
        self.threads = threads
        self.dimension_guard = dimension_guard
        self.logger = logger

    def checks(self) -> List[Tuple[str, Check]]:
        checks: List[Tuple[str, Check]] = [
            ("fermion_maximal_violation", self.check_fermion_maximum),
            ("three_party_boson_value", self.check_three_party_boson),
            ("sign_search_maxima", self.check_sign_search),
            ("fixed_sign_bound", self.check_fixed_sign_bound),
            ("oracle_equivalence", self.check_oracle_equivalence),
            ("operator_properties", self.check_operator_properties),
            ("large_spin_limit", self.check_large_spin_limit),
            ("phase_conditions", self.check_phase_conditions),
        ]
        for path in list_fixtures(self.fixtures_dir):
            checks.append((f"fixture:{path.stem}", self._fixture_check(path)))
        return checks

    def run(self) -> List[CheckResult]:
        results = []
        for name, check in self.checks():
            try:
                passed, detail = check()
            except SvetlichnyError as e:
                passed, detail = False, f"{type(e).__name__}: {e}"
            result = CheckResult(name, passed, detail)
            self._log(
                f"{name}: {'PASS' if passed else 'FAIL'} {detail}",
                level='success' if passed else 'error'
            )
            results.append(result)
        return results

    # Checks

    def check_fermion_maximum(self) -> Tuple[bool, str]:
        for n in range(3, 9):
            for twice_j in (1, 3, 5):
                _, report = FermionScheme(n, SpinJ(twice_j)).run()
                expected = 2 ** (n - 1) * math.sqrt(2)
                if abs(report.value - expected) > VALUE_TOLERANCE:
                    return False, f"n={n}, twice_j={twice_j}: {report.value} != {expected}"
        return True, "2^(n-1) sqrt 2 for n=3..8, twice_j in {1,3,5}"

    def check_three_party_boson(self) -> Tuple[bool, str]:
        _, report = BosonScheme(3, SpinJ(2), REFERENCE_ZERO_SIGNS[3]).run()
        expected = 2 * (2 + 4 * math.sqrt(2)) / 3
        passed = abs(report.value - expected) <= VALUE_TOLERANCE and report.value > 4
        return passed, f"value {report.value:.9g}, expected {expected:.9g}"

    def check_sign_search(self) -> Tuple[bool, str]:
        spin_one = SpinJ(2)
        for n in range(4, 9):
            result = search_zero_signs(n, threads=self.threads, max_reported=1)
            if result.best_value != REFERENCE_MAXIMA[n]:
                return False, f"n={n}: maximum {result.best_value} != {REFERENCE_MAXIMA[n]}"
            if REFERENCE_ZERO_SIGNS[n].tuple_sum() != result.best_value:
                return False, f"n={n}: reference signs do not attain {result.best_value}"
            ratio = predicted_max(n, spin_one, result.best_value) / 2 ** (n - 1)
            if abs(ratio - REFERENCE_SPIN_ONE_RATIOS[n]) > RATIO_TOLERANCE:
                return False, f"n={n}: ratio {ratio:.9g} != {REFERENCE_SPIN_ONE_RATIOS[n]}"
            if (ratio > 1) != (n <= 7):
                return False, f"n={n}: violation flag wrong for ratio {ratio:.9g}"
        return True, "maxima 4, 8, 8, 16, 16 for n=4..8"

    def check_fixed_sign_bound(self) -> Tuple[bool, str]:
        for n in range(3, 9):
            verification = verify_fixed_sign_bound(n, threads=self.threads)
            if not verification.passed:
                return False, f"n={n}: {verification}"
        return True, "all 2^(2n) assignments for n=3..8"

    def check_oracle_equivalence(self, count: int = 200) -> Tuple[bool, str]:
        rng = np.random.default_rng(SEED)
        worst = 0.0
        checked = 0
        for index in range(count):
            n, twice_j = ORACLE_CASES[index % len(ORACLE_CASES)]
            j = SpinJ(twice_j)
            scenario = random_scenario(rng, n, j)
            if self.quick and j.dimension ** n > QUICK_ORACLE_DIMENSION:
                continue
            difference = abs(
                expectation_analytic(scenario)
                - expectation_oracle(scenario, self.dimension_guard)
            )
            worst = max(worst, difference)
            checked += 1
            if difference > VALUE_TOLERANCE:
                return False, f"n={n}, twice_j={twice_j}: |analytic - oracle| = {difference:.3e}"
        return True, f"{checked} scenarios, max difference {worst:.3e}"

    def check_operator_properties(self, count: int = 1000) -> Tuple[bool, str]:
        rng = np.random.default_rng(SEED + 1)
        for _ in range(count):
            j = SpinJ(int(rng.integers(1, 9)))
            op = make_operator(random_phase_table(rng, j))
            if not (check_hermitian(op) and check_involution(op)):
                return False, f"j={j}: operator is not a Hermitian involution"
            eigenvalue_set(op)
        return True, f"{count} random tables, j up to 4"

    def check_large_spin_limit(self) -> Tuple[bool, str]:
        def ratio(j: int) -> float:
            return (2 + 4 * math.sqrt(2) * j) / ((2 * j + 1) * 2 * math.sqrt(2))

        ratios = [ratio(j) for j in range(1, 51)]
        if any(b <= a for a, b in zip(ratios, ratios[1:])):
            return False, "ratio not strictly increasing for j=1..50"
        if ratio(500) <= 0.999:
            return False, f"ratio at j=500 is {ratio(500):.9g}"
        return True, f"ratio(50) = {ratios[-1]:.9g}, ratio(500) = {ratio(500):.9g}"

    def check_phase_conditions(self) -> Tuple[bool, str]:
        half = SpinJ(1)
        for n in range(3, 11):
            scenario = fermion_scheme(n, half)
            if not all(verify_condition(scenario, m) for m in half.positive_indices()):
                return False, f"n={n}: condition fails"
        return True, "n=3..10, all tuples"

    def _fixture_check(self, path: Path) -> Check:
        def check() -> Tuple[bool, str]:
            data = read_scenario_json(path)
            if 'expected' not in data:
                return False, "fixture has no expected value"
            scenario = Scenario.from_dict(data)
            oracle = not (
                self.quick
                and scenario.j.dimension ** scenario.n_parties > QUICK_ORACLE_DIMENSION
            )
            report = evaluate(scenario, oracle=oracle, dimension_guard=self.dimension_guard)
            expected = float(data['expected'])
            if abs(report.value - expected) > VALUE_TOLERANCE:
                return False, f"value {report.value:.12g} != expected {expected:.12g}"
            if report.difference is not None and report.difference > VALUE_TOLERANCE:
                return False, f"oracle differs by {report.difference:.3e}"
            return True, f"value {report.value:.9g}"
        return check

    def _log(self, message: str, level: str = 'info') -> None:
        """Log a message using the configured logger"""
        if self.logger:
            self.logger.write(message, level=level, source='verify')
