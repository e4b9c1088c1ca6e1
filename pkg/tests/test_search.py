import math

import pytest

from svetlichny_core.errors import InvalidPartyCount, SearchGuardExceeded, ValidationError
from svetlichny_core.schemes import (
    REFERENCE_MAXIMA,
    SignAssignment,
    SignSearch,
    f_function,
    search_zero_signs,
    verify_fixed_sign_bound,
)


@pytest.mark.parametrize("n", range(3, 9))
def test_search_maxima(n):
    result = search_zero_signs(n)
    assert result.best_value == REFERENCE_MAXIMA[n]
    assert result.evaluated_count == 4 ** n
    assert result.best_value <= result.bound + 1e-12


@pytest.mark.parametrize("n", range(3, 11))
def test_bound_attained_only_for_odd_n(n):
    result = search_zero_signs(n, max_reported=1, threads=2)
    bound = math.sqrt(2 ** (n + 1))
    if n % 2:
        assert result.best_value == bound
    else:
        assert result.best_value < bound


def test_search_ties():
    # arg f = pi/4 for odd n; arg f in {0, pi/2} for even n
    assert search_zero_signs(3).tie_count == 16
    assert search_zero_signs(4).tie_count == 128
    assert search_zero_signs(5).tie_count == 256


def test_search_reports_lexicographic_maximizers():
    result = search_zero_signs(4, max_reported=5)
    assert str(result.best_assignments[0]) == "++,++,++,+-"
    indices = [a.index for a in result.best_assignments]
    assert len(indices) == 5 and indices == sorted(indices)
    assert all(a.tuple_sum() == 4 for a in result.best_assignments)
    assert str(search_zero_signs(3).best_assignments[0]) == "++,++,+-"


def test_search_independent_of_threads():
    serial = search_zero_signs(9, threads=1)
    parallel = search_zero_signs(9, threads=4)
    assert serial.to_dict() == parallel.to_dict()
    assert serial.best_value == 32
    assert serial.tie_count == 4 ** 8
    assert len(serial.best_assignments) == 64


def test_search_guard():
    with pytest.raises(SearchGuardExceeded) as info:
        search_zero_signs(15)
    assert info.value.n == 15
    assert search_zero_signs(5, search_guard=5).best_value == 8
    with pytest.raises(InvalidPartyCount):
        search_zero_signs(2)


@pytest.mark.parametrize("max_reported", [0, -3])
def test_search_requires_reported_assignment(max_reported):
    with pytest.raises(ValidationError, match="max_reported must be ≥ 1"):
        SignSearch(3, max_reported=max_reported)


def test_search_json_form():
    data = search_zero_signs(3, max_reported=2).to_dict()
    assert list(data) == ['n', 'best_value', 'bound', 'assignments', 'evaluated', 'tie_count']
    assert data['best_value'] == 4 and data['bound'] == 4.0
    assert data['assignments'][0] == [[1, 1], [1, 1], [1, -1]]
    assert data['evaluated'] == 64


def test_search_progress_and_logging(logger):
    search = SignSearch(9, threads=2, logger=logger)
    search.run()
    progress = search.progress
    assert not progress.is_running
    assert progress.blocks_done == progress.blocks_total == 4
    assert progress.evaluated == progress.total == 4 ** 9
    assert progress.percent == 100.0
    assert logger.get_recent()[-1]['source'] == 'search'


def test_f_function_examples():
    assert f_function(SignAssignment.all_plus(3)) == complex(-2, 2)
    assert f_function(SignAssignment.parse("++,++,+-")) == complex(2, 2)


def test_f_function_identities(rng):
    for _ in range(200):
        n = int(rng.integers(3, 10))
        signs = SignAssignment.from_index(n, int(rng.integers(0, 4 ** n)))
        f = f_function(signs)
        assert f.real + f.imag == signs.tuple_sum()
        assert f.real ** 2 + f.imag ** 2 == 2 ** n
        assert f.real + f.imag <= math.sqrt(2 ** (n + 1)) + 1e-12


@pytest.mark.parametrize("n", range(3, 9))
def test_fixed_sign_bound(n):
    verification = verify_fixed_sign_bound(n, threads=2)
    assert verification.passed
    assert verification.evaluated == 4 ** n
    assert verification.max_value == REFERENCE_MAXIMA[n]


def test_fixed_sign_bound_attaining_count():
    assert verify_fixed_sign_bound(3).attaining_count == 16
