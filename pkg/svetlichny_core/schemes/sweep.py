"""
(N, j) Sweeps
Evaluates the fermion or boson scheme for every requested (n, j) pair.
Integer spins use the best m=0 signs from the exhaustive search.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, NamedTuple, Optional, Sequence

from ..logging import LogStreamer
from ..spin import SpinJ
from ..types import SvetlichnyReport
from .boson import BosonScheme
from .fermion import FermionScheme
from .search import DEFAULT_SEARCH_GUARD, SearchResult, search_zero_signs


SWEEP_HEADER = ["n", "twice_j", "value", "lhv_bound", "ratio", "violated"]


class SweepCase(NamedTuple):
    n: int
    j: SpinJ


def sweep_cases(n_values: Sequence[int], spins: Sequence[SpinJ]) -> List[SweepCase]:
    """Cartesian product, n outermost."""
    return [SweepCase(n, j) for n in n_values for j in spins]


def run_sweep(
    cases: Sequence[SweepCase],
    threads: int = 1,
    search_guard: int = DEFAULT_SEARCH_GUARD,
    logger: Optional[LogStreamer] = None
) -> List[SvetlichnyReport]:
    """Reports in input order, independent of the worker count."""
    searches: Dict[int, SearchResult] = {}
    for n in sorted({c.n for c in cases if c.j.is_integer()}):
        searches[n] = search_zero_signs(n, search_guard, threads, max_reported=1, logger=logger)

    def evaluate_case(case: SweepCase) -> SvetlichnyReport:
        if case.j.is_half_integer():
            scheme = FermionScheme(case.n, case.j, logger)
        else:
            best_signs = searches[case.n].best_assignments[0]
            scheme = BosonScheme(case.n, case.j, best_signs, logger)
        _, report = scheme.run()
        return report

    if logger:
        logger.info(f"sweeping {len(cases)} cases on {max(1, threads)} threads", source='sweep')
    if threads <= 1:
        return [evaluate_case(c) for c in cases]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(evaluate_case, cases))


def sweep_row(report: SvetlichnyReport) -> List[Any]:
    return [report.n, report.twice_j, report.value, report.lhv_bound, report.ratio, report.violated]
