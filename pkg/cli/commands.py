"""
CLI Commands
One function per subcommand. Each takes a RunConfig and an optional logger,
prints in the requested format and returns the process exit code.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from svetlichny_core.errors import (
    InvalidPartyCount,
    MissingSearchValue,
    VerificationFailed,
    ZeroPhaseForbidden,
)
from svetlichny_core.logging import LogStreamer
from svetlichny_core.schemes import (
    SWEEP_HEADER,
    BosonScheme,
    FermionScheme,
    SignAssignment,
    run_sweep,
    search_zero_signs,
    sweep_cases,
    sweep_row,
)
from svetlichny_core.storage import load_scenario, save_scenario, write_csv
from svetlichny_core.svetlichny import MIN_PARTIES, bounds, evaluate
from svetlichny_core.types import OutputFormat, RunConfig, SvetlichnyReport

from .output import banner, csv_cells, print_mapping, print_table, to_csv, to_json
from .verify import Verifier


BOUNDS_HEADER = ["n", "lhv_bound", "quantum_bound", "fixed_sign_bound"]


def _check_max_parties(n: int, config: RunConfig) -> None:
    if n < MIN_PARTIES:
        raise InvalidPartyCount(f"n must be ≥ {MIN_PARTIES}, got {n}")
    if n > config.max_parties:
        raise InvalidPartyCount(f"n must be ≤ {config.max_parties}, got {n}")


def _emit_record(config: RunConfig, title: str, record: Dict[str, Any]) -> None:
    if config.output_format == OutputFormat.JSON:
        print(to_json(record))
    elif config.output_format == OutputFormat.CSV:
        print(to_csv(list(record), [list(record.values())]), end='')
    else:
        banner(title)
        print_mapping(record)


def _emit_rows(config: RunConfig, title: str, header: Sequence[str], rows: List[List[Any]]) -> None:
    if config.output_format == OutputFormat.JSON:
        print(to_json([dict(zip(header, row)) for row in rows]))
    elif config.output_format == OutputFormat.CSV:
        print(to_csv(header, rows), end='')
    else:
        banner(title)
        print_table(header, rows)


def cmd_bounds(config: RunConfig, logger: Optional[LogStreamer] = None) -> int:
    rows = []
    for n in config.n_values:
        _check_max_parties(n, config)
        lhv, quantum, fixed_sign = bounds(n)
        rows.append([n, lhv, quantum, fixed_sign])
    _emit_rows(config, "Svetlichny Bounds", BOUNDS_HEADER, rows)
    return 0


def _zero_signs(config: RunConfig, n: int, logger: Optional[LogStreamer]) -> SignAssignment:
    if config.signs:
        signs = SignAssignment.parse(config.signs)
        if signs.n_parties != n:
            raise InvalidPartyCount(f"--signs lists {signs.n_parties} parties, n={n}")
        return signs
    if config.auto_signs:
        result = search_zero_signs(
            n, config.search_guard, config.threads, max_reported=1, logger=logger
        )
        return result.best_assignments[0]
    raise MissingSearchValue("integer spin needs --signs or --auto-signs")


def cmd_scheme(config: RunConfig, logger: Optional[LogStreamer] = None) -> int:
    n, j = config.n, config.spin
    _check_max_parties(n, config)

    if j.is_half_integer():
        if config.signs or config.auto_signs:
            raise ZeroPhaseForbidden(
                f"j={j} has no m=0 phase; --signs and --auto-signs need integer spin"
            )
        scheme = FermionScheme(n, j, logger)
    else:
        scheme = BosonScheme(n, j, _zero_signs(config, n, logger), logger)
    scenario, report = scheme.run(oracle=config.oracle, dimension_guard=config.dimension_guard)

    path = Path(config.output_file) if config.output_file else (
        Path(config.results_dir) / f"scenario_n{n}_j{j.twice_j}.json"
    )
    save_scenario(path, scenario)
    if logger:
        logger.info(f"scenario written to {path}", source='cli')

    record = report.to_dict()
    if config.output_format == OutputFormat.TABLE:
        _emit_record(config, f"{scheme.name.title()} Scheme (n={n}, j={j})", record)
        print(f"Scenario: {path}")
    else:
        _emit_record(config, "", record)
    return 0


def cmd_evaluate(config: RunConfig, logger: Optional[LogStreamer] = None) -> int:
    scenario = load_scenario(config.scenario_file)
    _check_max_parties(scenario.n_parties, config)
    report = evaluate(scenario, oracle=config.oracle, dimension_guard=config.dimension_guard)
    if logger:
        logger.info(
            f"{config.scenario_file}: <S_N> = {report.value:.9g}",
            source='cli'
        )
    _emit_record(config, f"Evaluation of {config.scenario_file}", report.to_dict())
    return 0


def cmd_search(config: RunConfig, logger: Optional[LogStreamer] = None) -> int:
    result = search_zero_signs(
        config.n,
        config.search_guard,
        config.threads,
        config.max_reported_assignments,
        logger,
    )
    if config.output_format == OutputFormat.JSON:
        print(to_json(result.to_dict()))
        return 0

    record = {
        'n': result.n,
        'best_value': result.best_value,
        'bound': result.bound,
        'evaluated': result.evaluated_count,
        'tie_count': result.tie_count,
        'best_assignment': str(result.best_assignments[0]),
    }
    _emit_record(config, f"m=0 Sign Search (n={result.n})", record)
    return 0


def cmd_sweep(config: RunConfig, logger: Optional[LogStreamer] = None) -> int:
    for n in config.n_values:
        _check_max_parties(n, config)
    reports: List[SvetlichnyReport] = run_sweep(
        sweep_cases(config.n_values, config.spins),
        threads=config.threads,
        search_guard=config.search_guard,
        logger=logger,
    )
    rows = [sweep_row(r) for r in reports]

    if config.output_file:
        write_csv(config.output_file, SWEEP_HEADER, csv_cells(rows))
        if logger:
            logger.info(f"sweep written to {config.output_file}", source='sweep')
    _emit_rows(config, "Scheme Sweep", SWEEP_HEADER, rows)
    return 0


def cmd_verify(config: RunConfig, logger: Optional[LogStreamer] = None) -> int:
    verifier = Verifier(
        quick=config.quick,
        fixtures_dir=config.fixtures_dir,
        threads=config.threads,
        dimension_guard=config.dimension_guard,
        logger=logger,
    )
    results = verifier.run()
    rows = [[r.name, "PASS" if r.passed else "FAIL", r.detail] for r in results]
    _emit_rows(config, "Reproduction Checks", ["check", "status", "detail"], rows)

    failed = [r.name for r in results if not r.passed]
    if failed:
        raise VerificationFailed(f"failing checks: {', '.join(failed)}")
    return 0


COMMANDS = {
    'bounds': cmd_bounds,
    'scheme': cmd_scheme,
    'evaluate': cmd_evaluate,
    'search': cmd_search,
    'sweep': cmd_sweep,
    'verify': cmd_verify,
}
