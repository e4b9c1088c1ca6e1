"""Scenario and result files."""
from .files import (
    atomic_write_text,
    atomic_write_json,
    csv_text,
    write_csv,
    save_scenario,
    read_scenario_json,
    load_scenario,
    list_fixtures,
)

__all__ = [
    "atomic_write_text",
    "atomic_write_json",
    "csv_text",
    "write_csv",
    "save_scenario",
    "read_scenario_json",
    "load_scenario",
    "list_fixtures",
]
