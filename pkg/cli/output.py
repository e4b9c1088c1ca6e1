"""
Output Formatting
JSON, CSV and human-readable tables. Floats carry 9 significant digits so
identical inputs give byte-identical output.
"""

import json
from typing import Any, Dict, List, Sequence

from svetlichny_core.storage import csv_text


SIGNIFICANT_DIGITS = 9


def fmt(value: float) -> str:
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def rounded(value: Any) -> Any:
    """Round floats (recursively) to 9 significant digits; other values pass through."""
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        return float(fmt(value))
    if isinstance(value, dict):
        return {k: rounded(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [rounded(v) for v in value]
    return value


def to_json(data: Any) -> str:
    return json.dumps(rounded(data), ensure_ascii=False)


def _csv_cell(value: Any) -> Any:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return fmt(value)
    return value


def csv_cells(rows: Sequence[Sequence[Any]]) -> List[List[Any]]:
    return [[_csv_cell(v) for v in row] for row in rows]


def to_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    return csv_text(header, csv_cells(rows))


def banner(title: str) -> None:
    print("=" * 60)
    print(title)
    print("=" * 60)


def print_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    cells: List[List[str]] = [[str(h) for h in header]]
    for row in rows:
        cells.append([
            fmt(v) if isinstance(v, float) and not isinstance(v, bool) else str(v)
            for v in row
        ])
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for index, row in enumerate(cells):
        print("  ".join(c.rjust(w) for c, w in zip(row, widths)))
        if index == 0:
            print("-" * 60)


def print_mapping(record: Dict[str, Any]) -> None:
    width = max(len(k) for k in record)
    for key, value in record.items():
        shown = fmt(value) if isinstance(value, float) else value
        print(f"{key + ':':{width + 1}s} {shown}")
