"""
Result Files
Scenario JSON and CSV output with atomic writes.
"""

import csv
import io
import json
import shutil
import threading
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

from ..errors import ScenarioParseError
from ..svetlichny import Scenario


_write_lock = threading.Lock()

PathLike = Union[str, Path]


def atomic_write_text(path: PathLike, text: str) -> Path:
    """Write with backup of the previous file, temp file and atomic rename."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)

    with _write_lock:
        # Create backup if file exists
        if target.exists():
            backup_file = target.with_suffix(target.suffix + '.backup')
            shutil.copy2(target, backup_file)

        # Write to temp file first
        temp_file = target.with_suffix(target.suffix + '.tmp')
        try:
            with open(temp_file, 'w', encoding='utf-8', newline='') as f:
                f.write(text)

            # Atomic rename
            temp_file.replace(target)
        except Exception:
            if temp_file.exists():
                temp_file.unlink()
            raise
    return target


def atomic_write_json(path: PathLike, data: Any) -> Path:
    return atomic_write_text(path, json.dumps(data, ensure_ascii=False, indent=2) + '\n')


def csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """RFC-4180 CSV (CRLF line endings, minimal quoting)."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\r\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def write_csv(path: PathLike, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> Path:
    return atomic_write_text(path, csv_text(header, rows))


def save_scenario(path: PathLike, scenario: Scenario) -> Path:
    return atomic_write_json(path, scenario.to_dict())


def read_scenario_json(path: PathLike) -> Dict[str, Any]:
    """Raw scenario JSON; extra keys such as 'expected' are kept."""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except FileNotFoundError as e:
        raise ScenarioParseError(f"scenario file not found: {path}") from e
    except (ValueError, OSError) as e:
        raise ScenarioParseError(f"cannot read scenario file {path}: {e}") from e
    if not isinstance(data, dict):
        raise ScenarioParseError(f"scenario file {path} must hold a JSON object")
    return data


def load_scenario(path: PathLike) -> Scenario:
    return Scenario.from_dict(read_scenario_json(path))


def list_fixtures(directory: PathLike) -> List[Path]:
    """Scenario fixtures (*.json) in name order."""
    return sorted(Path(directory).glob('*.json'))
