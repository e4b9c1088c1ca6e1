"""
Settings Manager
Handles configuration loading from JSON and environment variables.
"""

import json
import os
from typing import Dict, Any
from pathlib import Path

from .defaults import DEFAULT_SETTINGS, ENV_MAPPING, INTEGER_SETTINGS, VALID_OUTPUT_FORMATS


class SettingsManager:
    """
    Manages run settings.
    Priority: environment variables > settings.json > defaults
    """

    def __init__(self, settings_file: str = "config/settings.json"):
        self.settings_file = Path(settings_file)
        self._settings: Dict[str, Any] = {}
        self.load()

    def load(self) -> None:
        """Load settings from file and environment."""
        # Start with defaults
        self._settings = DEFAULT_SETTINGS.copy()

        # Load from JSON file if exists
        if self.settings_file.exists():
            try:
                with open(self.settings_file, 'r', encoding='utf-8') as f:
                    file_settings = json.load(f)
                    self._settings.update(file_settings)
            except (json.JSONDecodeError, IOError):
                pass

        # Override with environment variables (highest priority)
        for env_key, setting_key in ENV_MAPPING.items():
            if env_key in os.environ:
                self._settings[setting_key] = os.environ[env_key]

    def get(self, key: str, default: Any = None) -> Any:
        """Get a setting value."""
        return self._settings.get(key, default)

    def get_int(self, key: str) -> int:
        """Get an integer setting; malformed values fall back to the default."""
        try:
            return int(self._settings.get(key, DEFAULT_SETTINGS[key]))
        except (TypeError, ValueError):
            return int(DEFAULT_SETTINGS[key])

    def set(self, key: str, value: Any) -> None:
        """Set a setting value (in memory only)."""
        self._settings[key] = value

    def save(self) -> bool:
        """Save settings to JSON file."""
        try:
            self.settings_file.parent.mkdir(parents=True, exist_ok=True)
            with open(self.settings_file, 'w', encoding='utf-8') as f:
                saved = {
                    k: (int(v) if k in INTEGER_SETTINGS else v)
                    for k, v in self._settings.items()
                }
                json.dump(saved, f, indent=2, ensure_ascii=False)
            return True
        except (IOError, ValueError):
            return False

    @property
    def dimension_guard(self) -> int:
        """Largest oracle state dimension d^N."""
        return self.get_int("dimension_guard")

    @property
    def search_guard(self) -> int:
        """Largest n accepted by the exhaustive sign search."""
        return self.get_int("search_guard")

    @property
    def max_parties(self) -> int:
        return self.get_int("max_parties")

    @property
    def threads(self) -> int:
        """Worker count; 0 resolves to the available parallelism."""
        threads = self.get_int("threads")
        if threads <= 0:
            return os.cpu_count() or 1
        return threads

    @property
    def max_reported_assignments(self) -> int:
        return self.get_int("max_reported_assignments")

    @property
    def output_format(self) -> str:
        """Get output format (json, csv, table)."""
        fmt = str(self.get("output_format", "table")).lower()
        return fmt if fmt in VALID_OUTPUT_FORMATS else "table"

    @property
    def results_dir(self) -> str:
        """Get results directory path."""
        return self.get("results_dir", "./results")

    @property
    def log_file(self) -> str:
        """Get log file path."""
        return self.get("log_file", "logs/svetlichny.log")

    def reload(self) -> None:
        """Reload settings from file and environment."""
        self.load()
