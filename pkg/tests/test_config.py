import json
import os

import pytest

from svetlichny_core.config import DEFAULT_SETTINGS, SettingsManager


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in list(os.environ):
        if key.startswith("SVETLICHNY_"):
            monkeypatch.delenv(key)


@pytest.fixture
def settings_file(tmp_path):
    return tmp_path / "config" / "settings.json"


def write_settings(path, data):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data), encoding="utf-8")


def test_defaults(settings_file):
    settings = SettingsManager(str(settings_file))
    assert settings.dimension_guard == 2 ** 21
    assert settings.search_guard == 14
    assert settings.max_parties == 16
    assert settings.max_reported_assignments == 64
    assert settings.output_format == "table"
    assert settings.results_dir == DEFAULT_SETTINGS["results_dir"]


def test_file_overrides_defaults(settings_file):
    write_settings(settings_file, {"search_guard": 10, "output_format": "csv"})
    settings = SettingsManager(str(settings_file))
    assert settings.search_guard == 10
    assert settings.output_format == "csv"
    assert settings.dimension_guard == 2 ** 21


def test_environment_overrides_file(settings_file, monkeypatch):
    write_settings(settings_file, {"search_guard": 10, "threads": 3})
    monkeypatch.setenv("SVETLICHNY_SEARCH_GUARD", "12")
    monkeypatch.setenv("SVETLICHNY_OUTPUT_FORMAT", "JSON")
    settings = SettingsManager(str(settings_file))
    assert settings.search_guard == 12
    assert settings.threads == 3
    assert settings.output_format == "json"


def test_malformed_integer_falls_back(settings_file, monkeypatch):
    monkeypatch.setenv("SVETLICHNY_DIMENSION_GUARD", "lots")
    assert SettingsManager(str(settings_file)).dimension_guard == 2 ** 21


def test_zero_threads_resolve_to_cpu_count(settings_file, monkeypatch):
    monkeypatch.setattr(os, "cpu_count", lambda: 6)
    assert SettingsManager(str(settings_file)).threads == 6
    monkeypatch.setenv("SVETLICHNY_THREADS", "2")
    assert SettingsManager(str(settings_file)).threads == 2


def test_unknown_output_format(settings_file):
    write_settings(settings_file, {"output_format": "xml"})
    assert SettingsManager(str(settings_file)).output_format == "table"


def test_unreadable_file_is_ignored(settings_file):
    settings_file.parent.mkdir(parents=True)
    settings_file.write_text("{not json", encoding="utf-8")
    assert SettingsManager(str(settings_file)).search_guard == 14


def test_save_and_reload(settings_file):
    settings = SettingsManager(str(settings_file))
    settings.set("search_guard", "9")
    assert settings.save()
    saved = json.loads(settings_file.read_text(encoding="utf-8"))
    assert saved["search_guard"] == 9

    settings.set("search_guard", 4)
    settings.reload()
    assert settings.search_guard == 9
