"""Configuration management."""
from .settings import SettingsManager
from .defaults import DEFAULT_SETTINGS, VALID_OUTPUT_FORMATS

__all__ = ["SettingsManager", "DEFAULT_SETTINGS", "VALID_OUTPUT_FORMATS"]
