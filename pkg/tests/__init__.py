"""Test suite for svetlichny_core."""
