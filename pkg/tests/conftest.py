"""Pytest configuration: keeps the tests directory importable so the
test modules can share the helpers module."""
