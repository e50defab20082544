"""Keeps the tests directory importable so the suites can share helpers."""
