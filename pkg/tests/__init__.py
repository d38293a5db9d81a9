"""Test package; conftest holds the shared fixtures."""
