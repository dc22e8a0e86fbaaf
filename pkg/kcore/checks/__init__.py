"""Invariant suites, imported and registered on bootstrap."""
