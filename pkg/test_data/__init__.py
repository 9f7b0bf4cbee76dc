"""Presentation fixtures and golden display files for the test suite."""
