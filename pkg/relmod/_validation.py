"""Argument validation helpers shared by the relmod modules."""

from __future__ import annotations


def _validate_integer(value: int, param_name: str = "value") -> int:
    """Validate that a value is an integer (bools rejected)."""
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{param_name} must be an integer")
    return value


def _validate_nonzero_integer(value: int, param_name: str = "value") -> int:
    """Validate that a value is a nonzero integer."""
    value = _validate_integer(value, param_name)
    if value == 0:
        raise ValueError(f"{param_name} must be nonzero")
    return value


def _validate_non_negative_integer(value: int, param_name: str = "value") -> int:
    """Validate that a value is a non-negative integer."""
    value = _validate_integer(value, param_name)
    if value < 0:
        raise ValueError(f"{param_name} must be non-negative, got: {value}")
    return value


def _validate_positive_integer(value: int, param_name: str = "value") -> int:
    """Validate that a value is a positive integer."""
    value = _validate_integer(value, param_name)
    if value <= 0:
        raise ValueError(f"{param_name} must be a positive integer, got: {value}")
    return value


def _validate_window(lo: int, hi: int, param_name: str = "window") -> tuple[int, int]:
    """Validate an inclusive index window lo <= hi."""
    lo = _validate_integer(lo, f"{param_name} lower bound")
    hi = _validate_integer(hi, f"{param_name} upper bound")
    if lo > hi:
        raise ValueError(f"{param_name} lower bound cannot exceed upper bound")
    return lo, hi
