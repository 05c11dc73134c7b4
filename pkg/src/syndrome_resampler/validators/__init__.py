"""Validation utilities for generated codes."""

from .code_validator import coset_min_weight, validate_code

__all__ = [
    "coset_min_weight",
    "validate_code",
]
