"""Exhaustive error-class enumeration (beta coefficients) and exact logical error rates."""

from .classes import ClassResult, ErrorClass, beta_z, class_patterns, class_size, classes_of_weight, enumerate_class
from .exact import exact_logical_error_rate
from .table import BetaRow, BetaTable, beta_row, beta_table, table1_frame

__all__ = [
    "BetaRow",
    "BetaTable",
    "ClassResult",
    "ErrorClass",
    "beta_row",
    "beta_table",
    "beta_z",
    "class_patterns",
    "class_size",
    "classes_of_weight",
    "enumerate_class",
    "exact_logical_error_rate",
    "table1_frame",
]
