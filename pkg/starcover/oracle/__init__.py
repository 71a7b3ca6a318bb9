"""
starcover - Oracle Module
Covering validation, exact maximum coverings and small-value table checks
"""

from .exact import ExactResult, exact_max_cover
from .table import TABLE_U, TableCheck, check_table_value, table_value
from .validate import ValidationReport, Violation, ViolationKind, validate_covering

__all__ = [
    "ExactResult",
    "exact_max_cover",
    "TABLE_U",
    "TableCheck",
    "check_table_value",
    "table_value",
    "ValidationReport",
    "Violation",
    "ViolationKind",
    "validate_covering",
]
