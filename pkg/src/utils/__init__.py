"""
Módulo de utilitários do twistprod.
"""

from .config import Settings, get_settings, resolve_tolerance, setup_logging
from .formatting import format_combination, format_matrix, format_scalar, format_vector, unified_matrix_diff

__all__ = [
    "Settings",
    "get_settings",
    "resolve_tolerance",
    "setup_logging",
    "format_scalar",
    "format_vector",
    "format_matrix",
    "format_combination",
    "unified_matrix_diff",
]
