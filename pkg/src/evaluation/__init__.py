"""
Módulo de avaliação do twistprod.
"""

from .property_evaluator import CheckRow, PropertyEvaluator

__all__ = ["CheckRow", "PropertyEvaluator"]
