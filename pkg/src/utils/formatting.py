"""
Renderização de números, matrizes e diferenças para relatórios de texto.
"""

import difflib
import math
from typing import Iterable, List, Optional, Sequence

import numpy as np
from sympy import Rational

DENOMINATORS = (1, 2, 4, 8, 16, 64)
MAX_NUMERATOR = 128
SYMBOLIC_TOL = 1e-9
SQRT2 = math.sqrt(2.0)


def _as_small_rational(value: float) -> Optional[Rational]:
    for q in DENOMINATORS:
        p = round(value * q)
        if abs(p) <= MAX_NUMERATOR and abs(value - p / q) <= SYMBOLIC_TOL:
            return Rational(p, q)
    return None


def format_scalar(value: float) -> str:
    """
    Fração p/q (q em 1, 2, 4, 8, 16, 64 e |p| ≤ 128) ou p/√2 quando o valor
    está a 1e-9 de uma delas; caso contrário 12 algarismos significativos.
    """
    value = float(value)
    if not math.isfinite(value):
        return str(value)
    rational = _as_small_rational(value)
    if rational is not None:
        return str(rational)
    rational = _as_small_rational(value * SQRT2)
    if rational is not None:
        p, q = rational.p, rational.q
        return f"{p}/√2" if q == 1 else f"{p}/({q}√2)"
    return f"{value:.12g}"


def format_vector(values: Iterable[float]) -> str:
    return "(" + ", ".join(format_scalar(v) for v in values) + ")"


def format_matrix(matrix) -> List[str]:
    """Linhas da matriz com colunas alinhadas à direita."""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
    cells = [[format_scalar(v) for v in row] for row in matrix]
    widths = [max(len(row[j]) for row in cells) for j in range(matrix.shape[1])]
    return ["[ " + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + " ]" for row in cells]


def format_combination(coefficients: Sequence[float], labels: Sequence[str], tol: float = SYMBOLIC_TOL) -> str:
    """Combinação linear legível, p.ex. '-E2 - E5'."""
    terms = []
    for c, label in zip(coefficients, labels):
        if abs(c) <= tol:
            continue
        if abs(c - 1.0) <= tol:
            text = f"+ {label}"
        elif abs(c + 1.0) <= tol:
            text = f"- {label}"
        else:
            rendered = format_scalar(c)
            sign = "-" if rendered.startswith("-") else "+"
            text = f"{sign} {rendered.lstrip('-')}·{label}"
        terms.append(text)
    if not terms:
        return "0"
    joined = " ".join(terms)
    return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]


def unified_matrix_diff(expected, computed, label: str = "matriz") -> str:
    """Diff unificado entre as renderizações de duas matrizes; vazio se iguais."""
    diff = difflib.unified_diff(
        format_matrix(expected),
        format_matrix(computed),
        fromfile=f"{label} (esperado)",
        tofile=f"{label} (calculado)",
        lineterm="",
    )
    return "\n".join(diff)
