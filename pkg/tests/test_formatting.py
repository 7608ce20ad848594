import numpy as np
import pytest

from src.corpus.builtin import S
from src.utils.formatting import (
    format_combination,
    format_matrix,
    format_scalar,
    format_vector,
    unified_matrix_diff,
)


@pytest.mark.parametrize(
    "value, text",
    [
        (0.0, "0"),
        (-0.5, "-1/2"),
        (0.25, "1/4"),
        (-0.75, "-3/4"),
        (1.0 / 64.0, "1/64"),
        (-3.0 / 16.0, "-3/16"),
        (-3.0, "-3"),
        (S, "1/√2"),
        (-S, "-1/√2"),
        (S / 2.0, "1/(2√2)"),
        (0.1, "0.1"),
    ],
)
def test_format_scalar(value, text):
    assert format_scalar(value) == text


def test_format_scalar_tolerates_roundoff():
    assert format_scalar(0.25 + 1e-12) == "1/4"


def test_format_vector():
    assert format_vector([0.0, 0.25, -S]) == "(0, 1/4, -1/√2)"


def test_format_matrix_aligns_columns():
    assert format_matrix([[0.0, -0.75], [1.0, 0.0]]) == ["[ 0  -3/4 ]", "[ 1     0 ]"]


@pytest.mark.parametrize(
    "coefficients, text",
    [
        ([0, -1, 0, 0, -1, 0], "-E2 - E5"),
        ([0, 1, 0, 0, 0, 0], "E2"),
        ([0.5, 0, 0, 0, 0, -0.25], "1/2·E1 - 1/4·E6"),
        ([0, 0, 0, 0, 0, 0], "0"),
    ],
)
def test_format_combination(coefficients, text):
    assert format_combination(coefficients, [f"E{i}" for i in range(1, 7)]) == text


def test_unified_matrix_diff():
    a = np.array([[0.0, 0.25], [0.25, 0.0]])
    assert unified_matrix_diff(a, a) == ""
    diff = unified_matrix_diff(a, a + np.eye(2), "seccional")
    assert "seccional (esperado)" in diff
    assert "-[   0  1/4 ]" in diff
