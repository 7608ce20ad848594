import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.lie_core import (
    abelian_algebra,
    adjoint_action,
    bracket,
    change_basis,
    check_antisymmetry,
    check_jacobi,
    derived_series_dims,
    is_two_step_nilpotent,
    lower_central_series_dims,
    make_algebra,
    nonzero_constants,
    random_two_step_nilpotent,
)
from src.corpus import E2_CANONICAL_BASIS, E2_SKEW_BASIS, e2_algebra, e2_raw_algebra
from src.entity import DimensionMismatchError, IngestionError, LieAlgebra

coordinates = st.lists(st.floats(-10, 10, allow_nan=False), min_size=3, max_size=3).map(np.array)


def test_make_algebra_completes_antisymmetry(heisenberg):
    c = heisenberg.constants
    assert c[0, 2, 1] == -1.0
    assert c[2, 0, 1] == 1.0
    assert np.count_nonzero(c) == 2
    assert heisenberg.basis_labels == ["e1", "e2", "e3"]


def test_make_algebra_accepts_zero_based_indices(heisenberg):
    alg = make_algebra(3, [(0, 2, 1, -1.0)], one_based=False)
    assert np.array_equal(alg.constants, heisenberg.constants)


def test_make_algebra_accepts_consistent_halves(heisenberg):
    alg = make_algebra(3, [(1, 3, 2, -1.0), (3, 1, 2, 1.0)])
    assert np.array_equal(alg.constants, heisenberg.constants)


def test_make_algebra_rejects_inconsistent_halves():
    with pytest.raises(IngestionError, match="incoerentes"):
        make_algebra(3, [(1, 3, 2, -1.0), (3, 1, 2, -1.0)])


def test_make_algebra_rejects_diagonal_constant():
    with pytest.raises(IngestionError):
        make_algebra(3, [(2, 2, 1, 1.0)])


def test_make_algebra_rejects_index_out_of_range():
    with pytest.raises(IngestionError):
        make_algebra(3, [(1, 4, 2, 1.0)])


def test_labels_must_match_dimension():
    with pytest.raises(DimensionMismatchError):
        make_algebra(3, [], labels=["a", "b"])


def test_bracket_of_basis_vectors(heisenberg):
    assert np.allclose(bracket(heisenberg, [1, 0, 0], [0, 0, 1]), [0, -1, 0])
    assert np.allclose(bracket(heisenberg, [0, 0, 1], [1, 0, 0]), [0, 1, 0])
    assert np.allclose(bracket(heisenberg, [0, 1, 0], [1, 0, 1]), 0.0)


def test_bracket_rejects_wrong_dimension(heisenberg):
    with pytest.raises(DimensionMismatchError):
        bracket(heisenberg, [1, 0], [0, 0, 1])


@settings(max_examples=50, deadline=None)
@given(x=coordinates, y=coordinates, z=coordinates, a=st.floats(-10, 10, allow_nan=False))
def test_bracket_is_bilinear_and_antisymmetric(x, y, z, a):
    alg = e2_algebra(E2_SKEW_BASIS)
    lhs = bracket(alg, a * x + y, z)
    rhs = a * bracket(alg, x, z) + bracket(alg, y, z)
    assert np.allclose(lhs, rhs, atol=1e-9)
    assert np.allclose(bracket(alg, x, y), -bracket(alg, y, x), atol=1e-10)


def test_antisymmetry_violation_is_reported():
    c = np.zeros((3, 3, 3))
    c[0, 1, 0] = c[1, 0, 0] = 1.0
    report = check_antisymmetry(LieAlgebra.from_entries(c))
    assert not report.passed
    assert report.first_failure.where == (0, 1, 0)
    assert report.first_failure.residual == 2.0


def test_zero_tensor_passes_every_check():
    alg = abelian_algebra(4)
    assert check_antisymmetry(alg).passed
    assert check_jacobi(alg).passed
    assert is_two_step_nilpotent(alg).holds


def test_jacobi_passes_for_heisenberg(heisenberg):
    assert check_jacobi(heisenberg).passed


def test_jacobi_failure_reports_first_triple(broken_jacobi):
    report = check_jacobi(broken_jacobi)
    assert not report.passed
    assert report.first_failure.where == (0, 1, 2)
    assert report.first_failure.residual == pytest.approx(1.0)


def test_adding_c231_to_heisenberg_still_satisfies_jacobi():
    alg = make_algebra(3, [(1, 3, 2, -1.0), (2, 3, 1, 1.0)])
    assert check_jacobi(alg).passed


def _cyclic_sum(alg, x, y, z):
    return (
        bracket(alg, bracket(alg, x, y), z)
        + bracket(alg, bracket(alg, y, z), x)
        + bracket(alg, bracket(alg, z, x), y)
    )


def test_basis_jacobi_agrees_with_random_vectors(heisenberg, broken_jacobi, rng):
    for alg in (heisenberg, e2_algebra(E2_SKEW_BASIS), broken_jacobi):
        worst = max(
            np.linalg.norm(_cyclic_sum(alg, *rng.uniform(-1, 1, size=(3, 3)))) for _ in range(1000)
        )
        assert check_jacobi(alg).passed == (worst <= 1e-9)


def test_two_step_nilpotent_kills_random_double_brackets(rng):
    alg = random_two_step_nilpotent(3, 2, rng)
    for _ in range(100):
        x, y, z = rng.uniform(-1, 1, size=(3, alg.dim))
        assert np.linalg.norm(bracket(alg, bracket(alg, x, y), z)) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), generators=st.integers(0, 5), center=st.integers(1, 3))
def test_random_two_step_nilpotent_algebras_are_lie_and_two_step(seed, generators, center):
    alg = random_two_step_nilpotent(generators, center, np.random.default_rng(seed))
    assert alg.dim == generators + center
    assert check_antisymmetry(alg).passed
    assert check_jacobi(alg).passed
    assert is_two_step_nilpotent(alg).holds


def test_random_two_step_nilpotent_rejects_empty_algebra(rng):
    with pytest.raises(ValueError):
        random_two_step_nilpotent(0, 0, rng)


def test_heisenberg_is_two_step_nilpotent(heisenberg):
    result = is_two_step_nilpotent(heisenberg)
    assert result.holds
    assert result.witness is None


def test_e2_is_not_two_step_nilpotent():
    result = is_two_step_nilpotent(e2_algebra(E2_CANONICAL_BASIS))
    assert not result.holds
    assert result.witness == (0, 1, 0)
    assert result.residual == pytest.approx(0.5)


def test_central_series_dimensions(heisenberg):
    assert lower_central_series_dims(heisenberg) == [3, 1, 0]
    assert derived_series_dims(heisenberg) == [3, 1, 0]
    e2 = e2_raw_algebra()
    assert lower_central_series_dims(e2) == [3, 2]
    assert derived_series_dims(e2) == [3, 2, 0]


def test_adjoint_action_matches_bracket(heisenberg):
    ad = adjoint_action(heisenberg)
    for a in range(3):
        for b in range(3):
            e_a, e_b = np.eye(3)[a], np.eye(3)[b]
            assert np.allclose(ad.apply(e_a, e_b), bracket(heisenberg, e_a, e_b))


def test_change_basis_to_skew_basis():
    alg = e2_algebra(E2_SKEW_BASIS)
    assert nonzero_constants(alg, 1e-12) == [(1, 2, 3, -0.5), (1, 3, 2, 0.5)]


def test_change_basis_preserves_brackets():
    raw = e2_raw_algebra()
    basis = E2_SKEW_BASIS
    alg = change_basis(raw, basis)
    for i in range(3):
        for j in range(3):
            image = bracket(alg, np.eye(3)[i], np.eye(3)[j]) @ basis
            assert np.allclose(image, bracket(raw, basis[i], basis[j]))


def test_nonzero_constants_indexing(heisenberg):
    assert nonzero_constants(heisenberg) == [(1, 3, 2, -1.0)]
    assert nonzero_constants(heisenberg, one_based=False) == [(0, 2, 1, -1.0)]
