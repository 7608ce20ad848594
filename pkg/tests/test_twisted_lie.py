import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.lie_core import (
    abelian_algebra,
    adjoint_action,
    bracket,
    check_jacobi,
    is_two_step_nilpotent,
    nonzero_constants,
    random_two_step_nilpotent,
)
from src.core.twisted_lie import (
    build_inner_twist,
    build_twisted_algebra,
    check_derivation_property,
    direct_sum,
    inner_twist_spec,
    twist_lie,
    twisted_bracket,
    zero_action,
)
from src.corpus import (
    BUILTIN_NAMES,
    E2_SKEW_BASIS,
    builtin,
    e2_algebra,
    e2_rotation_matrices,
    semidirect_heisenberg_spec,
)
from src.entity import DimensionMismatchError, InfinitesimalAction, StructuralError, TwistSpec

GAMMA_STAR_GAMMA_CONSTANTS = [
    (1, 3, 2, -1.0),
    (1, 6, 2, -1.0),
    (1, 6, 5, -1.0),
    (3, 4, 2, 1.0),
    (3, 4, 5, 1.0),
    (4, 6, 5, -1.0),
]

TWISTED_BUILTINS = [name for name in BUILTIN_NAMES if builtin(name).twist_spec is not None]

pairs_of_six = st.lists(st.floats(-5, 5, allow_nan=False), min_size=12, max_size=12).map(np.array)


def test_semidirect_product_of_r2_by_shear_is_heisenberg():
    alg = build_twisted_algebra(semidirect_heisenberg_spec())
    assert nonzero_constants(alg) == [(1, 3, 2, -1.0)]
    assert alg.basis_labels == ["E1", "E2", "E3"]


def test_inner_twist_of_heisenberg(heisenberg):
    twisted = build_inner_twist(heisenberg)
    assert twisted.dim == 6
    assert nonzero_constants(twisted) == GAMMA_STAR_GAMMA_CONSTANTS
    assert check_jacobi(twisted).passed
    assert is_two_step_nilpotent(twisted).holds


def test_inner_twist_matches_general_construction(heisenberg):
    general = build_twisted_algebra(inner_twist_spec(heisenberg))
    assert np.allclose(general.constants, build_inner_twist(heisenberg).constants)


def test_printed_brackets_of_inner_twist(heisenberg):
    spec = inner_twist_spec(heisenberg)
    e = np.eye(6)
    assert np.allclose(twisted_bracket(spec, e[0], e[5]), [0, -1, 0, 0, -1, 0])
    assert np.allclose(twisted_bracket(spec, e[3], e[2]), [0, -1, 0, 0, -1, 0])
    assert np.allclose(twisted_bracket(spec, e[3], e[5]), [0, 0, 0, 0, -1, 0])


@settings(max_examples=50, deadline=None)
@given(z=pairs_of_six)
def test_twisted_bracket_agrees_with_structure_constants(z):
    for spec in (inner_twist_spec(builtin("heisenberg").algebra), builtin("e2_star_e2_skew").twist_spec):
        alg = build_twisted_algebra(spec)
        z1, z2 = z[:6], z[6:]
        assert np.allclose(twisted_bracket(spec, z1, z2), bracket(alg, z1, z2), atol=1e-9)


@pytest.mark.parametrize("name", TWISTED_BUILTINS)
def test_twisted_bracket_agrees_with_structure_constants_on_random_pairs(name):
    spec = builtin(name).twist_spec
    alg = build_twisted_algebra(spec)
    rng = np.random.default_rng(0)
    for _ in range(1000):
        z1, z2 = rng.uniform(-1, 1, size=(2, alg.dim))
        assert np.allclose(twisted_bracket(spec, z1, z2), bracket(alg, z1, z2), atol=1e-9)


def test_non_finite_action_entry_is_structural_error():
    L = InfinitesimalAction(1, 2, np.array([[[0.0, 0.0], [np.nan, 0.0]]]))
    spec = TwistSpec(abelian_algebra(2), abelian_algebra(1), L, zero_action(2, 1))
    with pytest.raises(StructuralError, match="incoerentes"):
        build_twisted_algebra(spec)


def test_twisted_bracket_rejects_wrong_dimension(heisenberg):
    with pytest.raises(DimensionMismatchError):
        twisted_bracket(inner_twist_spec(heisenberg), np.zeros(5), np.zeros(6))


def test_adjoint_action_is_a_derivation(heisenberg):
    assert check_derivation_property(adjoint_action(heisenberg), heisenberg).passed


def test_rotation_action_is_a_derivation_of_e2():
    e2 = e2_algebra(E2_SKEW_BASIS)
    assert check_derivation_property(e2_rotation_matrices(E2_SKEW_BASIS), e2).passed


def test_identity_is_not_a_derivation_of_heisenberg(heisenberg):
    report = check_derivation_property(InfinitesimalAction(1, 3, [np.eye(3)]), heisenberg)
    assert not report.passed
    assert report.first_failure.where[0] == 0


def test_twist_with_non_derivation_fails_jacobi(heisenberg):
    spec = TwistSpec(heisenberg, abelian_algebra(1), InfinitesimalAction(1, 3, [np.eye(3)]), zero_action(3, 1))
    result = twist_lie(spec)
    assert not result.is_lie
    assert result.jacobi.first_failure.where == (0, 2, 3)


def test_direct_sum(heisenberg):
    alg = direct_sum(heisenberg, abelian_algebra(1))
    assert alg.dim == 4
    assert nonzero_constants(alg) == [(1, 3, 2, -1.0)]


def test_twist_spec_rejects_incompatible_dimensions(heisenberg):
    with pytest.raises(DimensionMismatchError):
        TwistSpec(heisenberg, abelian_algebra(1), zero_action(2, 3), zero_action(3, 1))
    with pytest.raises(DimensionMismatchError):
        TwistSpec(heisenberg, abelian_algebra(1), zero_action(1, 3), zero_action(3, 2))


def test_action_matrices_shape_is_checked():
    with pytest.raises(DimensionMismatchError):
        InfinitesimalAction(2, 3, np.zeros((1, 3, 3)))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), generators=st.integers(1, 4), center=st.integers(1, 3))
def test_inner_twist_of_two_step_nilpotent_is_two_step_nilpotent_lie(seed, generators, center):
    alg = random_two_step_nilpotent(generators, center, np.random.default_rng(seed))
    twisted = build_inner_twist(alg)
    assert check_jacobi(twisted).passed
    assert is_two_step_nilpotent(twisted).holds
