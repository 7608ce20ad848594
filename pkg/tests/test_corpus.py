import numpy as np
import pytest

from src.corpus import (
    BUILTIN_NAMES,
    E2_CANONICAL_BASIS,
    E2_SKEW_BASIS,
    EXAMPLE_TARGETS,
    builtin,
    derivation_cases,
    derive_infinitesimal_action,
    e2_center_kernel,
    e2_group,
    e2_inner_action,
    e2_rotation_action,
    e2_rotation_matrices,
    e2_translation_kernel,
    finite_corpus,
    heisenberg_center_kernel,
    heisenberg_group,
    heisenberg_inner_action,
    heisenberg_printed_conjugation,
    r_group,
    render_e2_matrix,
    reproduce,
    sampled_condition_check,
    shear_action,
    validate_parametric_group,
    validate_smooth_action,
)
from src.corpus.builtin import S
from src.entity import UnknownBuiltinError

CORPUS_ORDERS = {
    "Z1": 1, "Z2": 2, "Z3": 3, "Z4": 4, "Z5": 5, "Z6": 6, "Z7": 7, "Z8": 8,
    "Z2xZ2": 4, "Z2xZ4": 8, "S3": 6, "D4": 8, "Q8": 8, "D4xZ2": 16, "A4": 12,
}


def test_finite_corpus_names_and_orders():
    corpus = finite_corpus()
    assert {name: group.order for name, group in corpus.items()} == CORPUS_ORDERS


@pytest.mark.parametrize("group", [heisenberg_group(), e2_group(), r_group(2)], ids=lambda g: g.name)
def test_parametric_groups_satisfy_axioms(group):
    report = validate_parametric_group(group, n_samples=100, seed=3)
    assert report.passed
    assert report.statistical
    assert report.n_samples == 100


@pytest.mark.parametrize(
    "action",
    [shear_action(), e2_rotation_action(), heisenberg_inner_action(), e2_inner_action()],
    ids=lambda a: a.name,
)
def test_smooth_actions_satisfy_axioms(action):
    assert validate_smooth_action(action, n_samples=100, seed=3).passed


def test_heisenberg_exp_log_are_inverse(rng):
    group = heisenberg_group()
    for _ in range(20):
        v = rng.uniform(-2, 2, size=3)
        assert np.allclose(group.log(group.exp(v)), v)


def test_e2_exp_log_are_inverse(rng):
    group = e2_group()
    for _ in range(20):
        v = np.concatenate([[rng.uniform(-3, 3)], rng.uniform(-2, 2, size=2)])
        assert np.allclose(group.log(group.exp(v)), v)


def test_printed_conjugation_matches_group_law(rng):
    group = heisenberg_group()
    inner = heisenberg_inner_action()
    for _ in range(50):
        h, g = group.sample(rng), group.sample(rng)
        assert np.allclose(inner.apply(h, g), heisenberg_printed_conjugation(h, g), atol=1e-12)


def test_e2_angle_is_not_reduced():
    group = e2_group()
    p = group.compose(np.array([3.0, 0.0, 0.0]), np.array([3.0, 0.0, 0.0]))
    assert p[0] == pytest.approx(6.0)
    assert e2_translation_kernel(np.array([2 * np.pi, 0.0, 0.0])) == pytest.approx(0.0, abs=1e-12)


def test_render_e2_matrix_is_homomorphism(rng):
    group = e2_group()
    x, y = group.sample(rng), group.sample(rng)
    assert np.allclose(render_e2_matrix(group.compose(x, y)), render_e2_matrix(x) @ render_e2_matrix(y))


def test_rotation_actions_satisfy_condition():
    rotation = e2_rotation_action()
    report = sampled_condition_check(rotation, rotation, n_samples=200, kernel_lambda=e2_translation_kernel, seed=1)
    assert report.passed
    assert report.statistical


def test_heisenberg_inner_actions_satisfy_condition():
    inner = heisenberg_inner_action()
    report = sampled_condition_check(inner, inner, n_samples=200, kernel_lambda=heisenberg_center_kernel, seed=1)
    assert report.passed


def test_e2_inner_actions_violate_condition():
    inner = e2_inner_action()
    report = sampled_condition_check(inner, inner, n_samples=200, kernel_lambda=e2_center_kernel, seed=1)
    assert not report.passed
    assert report.max_residual > 1e-3


def test_sampled_condition_is_deterministic_per_seed():
    inner = e2_inner_action()
    first = sampled_condition_check(inner, inner, n_samples=50, kernel_lambda=e2_center_kernel, seed=7)
    second = sampled_condition_check(inner, inner, n_samples=50, kernel_lambda=e2_center_kernel, seed=7)
    assert first.max_residual == second.max_residual
    assert len(first.failures) == len(second.failures)


def test_sampled_condition_requires_kernel():
    rotation = e2_rotation_action()
    with pytest.raises(ValueError):
        sampled_condition_check(rotation, rotation)


@pytest.mark.parametrize("name", list(derivation_cases()))
def test_derived_action_matches_closed_form(name):
    case = derivation_cases([name])[name]
    derived = derive_infinitesimal_action(
        case.action, case.basis_acting, case.basis_target, target_algebra=case.target_algebra
    )
    assert derived.converged
    assert np.max(np.abs(derived.action.matrices - case.exact.matrices)) <= 1e-6
    assert derived.derivation.passed


def test_finite_differences_converge_at_second_order():
    case = derivation_cases(["e2_rotation_canonical"])["e2_rotation_canonical"]
    coarse = derive_infinitesimal_action(case.action, case.basis_acting, case.basis_target, step=0.1)
    fine = derive_infinitesimal_action(case.action, case.basis_acting, case.basis_target, step=0.05)
    assert 3.5 <= coarse.residual / fine.residual <= 4.5
    assert coarse.constant == pytest.approx(fine.constant, rel=0.05)


def test_derive_action_rejects_non_positive_step():
    with pytest.raises(ValueError):
        derive_infinitesimal_action(shear_action(), step=0.0)


def test_unknown_derivation_case():
    with pytest.raises(UnknownBuiltinError):
        derivation_cases(["nope"])


def test_rotation_operator_in_canonical_basis():
    L = e2_rotation_matrices(E2_CANONICAL_BASIS)
    assert np.allclose(L.matrices[0], [[0, 0, 0], [0, 0, S], [0, -S, 0]])
    assert np.allclose(L.matrices[1:], 0.0)


def test_rotation_operator_in_skew_basis():
    L = e2_rotation_matrices(E2_SKEW_BASIS)
    assert np.allclose(L.matrices[0], [[0, 0, 0], [0.25, 0, 0.5], [-0.25, -0.5, 0]])


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtin_bundles_carry_expected_constants(name):
    bundle = builtin(name)
    assert bundle.name == name
    assert bundle.expected.sectional.shape == (bundle.algebra.dim, bundle.algebra.dim)
    assert bundle.expected.constants


def test_unknown_builtin():
    with pytest.raises(UnknownBuiltinError):
        builtin("sl2")


@pytest.mark.parametrize("target", EXAMPLE_TARGETS)
def test_examples_reproduce(target, golden_dir):
    checks = reproduce(target, golden_dir=golden_dir)
    failed = [(c.check, c.detail, c.diff) for c in checks if not c.passed]
    assert checks
    assert failed == []


def test_reproduce_rejects_unknown_target():
    with pytest.raises(ValueError):
        reproduce("example9")


def test_reproduce_flags_missing_golden_files(tmp_path):
    checks = reproduce("example3", golden_dir=tmp_path)
    failed = [c for c in checks if not c.passed]
    assert failed
    assert all("dourado" in c.check for c in failed)
