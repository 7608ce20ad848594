"""
Reprodução dos cinco exemplos: recalcula cada valor a partir das construções e
compara com os valores embutidos e com os arquivos dourados.
"""

import difflib
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from ..core.curvature import scalar_curvature, sectional_curvatures, verify_six_rho
from ..core.lie_core import basis_vector, bracket, check_jacobi, is_two_step_nilpotent, nonzero_constants
from ..core.twisted_lie import build_twisted_algebra, check_derivation_property, twisted_bracket
from ..entity import ExpectedValues, LieAlgebra, ReproductionCheck, TwistSpec
from ..utils.config import get_settings, resolve_tolerance
from ..utils.formatting import format_combination, format_matrix, format_scalar, unified_matrix_diff
from .builtin import S, builtin, derivation_cases, e2_raw_algebra
from .derivation import derive_infinitesimal_action
from .golden import load_golden
from .parametric import (
    conjugation_action,
    e2_center_kernel,
    e2_group,
    e2_inner_action,
    e2_rotation_action,
    e2_translation_kernel,
    heisenberg_center_kernel,
    heisenberg_group,
    heisenberg_inner_action,
    heisenberg_printed_conjugation,
    validate_parametric_group,
    validate_smooth_action,
)
from .sampled import sampled_condition_check

logger = logging.getLogger(__name__)

EXAMPLE_TARGETS = ("example1", "example2", "example3", "example4", "example5")
DERIVED_TOL = 1e-6


class _Checks:
    """Acumula as comparações de um alvo."""

    def __init__(self, target: str, tol: float):
        self.target = target
        self.tol = tol
        self.items: List[ReproductionCheck] = []

    def flag(self, check: str, passed: bool, detail: str = "") -> None:
        self.items.append(ReproductionCheck(self.target, check, bool(passed), detail))

    def matrix(self, check: str, expected, computed, tol: Optional[float] = None) -> None:
        tol = self.tol if tol is None else tol
        expected = np.asarray(expected, dtype=float)
        computed = np.asarray(computed, dtype=float)
        passed = expected.shape == computed.shape and bool(np.all(np.abs(expected - computed) <= tol))
        diff = "" if passed else unified_matrix_diff(expected, computed, check)
        self.items.append(ReproductionCheck(self.target, check, passed, "\n".join(format_matrix(computed)), diff))

    def scalar(self, check: str, expected: float, computed: float, tol: Optional[float] = None) -> None:
        tol = self.tol if tol is None else tol
        passed = abs(expected - computed) <= tol
        detail = f"{format_scalar(computed)} (esperado {format_scalar(expected)})"
        self.items.append(ReproductionCheck(self.target, check, passed, detail))

    def vector(self, check: str, expected, computed, labels: Sequence[str], tol: Optional[float] = None) -> None:
        tol = self.tol if tol is None else tol
        passed = bool(np.all(np.abs(np.asarray(expected) - np.asarray(computed)) <= tol))
        detail = f"{format_combination(computed, labels)} (esperado {format_combination(expected, labels)})"
        self.items.append(ReproductionCheck(self.target, check, passed, detail))

    def constants(self, check: str, expected, alg: LieAlgebra, tol: Optional[float] = None) -> None:
        tol = self.tol if tol is None else tol
        computed = nonzero_constants(alg, tol)
        passed = len(expected) == len(computed) and all(
            e[:3] == c[:3] and abs(e[3] - c[3]) <= tol for e, c in zip(expected, computed)
        )
        diff = ""
        if not passed:
            diff = "\n".join(
                difflib.unified_diff(
                    _constant_lines(expected),
                    _constant_lines(computed),
                    fromfile=f"{check} (esperado)",
                    tofile=f"{check} (calculado)",
                    lineterm="",
                )
            )
        self.items.append(ReproductionCheck(self.target, check, passed, f"{len(computed)} constantes", diff))

    def against(self, name: str, alg: LieAlgebra, expected: ExpectedValues, source: str) -> None:
        self.matrix(f"{name}: seccional ({source})", expected.sectional, sectional_curvatures(alg))
        self.scalar(f"{name}: escalar ({source})", expected.scalar, scalar_curvature(alg))
        self.constants(f"{name}: constantes ({source})", expected.constants, alg)

    def builtin_and_golden(self, name: str, golden_dir: Optional[Path]) -> LieAlgebra:
        bundle = builtin(name)
        self.against(name, bundle.algebra, bundle.expected, "embutido")
        golden = load_golden(name, golden_dir)
        if golden is None:
            self.flag(f"{name}: arquivo dourado", False, "arquivo dourado ausente")
        else:
            self.against(name, bundle.algebra, golden, "dourado")
        return bundle.algebra


def _constant_lines(constants) -> List[str]:
    return [f"c[{i},{j}]^{k} = {format_scalar(v)}" for i, j, k, v in constants]


def _unit(dim: int, i: int) -> np.ndarray:
    e = np.zeros(dim)
    e[i] = 1.0
    return e


def _combination(dim: int, terms: Dict[int, float]) -> np.ndarray:
    v = np.zeros(dim)
    for index, coefficient in terms.items():
        v[index - 1] = coefficient
    return v


def _derived_vs_exact(checks: _Checks, case_name: str, spec_builder: Callable[[object], TwistSpec]) -> None:
    case = derivation_cases([case_name])[case_name]
    derived = derive_infinitesimal_action(
        case.action, case.basis_acting, case.basis_target, target_algebra=case.target_algebra
    )
    checks.flag(f"{case_name}: convergência h → h/2", derived.converged, f"C ≈ {derived.constant:.3e}")
    for a in range(case.exact.acting_dim):
        checks.matrix(f"{case_name}: L(E{a + 1}) derivada", case.exact.matrices[a], derived.action.matrices[a], DERIVED_TOL)
    if derived.derivation is not None:
        checks.flag(f"{case_name}: derivada é derivação", derived.derivation.passed)
    exact_alg = build_twisted_algebra(spec_builder(case.exact))
    derived_alg = build_twisted_algebra(spec_builder(derived.action), tol=DERIVED_TOL)
    checks.constants(
        f"{case_name}: constantes pela ação derivada", nonzero_constants(exact_alg, DERIVED_TOL), derived_alg, DERIVED_TOL
    )


def _example1(checks: _Checks, seed: int) -> None:
    rotation = e2_rotation_action()
    checks.flag("E(2): axiomas de grupo (amostral)", validate_parametric_group(e2_group(), seed=seed).passed)
    checks.flag("E(2): ação de rotação (amostral)", validate_smooth_action(rotation, seed=seed).passed)

    report = sampled_condition_check(rotation, rotation, kernel_lambda=e2_translation_kernel, seed=seed, tol=checks.tol)
    checks.flag(
        "E(2)∗E(2) com ações de rotação satisfaz a condição",
        report.passed,
        f"resíduo máximo {report.max_residual:.3e} em {report.n_samples} amostras",
    )
    heis = heisenberg_inner_action()
    report = sampled_condition_check(heis, heis, kernel_lambda=heisenberg_center_kernel, seed=seed, tol=checks.tol)
    checks.flag("Γ∗Γ interno satisfaz a condição", report.passed, f"resíduo máximo {report.max_residual:.3e}")

    inner = e2_inner_action()
    report = sampled_condition_check(inner, inner, kernel_lambda=e2_center_kernel, seed=seed, tol=checks.tol)
    checks.flag(
        "E(2)∗E(2) interno viola a condição",
        not report.passed,
        f"resíduo máximo {report.max_residual:.3e}",
    )
    nilpotent = is_two_step_nilpotent(builtin("e2_canonical").algebra, checks.tol)
    checks.flag(
        "E(2) não é 2-nilpotente",
        not nilpotent.holds and nilpotent.witness == (0, 1, 0),
        f"testemunha {nilpotent.witness}, resíduo {format_scalar(nilpotent.residual)}",
    )


def _example2(checks: _Checks, seed: int) -> None:
    bundle = builtin("heisenberg")
    checks.flag("Heisenberg: axiomas de grupo (amostral)", validate_parametric_group(heisenberg_group(), seed=seed).passed)
    case = derivation_cases(["shear"])["shear"]
    derived = derive_infinitesimal_action(case.action, target_algebra=case.target_algebra)
    checks.matrix("cisalhamento: L(y) derivada", case.exact.matrices[0], derived.action.matrices[0], DERIVED_TOL)
    checks.flag("cisalhamento: convergência h → h/2", derived.converged, f"C ≈ {derived.constant:.3e}")
    semidirect = build_twisted_algebra(bundle.twist_spec, checks.tol)
    checks.constants("R² ⋊ R¹ reproduz o colchete de Heisenberg", bundle.expected.constants, semidirect)
    checks.flag("R² ⋊ R¹ satisfaz Jacobi", check_jacobi(semidirect, checks.tol).passed)


def _example3(checks: _Checks, seed: int, golden_dir: Optional[Path]) -> None:
    gamma = checks.builtin_and_golden("heisenberg", golden_dir)
    twisted = checks.builtin_and_golden("gamma_star_gamma", golden_dir)

    six = verify_six_rho(gamma, checks.tol)
    checks.flag("ρ′ = 6ρ", six.passed, f"ρ = {format_scalar(six.rho)}, ρ′ = {format_scalar(six.rho_prime)}")
    checks.flag("Γ∗Γ satisfaz Jacobi", check_jacobi(twisted, checks.tol).passed)
    checks.flag("Γ∗Γ é 2-nilpotente", is_two_step_nilpotent(twisted, checks.tol).holds)

    spec = builtin("gamma_star_gamma").twist_spec
    labels = twisted.basis_labels
    printed = {
        (1, 3): {2: -1.0},
        (1, 6): {2: -1.0, 5: -1.0},
        (4, 3): {2: -1.0, 5: -1.0},
        (4, 6): {5: -1.0},
    }
    for (i, j), terms in printed.items():
        expected = _combination(6, terms)
        checks.vector(f"[E{i}, E{j}] pelo colchete torcido", expected, twisted_bracket(spec, _unit(6, i - 1), _unit(6, j - 1)), labels)
        checks.vector(f"[E{i}, E{j}] pelas constantes", expected, bracket(twisted, _unit(6, i - 1), _unit(6, j - 1)), labels)

    group = heisenberg_group()
    conjugation = conjugation_action(group)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(200):
        h, g = group.sample(rng), group.sample(rng)
        worst = max(worst, group.residual(conjugation.apply(h, g), heisenberg_printed_conjugation(h, g)))
    checks.flag("fórmula impressa de λ coincide com a conjugação", worst <= checks.tol, f"resíduo máximo {worst:.3e}")


def _example4(checks: _Checks, golden_dir: Optional[Path]) -> None:
    checks.builtin_and_golden("e2_canonical", golden_dir)
    twisted = checks.builtin_and_golden("e2_star_e2_canonical", golden_dir)
    bundle = builtin("e2_star_e2_canonical")
    spec = bundle.twist_spec

    checks.flag("L é derivação de E(2)", check_derivation_property(spec.L, spec.g_algebra, checks.tol).passed)
    checks.flag("E(2)∗E(2) satisfaz Jacobi", check_jacobi(twisted, checks.tol).passed)
    checks.vector(
        "[E1, E5] pelo colchete torcido",
        _combination(6, {6: -S}),
        twisted_bracket(spec, _unit(6, 0), _unit(6, 4)),
        twisted.basis_labels,
    )
    checks.vector("L(E1)(E2)", _combination(3, {3: -S}), spec.L.apply(_unit(3, 0), _unit(3, 1)), ["E1", "E2", "E3"])
    checks.vector("L(E1)(E3)", _combination(3, {2: S}), spec.L.apply(_unit(3, 0), _unit(3, 2)), ["E1", "E2", "E3"])
    _derived_vs_exact(checks, "e2_rotation_canonical", lambda L: TwistSpec(spec.g_algebra, spec.h_algebra, L, L))


def _example5(checks: _Checks, golden_dir: Optional[Path]) -> None:
    checks.builtin_and_golden("e2_skew", golden_dir)
    twisted = checks.builtin_and_golden("e2_star_e2_skew", golden_dir)
    spec = builtin("e2_star_e2_skew").twist_spec

    checks.vector(
        "L(E4)(E1)",
        _combination(3, {2: 0.25, 3: -0.25}),
        spec.L.apply(_unit(3, 0), _unit(3, 0)),
        ["E1", "E2", "E3"],
    )
    checks.vector(
        "[E1, E2]",
        _combination(6, {3: -0.5}),
        bracket(twisted, basis_vector(twisted, 0), basis_vector(twisted, 1)),
        twisted.basis_labels,
    )
    # a base oblíqua é obtida da álgebra bruta de E(2) pela mudança de base
    raw = e2_raw_algebra()
    checks.vector(
        "[b1, b2] nas coordenadas brutas",
        np.array([0.0, 0.0, -0.5]),
        bracket(raw, [0.5, 0.5, 0.5], [0.0, 1.0, 0.0]),
        raw.basis_labels,
    )
    _derived_vs_exact(checks, "e2_rotation_skew", lambda L: TwistSpec(spec.g_algebra, spec.h_algebra, L, L))


def reproduce(
    target: str,
    tol: Optional[float] = None,
    seed: Optional[int] = None,
    golden_dir: Optional[Path] = None,
) -> List[ReproductionCheck]:
    """
    Recalcula um exemplo (ou todos) e compara com as referências.

    Args:
        target: example1 … example5 ou all
        tol: Tolerância das comparações exatas
        seed: Semente das verificações amostrais
        golden_dir: Diretório dos arquivos dourados

    Returns:
        Lista de ReproductionCheck, com diff unificado nas falhas de matriz
    """
    if target == "all":
        return [check for name in EXAMPLE_TARGETS for check in reproduce(name, tol, seed, golden_dir)]
    if target not in EXAMPLE_TARGETS:
        raise ValueError(f"Alvo desconhecido {target!r}; use {', '.join(EXAMPLE_TARGETS)} ou all")

    tol = resolve_tolerance(tol)
    seed = get_settings().seed if seed is None else seed
    checks = _Checks(target, tol)
    if target == "example1":
        _example1(checks, seed)
    elif target == "example2":
        _example2(checks, seed)
    elif target == "example3":
        _example3(checks, seed, golden_dir)
    elif target == "example4":
        _example4(checks, golden_dir)
    else:
        _example5(checks, golden_dir)

    failed = [c.check for c in checks.items if not c.passed]
    if failed:
        logger.warning(f"{target}: {len(failed)} verificação(ões) falharam: {', '.join(failed)}")
    else:
        logger.info(f"{target}: {len(checks.items)} verificações reproduzidas")
    return checks.items
