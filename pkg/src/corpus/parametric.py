"""
Grupos contínuos dos exemplos em coordenadas globais e as ações suaves entre eles.

Heisenberg em coordenadas (a, b, c) com (a1, b1, c1)(a2, b2, c2) =
(a1 + a2, b1 + b2 + c1·a2, c1 + c2). E(2) em coordenadas (θ, ξ1, ξ2) com
(θ1, ξ1)(θ2, ξ2) = (θ1 + θ2, ξ1 + R(θ1)ξ2) e R(θ) = [[cos θ, sin θ], [-sin θ, cos θ]];
θ não é reduzido módulo 2π.
"""

import logging
from typing import Callable, Optional

import numpy as np

from ..entity import Failure, ParametricGroup, SampledCheckReport, SmoothAction
from ..utils.config import get_settings, resolve_tolerance

logger = logging.getLogger(__name__)

KernelTest = Callable[[np.ndarray], float]


# ---------------------------------------------------------------------------
# Heisenberg
# ---------------------------------------------------------------------------


def _heisenberg_compose(x, y):
    a1, b1, c1 = x
    a2, b2, c2 = y
    return np.array([a1 + a2, b1 + b2 + c1 * a2, c1 + c2])


def _heisenberg_invert(x):
    a, b, c = x
    return np.array([-a, -b + a * c, -c])


def _heisenberg_exp(v):
    x1, x2, x3 = v
    return np.array([x1, x2 + 0.5 * x1 * x3, x3])


def _heisenberg_log(p):
    a, b, c = p
    return np.array([a, b - 0.5 * a * c, c])


def heisenberg_group() -> ParametricGroup:
    return ParametricGroup(
        name="heisenberg",
        dim=3,
        compose=_heisenberg_compose,
        invert=_heisenberg_invert,
        identity=np.zeros(3),
        sample=lambda rng: rng.uniform(-2.0, 2.0, size=3),
        exp=_heisenberg_exp,
        log=_heisenberg_log,
    )


def heisenberg_printed_conjugation(h, g) -> np.ndarray:
    """Fórmula em coordenadas (A2, B2 + C1·A2 - C2·A1, C2) para h·g·h⁻¹."""
    a1, _, c1 = h
    a2, b2, c2 = g
    return np.array([a2, b2 + c1 * a2 - c2 * a1, c2])


def heisenberg_center_kernel(p) -> float:
    """Distância ao centro {(0, b, 0)}."""
    return float(max(abs(p[0]), abs(p[2])))


# ---------------------------------------------------------------------------
# E(2)
# ---------------------------------------------------------------------------


def rotation(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, s], [-s, c]])


def _v_matrix(w: float) -> np.ndarray:
    # V(w) = ∫_0^1 R(tw) dt
    a = np.sinc(w / np.pi)
    b = 0.5 * w * np.sinc(w / (2.0 * np.pi)) ** 2
    return np.array([[a, b], [-b, a]])


def _e2_compose(x, y):
    return np.concatenate([[x[0] + y[0]], x[1:] + rotation(x[0]) @ y[1:]])


def _e2_invert(x):
    return np.concatenate([[-x[0]], -(rotation(-x[0]) @ x[1:])])


def _e2_exp(v):
    return np.concatenate([[v[0]], _v_matrix(v[0]) @ v[1:]])


def _e2_log(p):
    return np.concatenate([[p[0]], np.linalg.solve(_v_matrix(p[0]), p[1:])])


def wrap_angle(theta: float) -> float:
    return float(np.arctan2(np.sin(theta), np.cos(theta)))


def _e2_distance(x, y) -> float:
    return float(max(abs(wrap_angle(x[0] - y[0])), np.max(np.abs(np.asarray(x[1:]) - np.asarray(y[1:])))))


def e2_group() -> ParametricGroup:
    return ParametricGroup(
        name="e2",
        dim=3,
        compose=_e2_compose,
        invert=_e2_invert,
        identity=np.zeros(3),
        sample=lambda rng: np.concatenate([[rng.uniform(-np.pi, np.pi)], rng.uniform(-2.0, 2.0, size=2)]),
        exp=_e2_exp,
        log=_e2_log,
        distance=_e2_distance,
    )


def render_e2_matrix(p) -> np.ndarray:
    """Matriz homogênea 3×3 [[R(θ), ξ], [0, 1]] de um elemento de E(2)."""
    matrix = np.eye(3)
    matrix[:2, :2] = rotation(p[0])
    matrix[:2, 2] = p[1:]
    return matrix


def e2_translation_kernel(p) -> float:
    """Distância ao subgrupo das translações (θ ≡ 0)."""
    return abs(wrap_angle(p[0]))


def e2_center_kernel(p) -> float:
    """Distância ao centro trivial de E(2)."""
    return float(max(abs(wrap_angle(p[0])), np.max(np.abs(p[1:]))))


# ---------------------------------------------------------------------------
# R^n
# ---------------------------------------------------------------------------


def r_group(n: int) -> ParametricGroup:
    """Grupo aditivo R^n, com exp e log identidades."""
    return ParametricGroup(
        name=f"r{n}",
        dim=n,
        compose=lambda x, y: np.asarray(x, dtype=float) + np.asarray(y, dtype=float),
        invert=lambda x: -np.asarray(x, dtype=float),
        identity=np.zeros(n),
        sample=lambda rng: rng.uniform(-2.0, 2.0, size=n),
        exp=lambda v: np.asarray(v, dtype=float),
        log=lambda p: np.asarray(p, dtype=float),
    )


# ---------------------------------------------------------------------------
# ações
# ---------------------------------------------------------------------------


def conjugation_action(group: ParametricGroup) -> SmoothAction:
    """Ação interna h·g·h⁻¹."""
    return SmoothAction(
        name=f"{group.name}_inner",
        acting=group,
        target=group,
        apply=lambda h, g: group.compose(group.compose(h, g), group.invert(h)),
    )


def heisenberg_inner_action() -> SmoothAction:
    return conjugation_action(heisenberg_group())


def e2_inner_action() -> SmoothAction:
    return conjugation_action(e2_group())


def e2_rotation_action() -> SmoothAction:
    """λ((θh, ξh))((θg, ξg)) = (θg, R(θh)ξg): a parte de rotação de h gira a translação de g."""
    group = e2_group()
    return SmoothAction(
        name="e2_rotation",
        acting=group,
        target=group,
        apply=lambda h, g: np.concatenate([[g[0]], rotation(h[0]) @ np.asarray(g[1:])]),
    )


def shear_action() -> SmoothAction:
    """R¹ agindo em R² por y·(x1, x2) = (x1, x2 + y·x1)."""
    return SmoothAction(
        name="shear",
        acting=r_group(1),
        target=r_group(2),
        apply=lambda y, x: np.array([x[0], x[1] + y[0] * x[0]]),
    )


def trivial_smooth_action(acting: ParametricGroup, target: ParametricGroup) -> SmoothAction:
    return SmoothAction(
        name=f"trivial_{acting.name}_{target.name}",
        acting=acting,
        target=target,
        apply=lambda h, g: np.asarray(g, dtype=float).copy(),
    )


# ---------------------------------------------------------------------------
# verificações amostrais dos axiomas
# ---------------------------------------------------------------------------


def validate_parametric_group(
    group: ParametricGroup,
    n_samples: int = 200,
    seed: Optional[int] = None,
    tol: Optional[float] = None,
) -> SampledCheckReport:
    """Identidade, inverso e associatividade em amostras; estatístico, não prova."""
    tol = resolve_tolerance(tol)
    seed = get_settings().seed if seed is None else seed
    rng = np.random.default_rng(seed)
    failures = []
    worst = 0.0
    for index in range(n_samples):
        x, y, z = group.sample(rng), group.sample(rng), group.sample(rng)
        residuals = {
            "identidade": max(
                group.residual(group.compose(group.identity, x), x),
                group.residual(group.compose(x, group.identity), x),
            ),
            "inverso": max(
                group.residual(group.compose(x, group.invert(x)), group.identity),
                group.residual(group.compose(group.invert(x), x), group.identity),
            ),
            "associatividade": group.residual(
                group.compose(group.compose(x, y), z), group.compose(x, group.compose(y, z))
            ),
        }
        for axiom, residual in residuals.items():
            worst = max(worst, residual)
            if residual > tol:
                failures.append(Failure((index,), residual, axiom))
    return SampledCheckReport(f"group:{group.name}", n_samples, seed, worst, tol, failures)


def validate_smooth_action(
    action: SmoothAction,
    n_samples: int = 200,
    seed: Optional[int] = None,
    tol: Optional[float] = None,
) -> SampledCheckReport:
    """Identidades, lei de ação e automorfismo do alvo em amostras."""
    tol = resolve_tolerance(tol)
    seed = get_settings().seed if seed is None else seed
    rng = np.random.default_rng(seed)
    H, G = action.acting, action.target
    failures = []
    worst = 0.0
    for index in range(n_samples):
        h1, h2 = H.sample(rng), H.sample(rng)
        x, y = G.sample(rng), G.sample(rng)
        residuals = {
            "identidade atuante": G.residual(action.apply(H.identity, x), x),
            "identidade alvo": G.residual(action.apply(h1, G.identity), G.identity),
            "lei de ação": G.residual(
                action.apply(H.compose(h1, h2), x), action.apply(h1, action.apply(h2, x))
            ),
            "automorfismo": G.residual(
                action.apply(h1, G.compose(x, y)), G.compose(action.apply(h1, x), action.apply(h1, y))
            ),
        }
        for axiom, residual in residuals.items():
            worst = max(worst, residual)
            if residual > tol:
                failures.append(Failure((index,), residual, axiom))
    return SampledCheckReport(f"action:{action.name}", n_samples, seed, worst, tol, failures)
