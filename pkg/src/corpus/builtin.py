"""
Exemplos embutidos: Heisenberg, E(2) nas bases canônica e oblíqua, os
torcimentos Γ∗Γ e E(2)∗E(2), e os casos de derivação numérica com forma fechada.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy import linalg

from ..core.lie_core import abelian_algebra, adjoint_action, change_basis, heisenberg_algebra, make_algebra
from ..core.twisted_lie import build_inner_twist, build_twisted_algebra, inner_twist_spec, zero_action
from ..entity import (
    BuiltinBundle,
    DerivationCase,
    ExpectedValues,
    InfinitesimalAction,
    LieAlgebra,
    TwistSpec,
    UnknownBuiltinError,
)
from .parametric import (
    e2_inner_action,
    e2_rotation_action,
    heisenberg_group,
    heisenberg_inner_action,
    shear_action,
    trivial_smooth_action,
)

logger = logging.getLogger(__name__)

S = float(np.sqrt(0.5))

# linhas: vetores da base nas coordenadas (w, v1, v2) da álgebra de E(2)
E2_CANONICAL_BASIS = np.diag([S, 1.0, 1.0])
E2_SKEW_BASIS = np.array(
    [
        [0.5, 0.5, 0.5],
        [0.0, 1.0, 0.0],
        [0.0, 0.0, 1.0],
    ]
)

# derivada da rotação de translações: ξ ↦ (ξ2, -ξ1) em (v1, v2)
_ROTATION_GENERATOR = np.array(
    [
        [0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, -1.0, 0.0],
    ]
)

BUILTIN_NAMES = (
    "heisenberg",
    "e2_canonical",
    "e2_skew",
    "gamma_star_gamma",
    "e2_star_e2_canonical",
    "e2_star_e2_skew",
)

HEISENBERG_SECTIONAL = np.array(
    [
        [0.0, 0.25, -0.75],
        [0.25, 0.0, 0.25],
        [-0.75, 0.25, 0.0],
    ]
)

GAMMA_STAR_GAMMA_SECTIONAL = np.array(
    [
        [0.0, 0.5, -0.75, 0.0, 0.25, -1.5],
        [0.5, 0.0, 0.5, 0.25, 0.0, 0.25],
        [-0.75, 0.5, 0.0, -1.5, 0.25, 0.0],
        [0.0, 0.25, -1.5, 0.0, 0.5, -0.75],
        [0.25, 0.0, 0.25, 0.5, 0.0, 0.5],
        [-1.5, 0.25, 0.0, -0.75, 0.5, 0.0],
    ]
)

_A = 1.0 / 64.0
_B = -3.0 / 16.0
E2_STAR_E2_SKEW_SECTIONAL = np.array(
    [
        [0.0, _A, _A, _B, _A, _A],
        [_A, 0.0, 0.0, _A, 0.0, 0.0],
        [_A, 0.0, 0.0, _A, 0.0, 0.0],
        [_B, _A, _A, 0.0, _A, _A],
        [_A, 0.0, 0.0, _A, 0.0, 0.0],
        [_A, 0.0, 0.0, _A, 0.0, 0.0],
    ]
)


def e2_raw_algebra() -> LieAlgebra:
    """Álgebra de E(2) em (w, v1, v2): [f1, f2] = -f3 e [f1, f3] = f2."""
    return make_algebra(
        3,
        [(1, 2, 3, -1.0), (1, 3, 2, 1.0)],
        labels=["w", "v1", "v2"],
        metric_note="E(2) em coordenadas de rotação e translação",
    )


def e2_algebra(basis, metric_note: str = "E(2), base declarada ortonormal") -> LieAlgebra:
    return change_basis(e2_raw_algebra(), basis, metric_note=metric_note)


def e2_rotation_matrices(basis) -> InfinitesimalAction:
    """
    Forma fechada de L para a ação (θh, ξh)·(θg, ξg) = (θg, R(θh)ξg) numa base dada.

    L(b_a) age nas coordenadas brutas como w_a vezes o gerador de rotação; as
    imagens dos vetores da base são reexpressas na mesma base.
    """
    basis = np.asarray(basis, dtype=np.float64)
    n = basis.shape[0]
    matrices = np.zeros((n, n, n))
    for a in range(n):
        raw = basis[a, 0] * _ROTATION_GENERATOR
        matrices[a] = linalg.solve(basis.T, raw @ basis.T)
    return InfinitesimalAction(n, n, matrices)


def shear_matrices() -> InfinitesimalAction:
    """L(y)(x1, x2) = (0, y·x1)."""
    return InfinitesimalAction(1, 2, np.array([[[0.0, 0.0], [1.0, 0.0]]]))


def semidirect_heisenberg_spec() -> TwistSpec:
    """R² ⋊ R¹ com M = 0: o produto torcido cuja álgebra é a de Heisenberg."""
    return TwistSpec(abelian_algebra(2), abelian_algebra(1), shear_matrices(), zero_action(2, 1))


def e2_twist_spec(basis) -> TwistSpec:
    e2 = e2_algebra(basis)
    L = e2_rotation_matrices(basis)
    return TwistSpec(e2, e2, L, L)


def _constants(pairs: Sequence[tuple]) -> List[tuple]:
    return [(int(i), int(j), int(k), float(v)) for i, j, k, v in pairs]


def _heisenberg() -> BuiltinBundle:
    gamma = heisenberg_algebra()
    return BuiltinBundle(
        name="heisenberg",
        description="Álgebra de Heisenberg Γ; também o R² ⋊ R¹ da ação de cisalhamento",
        algebra=gamma,
        expected=ExpectedValues(HEISENBERG_SECTIONAL, -0.5, _constants([(1, 3, 2, -1.0)])),
        algebras={"gamma": gamma, "r2": abelian_algebra(2), "r1": abelian_algebra(1)},
        actions={"ad": adjoint_action(gamma), "shear": shear_matrices()},
        twist_spec=semidirect_heisenberg_spec(),
        smooth_actions={"shear": shear_action(), "inner": heisenberg_inner_action()},
    )


def _e2(name: str, basis, constants: Sequence[tuple], description: str) -> BuiltinBundle:
    e2 = e2_algebra(basis)
    return BuiltinBundle(
        name=name,
        description=description,
        algebra=e2,
        expected=ExpectedValues(np.zeros((3, 3)), 0.0, _constants(constants)),
        algebras={"e2": e2, "raw": e2_raw_algebra()},
        actions={"rotation": e2_rotation_matrices(basis), "ad": adjoint_action(e2)},
        smooth_actions={"rotation": e2_rotation_action(), "inner": e2_inner_action()},
    )


def _gamma_star_gamma() -> BuiltinBundle:
    gamma = heisenberg_algebra()
    return BuiltinBundle(
        name="gamma_star_gamma",
        description="Torcimento interno Γ∗Γ da álgebra de Heisenberg",
        algebra=build_inner_twist(gamma),
        expected=ExpectedValues(
            GAMMA_STAR_GAMMA_SECTIONAL,
            -3.0,
            _constants(
                [
                    (1, 3, 2, -1.0),
                    (1, 6, 2, -1.0),
                    (1, 6, 5, -1.0),
                    (3, 4, 2, 1.0),
                    (3, 4, 5, 1.0),
                    (4, 6, 5, -1.0),
                ]
            ),
        ),
        algebras={"gamma": gamma},
        actions={"ad": adjoint_action(gamma)},
        twist_spec=inner_twist_spec(gamma),
        smooth_actions={"inner": heisenberg_inner_action()},
    )


def _e2_star_e2(name: str, basis, sectional, scalar: float, constants, description: str) -> BuiltinBundle:
    spec = e2_twist_spec(basis)
    return BuiltinBundle(
        name=name,
        description=description,
        algebra=build_twisted_algebra(spec),
        expected=ExpectedValues(sectional, scalar, _constants(constants)),
        algebras={"e2": spec.g_algebra},
        actions={"L": spec.L, "M": spec.M},
        twist_spec=spec,
        smooth_actions={"rotation": e2_rotation_action()},
    )


_BUILDERS = {
    "heisenberg": _heisenberg,
    "e2_canonical": lambda: _e2(
        "e2_canonical",
        E2_CANONICAL_BASIS,
        [(1, 2, 3, -S), (1, 3, 2, S)],
        "E(2) na base canônica (rotação escalada por 1/√2)",
    ),
    "e2_skew": lambda: _e2(
        "e2_skew",
        E2_SKEW_BASIS,
        [(1, 2, 3, -0.5), (1, 3, 2, 0.5)],
        "E(2) na base oblíqua b1 = (½, ½, ½)",
    ),
    "gamma_star_gamma": _gamma_star_gamma,
    "e2_star_e2_canonical": lambda: _e2_star_e2(
        "e2_star_e2_canonical",
        E2_CANONICAL_BASIS,
        np.zeros((6, 6)),
        0.0,
        [
            (1, 2, 3, -S),
            (1, 3, 2, S),
            (1, 5, 6, -S),
            (1, 6, 5, S),
            (2, 4, 3, S),
            (3, 4, 2, -S),
            (4, 5, 6, -S),
            (4, 6, 5, S),
        ],
        "E(2)∗E(2) com as ações de rotação na base canônica: métrica plana",
    ),
    "e2_star_e2_skew": lambda: _e2_star_e2(
        "e2_star_e2_skew",
        E2_SKEW_BASIS,
        E2_STAR_E2_SKEW_SECTIONAL,
        -0.125,
        [
            (1, 2, 3, -0.5),
            (1, 3, 2, 0.5),
            (1, 4, 2, -0.25),
            (1, 4, 3, 0.25),
            (1, 4, 5, 0.25),
            (1, 4, 6, -0.25),
            (1, 5, 6, -0.5),
            (1, 6, 5, 0.5),
            (2, 4, 3, 0.5),
            (3, 4, 2, -0.5),
            (4, 5, 6, -0.5),
            (4, 6, 5, 0.5),
        ],
        "E(2)∗E(2) na base oblíqua: curvatura escalar -1/8",
    ),
}


@lru_cache(maxsize=None)
def builtin(name: str) -> BuiltinBundle:
    """
    Pacote de um exemplo embutido.

    Args:
        name: Um de BUILTIN_NAMES

    Returns:
        BuiltinBundle com a construção e os valores esperados
    """
    if name not in _BUILDERS:
        raise UnknownBuiltinError(name, BUILTIN_NAMES)
    logger.debug(f"Construindo exemplo embutido {name}")
    return _BUILDERS[name]()


def derivation_cases(names: Optional[Sequence[str]] = None) -> Dict[str, DerivationCase]:
    """Ações suaves cujas derivadas têm forma fechada, por nome."""
    identity3 = np.eye(3)
    heisenberg = heisenberg_algebra()
    cases = {
        "shear": DerivationCase("shear", shear_action(), np.eye(1), np.eye(2), abelian_algebra(2), shear_matrices()),
        "e2_rotation_canonical": DerivationCase(
            "e2_rotation_canonical",
            e2_rotation_action(),
            E2_CANONICAL_BASIS,
            E2_CANONICAL_BASIS,
            e2_algebra(E2_CANONICAL_BASIS),
            e2_rotation_matrices(E2_CANONICAL_BASIS),
        ),
        "e2_rotation_skew": DerivationCase(
            "e2_rotation_skew",
            e2_rotation_action(),
            E2_SKEW_BASIS,
            E2_SKEW_BASIS,
            e2_algebra(E2_SKEW_BASIS),
            e2_rotation_matrices(E2_SKEW_BASIS),
        ),
        "heisenberg_inner": DerivationCase(
            "heisenberg_inner", heisenberg_inner_action(), identity3, identity3, heisenberg, adjoint_action(heisenberg)
        ),
        "trivial": DerivationCase(
            "trivial",
            trivial_smooth_action(heisenberg_group(), heisenberg_group()),
            identity3,
            identity3,
            heisenberg,
            zero_action(3, 3),
        ),
    }
    if names is None:
        return cases
    unknown = [n for n in names if n not in cases]
    if unknown:
        raise UnknownBuiltinError(unknown[0], sorted(cases))
    return {n: cases[n] for n in names}
