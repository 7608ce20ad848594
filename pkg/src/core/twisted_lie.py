"""
Álgebra de Lie do produto torcido: colchete torcido, constantes de estrutura por
blocos e o caso das ações internas.
"""

import logging
from typing import Optional

import numpy as np

from ..entity import (
    DimensionMismatchError,
    Failure,
    InfinitesimalAction,
    LieAlgebra,
    StructuralError,
    TwistResult,
    TwistSpec,
    ValidationReport,
)
from ..utils.config import resolve_tolerance
from .lie_core import adjoint_action, check_jacobi, is_two_step_nilpotent

logger = logging.getLogger(__name__)


def zero_action(acting_dim: int, target_dim: int) -> InfinitesimalAction:
    return InfinitesimalAction(acting_dim, target_dim, np.zeros((acting_dim, target_dim, target_dim)))


def check_derivation_property(
    action: InfinitesimalAction,
    target: LieAlgebra,
    tol: Optional[float] = None,
) -> ValidationReport:
    """
    Verifica D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j] para cada matriz D da ação.

    Falhas são indexadas por (a, i, j): vetor atuante e par da base do alvo.
    """
    tol = resolve_tolerance(tol)
    if action.target_dim != target.dim:
        raise DimensionMismatchError("ação e álgebra alvo", target.dim, action.target_dim)
    c = target.constants
    D = action.matrices
    lhs = np.einsum("ijl,akl->aijk", c, D)
    rhs = np.einsum("ali,ljk->aijk", D, c) + np.einsum("alj,ilk->aijk", D, c)
    residual = np.max(np.abs(lhs - rhs), axis=3, initial=0.0)
    failures = [
        Failure(tuple(int(v) for v in idx), float(residual[tuple(idx)]), "não é derivação")
        for idx in np.argwhere(residual > tol)
    ]
    return ValidationReport("derivation", failures, tol)


def twisted_bracket(spec: TwistSpec, z1, z2) -> np.ndarray:
    """
    Colchete em L(G) ⊕ L(H) com z = (X, Y):

        [z1, z2] = ([X1, X2] + L(Y1)X2 - L(Y2)X1, [Y1, Y2] + M(X1)Y2 - M(X2)Y1)
    """
    n, m = spec.n, spec.m
    z1 = np.asarray(z1, dtype=np.float64)
    z2 = np.asarray(z2, dtype=np.float64)
    for name, z in (("z1", z1), ("z2", z2)):
        if z.shape != (n + m,):
            raise DimensionMismatchError(f"vetor {name}", n + m, int(z.size))
    x1, y1 = z1[:n], z1[n:]
    x2, y2 = z2[:n], z2[n:]
    beta = spec.g_algebra.constants
    gamma = spec.h_algebra.constants
    g_part = np.einsum("i,j,ijk->k", x1, x2, beta) + spec.L.apply(y1, x2) - spec.L.apply(y2, x1)
    h_part = np.einsum("i,j,ijk->k", y1, y2, gamma) + spec.M.apply(x1, y2) - spec.M.apply(x2, y1)
    return np.concatenate([g_part, h_part])


def build_twisted_algebra(spec: TwistSpec, tol: Optional[float] = None) -> LieAlgebra:
    """
    Constantes de estrutura do produto torcido na base (E_1..E_n, E_{n+1}..E_{n+m}).

    Os blocos i ≤ n < j e i > n ≥ j são calculados separadamente a partir de L e M
    e precisam ser pares antissimétricos; divergência é erro estrutural.

    Args:
        spec: Álgebras L(G), L(H) e ações L, M
        tol: Tolerância de coerência entre os dois blocos cruzados

    Returns:
        LieAlgebra de dimensão n + m
    """
    tol = resolve_tolerance(tol)
    n, m = spec.n, spec.m
    Lm = spec.L.matrices
    Mm = spec.M.matrices

    c = np.zeros((n + m, n + m, n + m))
    c[:n, :n, :n] = spec.g_algebra.constants
    c[n:, n:, n:] = spec.h_algebra.constants

    # [E_i, E_{n+b}] = -L(e_b)(e_i) + M(e_i)(e_b)
    g_then_h = np.zeros((n, m, n + m))
    g_then_h[:, :, :n] = -np.einsum("bki->ibk", Lm)
    g_then_h[:, :, n:] = np.einsum("ikb->ibk", Mm)

    # [E_{n+a}, E_j] = L(e_a)(e_j) - M(e_j)(e_a)
    h_then_g = np.zeros((m, n, n + m))
    h_then_g[:, :, :n] = np.einsum("akj->ajk", Lm)
    h_then_g[:, :, n:] = -np.einsum("jka->ajk", Mm)

    # os dois blocos são pares antissimétricos por construção; só diverge com entradas não finitas em L ou M
    mismatch = np.abs(h_then_g + np.transpose(g_then_h, (1, 0, 2)))
    if not np.all(mismatch <= tol):
        worst = np.unravel_index(int(np.argmax(np.where(np.isnan(mismatch), np.inf, mismatch))), mismatch.shape)
        raise StructuralError(
            f"Blocos cruzados incoerentes em (n+{worst[0] + 1}, {worst[1] + 1}, {worst[2] + 1}): "
            f"resíduo {mismatch[worst]}"
        )

    c[:n, n:, :] = g_then_h
    c[n:, :n, :] = -np.transpose(g_then_h, (1, 0, 2))

    labels = [f"E{i + 1}" for i in range(n + m)]
    algebra = LieAlgebra.from_entries(c, labels, metric_note="produto torcido, base E ortonormal")

    jacobi = check_jacobi(algebra, tol)
    if not jacobi.passed:
        logger.warning(
            f"Álgebra torcida não satisfaz Jacobi em {len(jacobi.failures)} triplas; "
            f"primeira {jacobi.first_failure.where}"
        )
    return algebra


def twist_lie(spec: TwistSpec, tol: Optional[float] = None) -> TwistResult:
    """Álgebra torcida junto do relatório de Jacobi; um Jacobi falho é devolvido, nunca silenciado."""
    algebra = build_twisted_algebra(spec, tol)
    return TwistResult(algebra, check_jacobi(algebra, tol))


def direct_sum(g: LieAlgebra, h: LieAlgebra) -> LieAlgebra:
    """Soma direta: o produto torcido com L = M = 0."""
    return build_twisted_algebra(TwistSpec(g, h, zero_action(h.dim, g.dim), zero_action(g.dim, h.dim)))


def inner_twist_spec(m_alg: LieAlgebra) -> TwistSpec:
    """Dados do torcimento interno: L = M = ad."""
    ad = adjoint_action(m_alg)
    return TwistSpec(m_alg, m_alg, ad, ad)


def build_inner_twist(m_alg: LieAlgebra, tol: Optional[float] = None) -> LieAlgebra:
    """
    Álgebra 2n-dimensional do torcimento de M consigo mesma por ações internas.

    Os blocos diagonais e os quatro blocos cruzados copiam α; os blocos (G, G → H)
    e (H, H → G) são nulos.
    """
    nilpotent = is_two_step_nilpotent(m_alg, tol)
    if not nilpotent:
        logger.warning(
            f"Álgebra não é 2-nilpotente (tripla {nilpotent.witness}); o torcimento interno não vem de um grupo"
        )
    n = m_alg.dim
    alpha = m_alg.constants
    c = np.zeros((2 * n, 2 * n, 2 * n))
    c[:n, :n, :n] = alpha
    c[n:, n:, n:] = alpha
    c[:n, n:, :n] = alpha
    c[:n, n:, n:] = alpha
    c[n:, :n, :n] = alpha
    c[n:, :n, n:] = alpha
    labels = [f"E{i + 1}" for i in range(2 * n)]
    return LieAlgebra.from_entries(c, labels, metric_note="torcimento interno, base E ortonormal")
