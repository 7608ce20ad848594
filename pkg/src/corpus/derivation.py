"""
Derivação numérica da ação infinitesimal L(Y)(X) = ∂²/∂t∂s log λ(exp tY)(exp sX)
por diferenças centrais mistas, com controle de convergência por passo e meio passo.
"""

import logging
from typing import Optional

import numpy as np
from scipy import linalg

from ..core.twisted_lie import check_derivation_property
from ..entity import DerivedAction, InfinitesimalAction, LieAlgebra, SmoothAction
from ..utils.config import get_settings

logger = logging.getLogger(__name__)

CONVERGENCE_TOL = 1e-6


def _mixed_central_difference(action: SmoothAction, y: np.ndarray, x: np.ndarray, step: float) -> np.ndarray:
    acting, target = action.acting, action.target

    def F(t: float, s: float) -> np.ndarray:
        return target.log(action.apply(acting.exp(t * y), target.exp(s * x)))

    h = step
    return (F(h, h) - F(h, -h) - F(-h, h) + F(-h, -h)) / (4.0 * h * h)


def _action_matrices(action: SmoothAction, basis_acting: np.ndarray, basis_target: np.ndarray, step: float) -> np.ndarray:
    m, n = basis_acting.shape[0], basis_target.shape[0]
    matrices = np.zeros((m, n, n))
    for a in range(m):
        images = np.column_stack(
            [_mixed_central_difference(action, basis_acting[a], basis_target[b], step) for b in range(n)]
        )
        # coordenadas das imagens na base alvo
        matrices[a] = linalg.solve(basis_target.T, images)
    return matrices


def derive_infinitesimal_action(
    action: SmoothAction,
    basis_acting=None,
    basis_target=None,
    step: Optional[float] = None,
    target_algebra: Optional[LieAlgebra] = None,
    convergence_tol: float = CONVERGENCE_TOL,
) -> DerivedAction:
    """
    Aproxima L nas bases dadas por diferenças finitas centrais mistas.

    Compara o resultado com passo h e h/2; a diferença estima o erro e
    C = 4·diferença/(3h²) a constante de segunda ordem.

    Args:
        action: Ação suave λ: H × G → G
        basis_acting: Linhas são os vetores da base de L(H) em coordenadas
        basis_target: Linhas são os vetores da base de L(G) em coordenadas
        step: Passo h (padrão TWISTPROD_FD_STEP)
        target_algebra: Álgebra alvo para verificar a propriedade de derivação
        convergence_tol: Diferença máxima aceita entre h e h/2

    Returns:
        DerivedAction com as matrizes calculadas com passo h/2
    """
    step = get_settings().fd_step if step is None else float(step)
    if step <= 0:
        raise ValueError(f"Passo deve ser positivo, recebido {step}")
    basis_acting = np.eye(action.acting.dim) if basis_acting is None else np.asarray(basis_acting, dtype=float)
    basis_target = np.eye(action.target.dim) if basis_target is None else np.asarray(basis_target, dtype=float)

    coarse = _action_matrices(action, basis_acting, basis_target, step)
    fine = _action_matrices(action, basis_acting, basis_target, step / 2.0)
    residual = float(np.max(np.abs(coarse - fine), initial=0.0))
    constant = 4.0 * residual / (3.0 * step * step)
    converged = residual <= convergence_tol
    if not converged:
        logger.warning(f"Diferenças finitas de {action.name} não convergiram: resíduo {residual:.3e}")

    derived = InfinitesimalAction(basis_acting.shape[0], basis_target.shape[0], fine)
    derivation = None
    if target_algebra is not None:
        derivation = check_derivation_property(derived, target_algebra, tol=convergence_tol)
        if not derivation.passed:
            logger.warning(f"Ação derivada de {action.name} não é derivação de {target_algebra.metric_note}")
    return DerivedAction(derived, step, residual, constant, converged, derivation)
