"""
Curvatura da métrica invariante à esquerda a partir das constantes de estrutura
numa base ortonormal: curvaturas seccionais, escalar, o atalho 2-nilpotente e a
verificação ρ′ = 6ρ do torcimento interno.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np

from ..entity import (
    CurvatureMethod,
    CurvatureReport,
    LieAlgebra,
    PreconditionError,
    SixRhoReport,
)
from ..utils.config import resolve_tolerance
from .lie_core import is_two_step_nilpotent
from .twisted_lie import build_inner_twist

logger = logging.getLogger(__name__)


def sectional_curvatures(alg: LieAlgebra) -> np.ndarray:
    """
    Matriz k_ij das curvaturas seccionais dos planos (e_i, e_j).

    Com a = c_ij^k, b = c_jk^i, d = c_ki^j, cada k contribui
    ½a(-a + b + d) - ¼(a - b + d)(a + b - d) - c_ki^i c_kj^j.
    A soma em k é feita em ordem crescente de k.
    """
    c = alg.constants
    a = c
    b = np.einsum("jki->ijk", c)
    d = np.einsum("kij->ijk", c)
    trace_terms = np.einsum("kii->ki", c)
    terms = 0.5 * a * (-a + b + d) - 0.25 * (a - b + d) * (a + b - d)
    terms = terms - np.einsum("ki,kj->ijk", trace_terms, trace_terms)
    sectional = np.zeros((alg.dim, alg.dim))
    for k in range(alg.dim):
        sectional += terms[:, :, k]
    np.fill_diagonal(sectional, 0.0)
    return sectional


def scalar_curvature(alg: LieAlgebra) -> float:
    """ρ = Σ_{i≠j} k_ij sobre os pares ordenados."""
    return float(sectional_curvatures(alg).sum())


def _require_two_step_nilpotent(alg: LieAlgebra, tol: Optional[float]) -> None:
    nilpotent = is_two_step_nilpotent(alg, tol)
    if not nilpotent:
        raise PreconditionError("A álgebra não é 2-nilpotente", nilpotent.witness)


def scalar_curvature_metabelian(alg: LieAlgebra, tol: Optional[float] = None) -> float:
    """ρ = -¼ Σ_{i,k} ‖[e_i, e_k]‖², válido apenas para álgebras 2-nilpotentes."""
    _require_two_step_nilpotent(alg, tol)
    return float(-0.25 * np.sum(alg.constants**2))


def curvature_report(
    alg: LieAlgebra,
    method: CurvatureMethod = CurvatureMethod.MILNOR_FULL,
    tol: Optional[float] = None,
) -> CurvatureReport:
    sectional = sectional_curvatures(alg)
    if method == CurvatureMethod.METABELIAN_SHORTCUT:
        scalar = scalar_curvature_metabelian(alg, tol)
    else:
        scalar = float(sectional.sum())
    return CurvatureReport(sectional, scalar, CurvatureMethod(method))


def block_scalar_curvatures(alg: LieAlgebra, sizes: Sequence[int]) -> List[float]:
    """Curvatura escalar de cada bloco diagonal (subálgebra das coordenadas do bloco)."""
    if sum(sizes) != alg.dim:
        raise ValueError(f"Blocos {list(sizes)} não somam a dimensão {alg.dim}")
    scalars = []
    start = 0
    for size in sizes:
        block = alg.constants[start:start + size, start:start + size, start:start + size]
        scalars.append(scalar_curvature(LieAlgebra.from_entries(block)))
        start += size
    return scalars


def verify_six_rho(m_alg: LieAlgebra, tol: Optional[float] = None) -> SixRhoReport:
    """
    Compara a curvatura escalar do torcimento interno com seis vezes a de M.

    Args:
        m_alg: Álgebra 2-nilpotente
        tol: Tolerância relativa, ancorada em max(1, |ρ|)

    Returns:
        SixRhoReport com ρ, ρ′ pelos dois caminhos e o veredito
    """
    tol = resolve_tolerance(tol)
    _require_two_step_nilpotent(m_alg, tol)
    twisted = build_inner_twist(m_alg, tol)

    rho = scalar_curvature(m_alg)
    rho_prime = scalar_curvature(twisted)
    rho_shortcut = scalar_curvature_metabelian(m_alg, tol)
    rho_prime_shortcut = scalar_curvature_metabelian(twisted, tol)

    bound = tol * max(1.0, abs(rho))
    passed = (
        abs(rho_prime - 6.0 * rho) <= bound
        and abs(rho - rho_shortcut) <= bound
        and abs(rho_prime - rho_prime_shortcut) <= 6.0 * bound
    )
    if not passed:
        logger.warning(f"ρ′ = 6ρ falhou: ρ = {rho}, ρ′ = {rho_prime}")
    return SixRhoReport(rho, rho_prime, rho_shortcut, rho_prime_shortcut, tol, passed)
