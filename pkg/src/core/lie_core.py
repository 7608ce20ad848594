"""
Álgebras de Lie reais de dimensão finita dadas por constantes de estrutura numa
base declarada ortonormal: colchete, antissimetria, Jacobi e 2-nilpotência.
"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from ..entity import (
    DimensionMismatchError,
    Failure,
    InfinitesimalAction,
    IngestionError,
    LieAlgebra,
    NilpotencyResult,
    StructureTensor,
    ValidationReport,
    Vector,
)
from ..entity.algebra import ORTHONORMAL_NOTE
from ..utils.config import resolve_tolerance

logger = logging.getLogger(__name__)

Constant = Tuple[int, int, int, float]


def make_algebra(
    dim: int,
    constants: Iterable[Constant],
    labels: Optional[Sequence[str]] = None,
    one_based: bool = True,
    metric_note: str = ORTHONORMAL_NOTE,
    tol: Optional[float] = None,
) -> LieAlgebra:
    """
    Monta uma álgebra a partir de entradas (i, j, k, valor) de [e_i, e_j].

    Basta fornecer i < j; o tensor é completado por c_jik = -c_ijk. Fornecer as
    duas metades com valores incoerentes, ou c_iik ≠ 0, é erro de ingestão.

    Args:
        dim: Dimensão da álgebra
        constants: Entradas (i, j, k, valor)
        labels: Rótulos da base
        one_based: Se os índices começam em 1
        metric_note: Observação sobre a métrica
        tol: Tolerância de coerência entre metades

    Returns:
        LieAlgebra com tensor antissimétrico
    """
    tol = resolve_tolerance(tol)
    if dim < 1:
        raise IngestionError(f"Dimensão deve ser positiva, recebido {dim}")
    offset = 1 if one_based else 0
    entries = np.zeros((dim, dim, dim))
    seen = np.zeros((dim, dim, dim), dtype=bool)

    for raw in constants:
        try:
            i, j, k, value = raw
        except (TypeError, ValueError):
            raise IngestionError(f"Constante malformada: {raw!r}; esperado [i, j, k, valor]")
        i, j, k = int(i) - offset, int(j) - offset, int(k) - offset
        if not all(0 <= idx < dim for idx in (i, j, k)):
            raise IngestionError(f"Índice fora da dimensão {dim}: {raw!r}")
        value = float(value)
        if i == j:
            if abs(value) > tol:
                raise IngestionError(f"Constante diagonal não nula viola a antissimetria: {raw!r}")
            continue
        a, b, v = (i, j, value) if i < j else (j, i, -value)
        if seen[a, b, k] and abs(entries[a, b, k] - v) > tol:
            raise IngestionError(
                f"Metades antissimétricas incoerentes em ({a + offset}, {b + offset}, {k + offset}): "
                f"{entries[a, b, k]} contra {v}"
            )
        entries[a, b, k] = v
        seen[a, b, k] = True

    # só o triângulo i < j está preenchido
    entries = entries - np.transpose(entries, (1, 0, 2))
    return LieAlgebra.from_entries(entries, list(labels) if labels else None, metric_note)


def abelian_algebra(dim: int) -> LieAlgebra:
    return LieAlgebra.from_entries(np.zeros((dim, dim, dim)))


def heisenberg_algebra() -> LieAlgebra:
    """Álgebra de Heisenberg com [e1, e3] = -e2 como único colchete gerador."""
    return make_algebra(3, [(1, 3, 2, -1.0)], metric_note="Heisenberg, base ortonormal")


def _coords(alg: LieAlgebra, x, name: str) -> Vector:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (alg.dim,):
        raise DimensionMismatchError(f"vetor {name}", alg.dim, int(x.size))
    return x


def basis_vector(alg: LieAlgebra, i: int) -> Vector:
    e = np.zeros(alg.dim)
    e[i] = 1.0
    return e


def bracket(alg: LieAlgebra, x, y) -> Vector:
    """[x, y] = Σ x_i y_j c_ijk e_k."""
    x = _coords(alg, x, "x")
    y = _coords(alg, y, "y")
    return np.einsum("i,j,ijk->k", x, y, alg.constants)


def check_antisymmetry(alg: LieAlgebra, tol: Optional[float] = None) -> ValidationReport:
    """Lista todo (i, j, k) com |c_ijk + c_jik| acima da tolerância."""
    tol = resolve_tolerance(tol)
    c = alg.constants
    residual = np.abs(c + np.transpose(c, (1, 0, 2)))
    failures = [
        Failure(tuple(int(v) for v in idx), float(residual[tuple(idx)]), "c_ijk + c_jik ≠ 0")
        for idx in np.argwhere(residual > tol)
    ]
    return ValidationReport("antisymmetry", failures, tol)


def jacobi_tensor(alg: LieAlgebra) -> np.ndarray:
    """J[i, j, k] = [[e_i, e_j], e_k] + [[e_j, e_k], e_i] + [[e_k, e_i], e_j]."""
    c = alg.constants
    return (
        np.einsum("ijl,lkm->ijkm", c, c)
        + np.einsum("jkl,lim->ijkm", c, c)
        + np.einsum("kil,ljm->ijkm", c, c)
    )


def check_jacobi(alg: LieAlgebra, tol: Optional[float] = None) -> ValidationReport:
    """Soma cíclica em cada tripla da base; falhas com tripla e norma do resíduo."""
    tol = resolve_tolerance(tol)
    cyclic = jacobi_tensor(alg)
    worst = np.max(np.abs(cyclic), axis=3)
    norms = np.linalg.norm(cyclic, axis=3)
    failures = [
        Failure(tuple(int(v) for v in idx), float(norms[tuple(idx)]), "soma cíclica de Jacobi não nula")
        for idx in np.argwhere(worst > tol)
    ]
    return ValidationReport("jacobi", failures, tol)


def is_two_step_nilpotent(alg: LieAlgebra, tol: Optional[float] = None) -> NilpotencyResult:
    """Verdadeiro sse [[e_i, e_j], e_k] = 0 para toda tripla; senão a primeira tripla em ordem lexicográfica."""
    tol = resolve_tolerance(tol)
    c = alg.constants
    nested = np.max(np.abs(np.einsum("ijl,lkm->ijkm", c, c)), axis=3)
    violations = np.argwhere(nested > tol)
    if violations.size == 0:
        return NilpotencyResult(True)
    witness = tuple(int(v) for v in violations[0])
    return NilpotencyResult(False, witness, float(nested[witness]))


def adjoint_action(alg: LieAlgebra) -> InfinitesimalAction:
    """ad(e_a)(e_b) = [e_a, e_b], como ação infinitesimal da álgebra sobre si mesma."""
    return InfinitesimalAction(alg.dim, alg.dim, np.transpose(alg.constants, (0, 2, 1)))


def _span(vectors: np.ndarray, dim: int, tol: float) -> np.ndarray:
    if vectors.size == 0:
        return np.zeros((0, dim))
    basis = linalg.orth(vectors.T, rcond=tol)
    return basis.T


def lower_central_series_dims(alg: LieAlgebra, tol: Optional[float] = None) -> List[int]:
    """Dimensões de g ⊇ [g, g] ⊇ [[g, g], g] ⊇ ... até estabilizar."""
    tol = resolve_tolerance(tol)
    c = alg.constants
    n = alg.dim
    current = np.eye(n)
    dims = [n]
    while True:
        images = np.einsum("ai,ijk->ajk", current, c).reshape(-1, n)
        current = _span(images, n, tol)
        if current.shape[0] == dims[-1]:
            return dims
        dims.append(current.shape[0])
        if current.shape[0] == 0:
            return dims


def derived_series_dims(alg: LieAlgebra, tol: Optional[float] = None) -> List[int]:
    """Dimensões de g ⊇ [g, g] ⊇ [[g, g], [g, g]] ⊇ ... até estabilizar."""
    tol = resolve_tolerance(tol)
    c = alg.constants
    n = alg.dim
    current = np.eye(n)
    dims = [n]
    while True:
        images = np.einsum("ai,bj,ijk->abk", current, current, c).reshape(-1, n)
        current = _span(images, n, tol)
        if current.shape[0] == dims[-1]:
            return dims
        dims.append(current.shape[0])
        if current.shape[0] == 0:
            return dims


def change_basis(
    alg: LieAlgebra,
    basis,
    labels: Optional[Sequence[str]] = None,
    metric_note: str = ORTHONORMAL_NOTE,
) -> LieAlgebra:
    """
    Reescreve os colchetes numa nova base, declarada ortonormal.

    Args:
        alg: Álgebra nas coordenadas originais
        basis: Matriz cujas linhas são os novos vetores da base nas coordenadas originais
        labels: Rótulos da nova base
        metric_note: Observação sobre a nova métrica

    Returns:
        LieAlgebra com as constantes na nova base
    """
    basis = np.asarray(basis, dtype=np.float64)
    n = alg.dim
    if basis.shape != (n, n):
        raise DimensionMismatchError("matriz de mudança de base", n * n, int(basis.size))
    images = np.einsum("ia,jb,abk->ijk", basis, basis, alg.constants).reshape(n * n, n)
    coefficients = linalg.solve(basis.T, images.T)
    return LieAlgebra.from_entries(coefficients.T.reshape(n, n, n), list(labels) if labels else None, metric_note)


def random_two_step_nilpotent(
    generators: int,
    center: int,
    rng: np.random.Generator,
    scale: float = 1.0,
) -> LieAlgebra:
    """
    Álgebra 2-nilpotente aleatória: [e_i, e_j] para i < j ≤ generators é um vetor
    aleatório do centro; os demais colchetes são nulos. Satisfaz Jacobi identicamente.
    """
    if generators < 0 or center < 0 or generators + center < 1:
        raise ValueError(f"Dimensões inválidas: {generators} geradores, {center} centrais")
    n = generators + center
    c = np.zeros((n, n, n))
    for i in range(generators):
        for j in range(i + 1, generators):
            values = rng.uniform(-scale, scale, size=center)
            c[i, j, generators:] = values
            c[j, i, generators:] = -values
    return LieAlgebra.from_entries(c, metric_note=f"2-nilpotente aleatória ({generators}+{center})")


def nonzero_constants(alg: LieAlgebra, tol: float = 0.0, one_based: bool = True) -> List[Constant]:
    """Entradas (i, j, k, valor) com i < j e |valor| > tol, em ordem lexicográfica."""
    offset = 1 if one_based else 0
    c = alg.constants
    return [
        (int(i) + offset, int(j) + offset, int(k) + offset, float(c[i, j, k]))
        for i, j, k in np.argwhere(np.abs(c) > tol)
        if i < j
    ]
