"""
Entidades das álgebras de Lie: tensor de estrutura, álgebra, ação infinitesimal e
dados de um produto torcido.
"""

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from numpy.typing import NDArray

from .errors import DimensionMismatchError

Vector = NDArray[np.float64]

ORTHONORMAL_NOTE = "base declarada ortonormal para a métrica invariante à esquerda"


def _frozen(values, ndim: int) -> NDArray[np.float64]:
    array = np.array(values, dtype=np.float64, copy=True)
    if array.ndim != ndim:
        raise ValueError(f"Esperado array com {ndim} eixos, recebido {array.ndim}")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class StructureTensor:
    """
    Constantes de estrutura c[i, j, k]: coeficiente de e_k em [e_i, e_j].

    Índices 0-based. A antissimetria não é imposta aqui; ela é garantida na
    ingestão (`lie_core.make_algebra`) e verificada por `check_antisymmetry`.
    """

    entries: NDArray[np.float64]

    def __post_init__(self):
        entries = _frozen(self.entries, 3)
        n = entries.shape[0]
        if entries.shape != (n, n, n) or n < 1:
            raise ValueError(f"Tensor de estrutura deve ser n×n×n com n ≥ 1, recebido {entries.shape}")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Álgebra de Lie real de dimensão finita numa base declarada ortonormal."""

    tensor: StructureTensor
    basis_labels: List[str] = field(default_factory=list)
    metric_note: str = ORTHONORMAL_NOTE

    def __post_init__(self):
        labels = list(self.basis_labels) or [f"e{i + 1}" for i in range(self.tensor.dim)]
        if len(labels) != self.tensor.dim:
            raise DimensionMismatchError("rótulos da base", self.tensor.dim, len(labels))
        object.__setattr__(self, "basis_labels", labels)

    @classmethod
    def from_entries(cls, entries, labels: Optional[List[str]] = None, metric_note: str = ORTHONORMAL_NOTE) -> "LieAlgebra":
        return cls(StructureTensor(entries), labels or [], metric_note)

    @property
    def dim(self) -> int:
        return self.tensor.dim

    @property
    def constants(self) -> NDArray[np.float64]:
        return self.tensor.entries


@dataclass(frozen=True, eq=False)
class InfinitesimalAction:
    """
    Operador L (ou M): uma matriz target_dim × target_dim por vetor da base da
    álgebra atuante.

    matrices[a][k, b] é o coeficiente de e_k em L(e_a)(e_b); as colunas são as
    imagens dos vetores da base da álgebra alvo.
    """

    acting_dim: int
    target_dim: int
    matrices: NDArray[np.float64]

    def __post_init__(self):
        matrices = _frozen(self.matrices, 3)
        expected = (self.acting_dim, self.target_dim, self.target_dim)
        if matrices.shape != expected:
            raise DimensionMismatchError(
                f"matrizes da ação (formato {matrices.shape})",
                self.acting_dim * self.target_dim * self.target_dim,
                int(matrices.size),
            )
        object.__setattr__(self, "matrices", matrices)

    def operator(self, y: Vector) -> NDArray[np.float64]:
        """Matriz de L(y) para y nas coordenadas da álgebra atuante."""
        y = np.asarray(y, dtype=np.float64)
        if y.shape != (self.acting_dim,):
            raise DimensionMismatchError("vetor da álgebra atuante", self.acting_dim, int(y.size))
        return np.einsum("a,akb->kb", y, self.matrices)

    def apply(self, y: Vector, x: Vector) -> Vector:
        """L(y)(x)."""
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.target_dim,):
            raise DimensionMismatchError("vetor da álgebra alvo", self.target_dim, int(x.size))
        return self.operator(y) @ x


@dataclass(frozen=True, eq=False)
class TwistSpec:
    """Dados do produto torcido: L(G) de dimensão n, L(H) de dimensão m, L: L(H) → Der L(G), M: L(G) → Der L(H)."""

    g_algebra: LieAlgebra
    h_algebra: LieAlgebra
    L: InfinitesimalAction
    M: InfinitesimalAction

    def __post_init__(self):
        n, m = self.g_algebra.dim, self.h_algebra.dim
        if self.L.acting_dim != m:
            raise DimensionMismatchError("L.acting_dim (dim L(H))", m, self.L.acting_dim)
        if self.L.target_dim != n:
            raise DimensionMismatchError("L.target_dim (dim L(G))", n, self.L.target_dim)
        if self.M.acting_dim != n:
            raise DimensionMismatchError("M.acting_dim (dim L(G))", n, self.M.acting_dim)
        if self.M.target_dim != m:
            raise DimensionMismatchError("M.target_dim (dim L(H))", m, self.M.target_dim)

    @property
    def n(self) -> int:
        return self.g_algebra.dim

    @property
    def m(self) -> int:
        return self.h_algebra.dim
