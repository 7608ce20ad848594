"""
Entidades dos grupos finitos: tabela de Cayley, ação por automorfismos e
resultados do produto torcido.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from .errors import IngestionError
from .report import ValidationReport


def _frozen_table(values, ndim: int) -> NDArray[np.int64]:
    array = np.array(values, dtype=np.int64, copy=True)
    if array.ndim != ndim:
        raise IngestionError(f"Tabela com {array.ndim} eixos; esperado {ndim}")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class CayleyGroup:
    """
    Grupo finito como tabela de multiplicação sobre índices 0..order-1.

    O índice 0 é a identidade. Os axiomas não são impostos na construção;
    use `finite_groups.validate_group`.
    """

    table: NDArray[np.int64]
    labels: List[str] = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        table = _frozen_table(self.table, 2)
        n = table.shape[0]
        if table.shape != (n, n) or n < 1:
            raise IngestionError(f"Tabela de Cayley deve ser quadrada e não vazia, recebido {table.shape}")
        if table.min() < 0 or table.max() >= n:
            raise IngestionError(f"Entradas da tabela fora de 0..{n - 1}")
        labels = list(self.labels) or [str(i) for i in range(n)]
        if len(labels) != n:
            raise IngestionError(f"{len(labels)} rótulos para um grupo de ordem {n}")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "labels", labels)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse_of(self, a: int) -> int:
        return int(np.flatnonzero(self.table[a] == 0)[0])


@dataclass(frozen=True, eq=False)
class GroupAction:
    """
    Ação λ: H → Aut(G) guardada como permutações: maps[h][g] = λ(h)(g).

    `source` é o grupo atuante H e `target` o grupo G sobre o qual se atua.
    """

    source: CayleyGroup
    target: CayleyGroup
    maps: NDArray[np.int64]

    def __post_init__(self):
        maps = _frozen_table(self.maps, 2)
        if maps.shape != (self.source.order, self.target.order):
            raise IngestionError(
                f"Ação com formato {maps.shape}; esperado ({self.source.order}, {self.target.order})"
            )
        if maps.size and (maps.min() < 0 or maps.max() >= self.target.order):
            raise IngestionError("Imagem da ação fora dos elementos do grupo alvo")
        object.__setattr__(self, "maps", maps)

    def apply(self, h: int, g: int) -> int:
        return int(self.maps[h, g])


@dataclass(frozen=True)
class ConditionResult:
    """Resposta da condição do produto torcido; `clause` indica qual núcleo falhou."""

    holds: bool
    witness: Optional[Tuple[int, int]] = None
    clause: Optional[str] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True, eq=False)
class TwistOutcome:
    """Produto torcido: tabela quando é grupo, testemunha de falha caso contrário."""

    is_group: bool
    order: int
    table: Optional[CayleyGroup] = None
    failure_witness: Optional[Tuple[int, ...]] = None
    validation: Optional[ValidationReport] = None
    condition: Optional[ConditionResult] = None

    def __post_init__(self):
        if (self.table is None) == (self.failure_witness is None):
            raise ValueError("Exatamente um entre tabela e testemunha de falha deve estar presente")


@dataclass(frozen=True)
class TwistedInverse:
    """Inverso (g, h) pela fórmula fechada e se ele é bilateral."""

    pair: Tuple[int, int]
    left_ok: bool
    right_ok: bool

    @property
    def two_sided(self) -> bool:
        return self.left_ok and self.right_ok


@dataclass(frozen=True, eq=False)
class TwistCandidate:
    """Par de ações sobre M avaliado pela condição de núcleos e pelos axiomas de grupo."""

    lam: GroupAction
    mu: GroupAction
    condition: ConditionResult
    lam_inner: bool
    mu_inner: bool
    is_group: bool
