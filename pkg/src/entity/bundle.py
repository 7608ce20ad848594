"""
Pacotes dos exemplos embutidos: construções e valores esperados.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from .algebra import InfinitesimalAction, LieAlgebra, TwistSpec
from .parametric import SmoothAction


@dataclass(frozen=True, eq=False)
class ExpectedValues:
    """Valores de referência: matriz seccional, escalar e constantes (i < j, 1-based)."""

    sectional: NDArray[np.float64]
    scalar: float
    constants: List[Tuple[int, int, int, float]] = field(default_factory=list)


@dataclass(frozen=True, eq=False)
class BuiltinBundle:
    """Exemplo embutido: a álgebra estudada, os ingredientes da construção e o esperado."""

    name: str
    description: str
    algebra: LieAlgebra
    expected: ExpectedValues
    algebras: Dict[str, LieAlgebra] = field(default_factory=dict)
    actions: Dict[str, InfinitesimalAction] = field(default_factory=dict)
    twist_spec: Optional[TwistSpec] = None
    smooth_actions: Dict[str, SmoothAction] = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class DerivationCase:
    """Ação suave com as bases e a forma fechada esperada da sua derivada."""

    name: str
    action: SmoothAction
    basis_acting: NDArray[np.float64]
    basis_target: NDArray[np.float64]
    target_algebra: LieAlgebra
    exact: InfinitesimalAction
