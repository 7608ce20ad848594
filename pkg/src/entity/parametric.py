"""
Grupos de Lie em coordenadas globais e ações suaves entre eles.
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from numpy.typing import NDArray

Point = NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class ParametricGroup:
    """
    Grupo contínuo em coordenadas: produto, inverso, identidade, amostrador
    semeado e as aplicações exp/log entre coordenadas da álgebra e do grupo.
    """

    name: str
    dim: int
    compose: Callable[[Point, Point], Point]
    invert: Callable[[Point], Point]
    identity: Point
    sample: Callable[[np.random.Generator], Point]
    exp: Callable[[Point], Point]
    log: Callable[[Point], Point]
    distance: Optional[Callable[[Point, Point], float]] = None

    def residual(self, x: Point, y: Point) -> float:
        """Distância entre dois pontos; coordenadas angulares podem redefinir isto."""
        if self.distance is not None:
            return float(self.distance(x, y))
        return float(np.max(np.abs(np.asarray(x) - np.asarray(y)), initial=0.0))


@dataclass(frozen=True, eq=False)
class SmoothAction:
    """Ação λ: H × G → G; apply(h, g) = λ(h)(g)."""

    name: str
    acting: ParametricGroup
    target: ParametricGroup
    apply: Callable[[Point, Point], Point]
