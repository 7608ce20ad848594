"""
Relatórios devolvidos pelas verificações. Falhas são valores, não exceções.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray


@dataclass(frozen=True)
class Failure:
    """Uma violação encontrada: onde (índices 0-based), resíduo e descrição."""

    where: Tuple[int, ...]
    residual: float
    message: str = ""


@dataclass(frozen=True)
class ValidationReport:
    """Resultado de uma verificação; passa se e somente se não há falhas."""

    check: str
    failures: List[Failure] = field(default_factory=list)
    tolerance: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Optional[Failure]:
        return self.failures[0] if self.failures else None

    @property
    def max_residual(self) -> float:
        return max((f.residual for f in self.failures), default=0.0)

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class NilpotencyResult:
    """Resposta de uma verificação de 2-nilpotência com testemunha quando falsa."""

    holds: bool
    witness: Optional[Tuple[int, ...]] = None
    residual: float = 0.0

    def __bool__(self) -> bool:
        return self.holds


class CurvatureMethod(str, Enum):
    MILNOR_FULL = "milnor_full"
    METABELIAN_SHORTCUT = "metabelian_shortcut"


@dataclass(frozen=True, eq=False)
class CurvatureReport:
    """Matriz de curvaturas seccionais k_ij (diagonal nula) e curvatura escalar."""

    sectional: NDArray[np.float64]
    scalar: float
    method: CurvatureMethod = CurvatureMethod.MILNOR_FULL


@dataclass(frozen=True)
class SixRhoReport:
    """Comparação ρ′ = 6ρ entre uma álgebra 2-nilpotente e o seu torcimento interno."""

    rho: float
    rho_prime: float
    rho_shortcut: float
    rho_prime_shortcut: float
    tolerance: float
    passed: bool

    @property
    def ratio(self) -> Optional[float]:
        if self.rho == 0.0:
            return None
        return self.rho_prime / self.rho


@dataclass(frozen=True, eq=False)
class TwistResult:
    """Álgebra torcida montada junto do relatório de Jacobi."""

    algebra: Any
    jacobi: ValidationReport

    @property
    def is_lie(self) -> bool:
        return self.jacobi.passed


@dataclass(frozen=True)
class SampledCheckReport:
    """Verificação estatística por amostragem (não é uma prova)."""

    check: str
    n_samples: int
    seed: int
    max_residual: float
    tolerance: float
    failures: List[Failure] = field(default_factory=list)
    statistical: bool = True

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True, eq=False)
class DerivedAction:
    """Ação infinitesimal obtida por diferenças finitas, com o controle de convergência."""

    action: Any
    step: float
    residual: float
    constant: float
    converged: bool
    derivation: Optional[ValidationReport] = None


@dataclass(frozen=True)
class ReproductionCheck:
    """Uma comparação de reprodução de exemplo; `diff` traz o diff unificado quando falha."""

    target: str
    check: str
    passed: bool
    detail: str = ""
    diff: str = ""
