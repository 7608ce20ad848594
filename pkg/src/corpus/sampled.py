"""
Verificação amostral da condição de núcleos para grupos contínuos.
"""

import logging
from typing import Callable, Optional

import numpy as np

from ..entity import DimensionMismatchError, Failure, SampledCheckReport, SmoothAction
from ..utils.config import get_settings, resolve_tolerance

logger = logging.getLogger(__name__)

KernelTest = Callable[[np.ndarray], float]


def sampled_condition_check(
    lam: SmoothAction,
    mu: SmoothAction,
    n_samples: int = 500,
    kernel_lambda: Optional[KernelTest] = None,
    kernel_mu: Optional[KernelTest] = None,
    seed: Optional[int] = None,
    tol: Optional[float] = None,
) -> SampledCheckReport:
    """
    Sorteia pares (g, h) e mede μ(g)(h)·h⁻¹ ∈ ker λ e λ(h)(g)·g⁻¹ ∈ ker μ.

    Cada teste de núcleo devolve a distância do elemento ao núcleo; o elemento
    pertence ao núcleo quando a distância não passa da tolerância. Sem
    `kernel_mu`, usa-se `kernel_lambda` para os dois lados.

    Args:
        lam: Ação de H sobre G
        mu: Ação de G sobre H
        n_samples: Número de pares sorteados
        kernel_lambda: Distância ao núcleo de λ (em H)
        kernel_mu: Distância ao núcleo de μ (em G)
        seed: Semente do sorteio
        tol: Tolerância de pertinência

    Returns:
        SampledCheckReport marcado como estatístico
    """
    if kernel_lambda is None:
        raise ValueError("kernel_lambda é obrigatório")
    kernel_mu = kernel_mu or kernel_lambda
    H, G = lam.acting, lam.target
    if mu.acting.dim != G.dim or mu.target.dim != H.dim:
        raise DimensionMismatchError("grupos de μ contra λ", G.dim + H.dim, mu.acting.dim + mu.target.dim)
    tol = resolve_tolerance(tol)
    seed = get_settings().seed if seed is None else seed
    rng = np.random.default_rng(seed)

    failures = []
    worst = 0.0
    for index in range(n_samples):
        g = G.sample(rng)
        h = H.sample(rng)
        h_defect = H.compose(mu.apply(g, h), H.invert(h))
        g_defect = G.compose(lam.apply(h, g), G.invert(g))
        residual_lambda = float(kernel_lambda(h_defect))
        residual_mu = float(kernel_mu(g_defect))
        worst = max(worst, residual_lambda, residual_mu)
        if residual_lambda > tol:
            failures.append(Failure((index,), residual_lambda, "μ(g)(h)·h⁻¹ fora de ker λ"))
        if residual_mu > tol:
            failures.append(Failure((index,), residual_mu, "λ(h)(g)·g⁻¹ fora de ker μ"))

    report = SampledCheckReport(f"condition:{lam.name}/{mu.name}", n_samples, seed, worst, tol, failures)
    logger.info(
        f"Verificação amostral {report.check}: {'passou' if report.passed else 'falhou'} "
        f"(resíduo máximo {worst:.3e}, {n_samples} amostras)"
    )
    return report
