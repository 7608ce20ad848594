"""
Classe principal do twistprod: orquestra leitura, construções e verificações e
devolve resultados serializáveis para a CLI e para os scripts.
"""

import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from ..corpus import (
    BUILTIN_NAMES,
    builtin,
    derivation_cases,
    derive_infinitesimal_action,
    finite_corpus,
    golden_payload,
    reproduce,
)
from ..datasource import (
    CurvatureReportFile,
    JsonDatasource,
    action_to_dict,
    algebra_to_dict,
    condition_to_dict,
    curvature_to_dict,
    derived_action_to_dict,
    group_to_dict,
    nilpotency_to_dict,
    reproduction_to_dict,
    six_rho_to_dict,
    twist_outcome_to_dict,
    validation_to_dict,
)
from ..entity import CayleyGroup, CurvatureMethod, IngestionError, LieAlgebra
from ..utils.config import get_settings
from .curvature import curvature_report, verify_six_rho
from .finite_groups import action_kernel, check_twist_condition, inner_action, twisted_product
from .lie_core import check_antisymmetry, check_jacobi, is_two_step_nilpotent
from .twisted_lie import build_inner_twist, twist_lie

logger = logging.getLogger(__name__)

DERIVED_TOL = 1e-6


class TwistProd:
    """Fachada do twistprod."""

    def __init__(self, tol: Optional[float] = None, seed: Optional[int] = None):
        """
        Inicializa o twistprod.

        Args:
            tol: Tolerância absoluta (padrão TWISTPROD_TOL)
            seed: Semente das verificações amostrais (padrão TWISTPROD_SEED)
        """
        self.settings = get_settings()
        self.tol = self.settings.tolerance if tol is None else float(tol)
        self.seed = self.settings.seed if seed is None else int(seed)
        self.datasource = JsonDatasource(self.tol)
        logger.debug(f"twistprod inicializado com tolerância {self.tol} e semente {self.seed}")

    # ------------------------------------------------------------------
    # entradas
    # ------------------------------------------------------------------

    def _algebra(self, ref: str) -> LieAlgebra:
        """Caminho de um JSON de álgebra ou nome de exemplo embutido."""
        if Path(ref).exists() or ref not in BUILTIN_NAMES:
            return self.datasource.load_algebra(ref)
        return builtin(ref).algebra

    def _group(self, ref: str) -> CayleyGroup:
        """Caminho de um JSON de grupo ou nome do corpus finito."""
        corpus = finite_corpus()
        if Path(ref).exists() or ref not in corpus:
            return self.datasource.load_group(ref)
        return corpus[ref]

    def _actions(
        self,
        g_ref: str,
        h_ref: Optional[str],
        inner: bool,
        lambda_ref: Optional[str],
        mu_ref: Optional[str],
    ):
        g = self._group(g_ref)
        if inner:
            if h_ref is not None and h_ref != g_ref:
                raise IngestionError("--inner exige H = G")
            lam = inner_action(g)
            return g, g, lam, lam
        if h_ref is None or lambda_ref is None or mu_ref is None:
            raise IngestionError("Informe --h, --lambda e --mu, ou use --inner")
        h = self._group(h_ref)
        lam = self.datasource.load_group_action(lambda_ref, h, g)
        mu = self.datasource.load_group_action(mu_ref, g, h)
        return g, h, lam, mu

    def _algebra_dict(self, alg: LieAlgebra) -> Dict[str, Any]:
        # constantes abaixo da tolerância são ruído de arredondamento
        return algebra_to_dict(alg, drop_below=self.tol)

    def _guard(self, what: str, run: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
        try:
            result = run()
            result["success"] = True
            return result
        except Exception as e:
            logger.error(f"Erro ao {what}: {str(e)}")
            return {"success": False, "passed": False, "error": str(e), "error_type": type(e).__name__}

    # ------------------------------------------------------------------
    # álgebras de Lie
    # ------------------------------------------------------------------

    def twist_lie(self, spec_path: str) -> Dict[str, Any]:
        def run():
            spec = self.datasource.load_twist_spec(spec_path)
            result = twist_lie(spec, self.tol)
            return {
                "passed": result.is_lie,
                "payload": {"algebra": self._algebra_dict(result.algebra), "jacobi": validation_to_dict(result.jacobi)},
            }

        return self._guard("montar a álgebra torcida", run)

    def inner_twist(self, algebra_ref: str) -> Dict[str, Any]:
        def run():
            alg = self._algebra(algebra_ref)
            nilpotent = is_two_step_nilpotent(alg, self.tol)
            twisted = build_inner_twist(alg, self.tol)
            jacobi = check_jacobi(twisted, self.tol)
            return {
                "passed": nilpotent.holds and jacobi.passed,
                "payload": {
                    "algebra": self._algebra_dict(twisted),
                    "input_two_step_nilpotent": nilpotency_to_dict(nilpotent),
                    "jacobi": validation_to_dict(jacobi),
                },
            }

        return self._guard("montar o torcimento interno", run)

    def curvature(self, algebra_ref: str, method: CurvatureMethod = CurvatureMethod.MILNOR_FULL) -> Dict[str, Any]:
        def run():
            alg = self._algebra(algebra_ref)
            report = curvature_report(alg, method, self.tol)
            payload = CurvatureReportFile.model_validate(curvature_to_dict(report)).model_dump()
            return {"passed": True, "payload": payload}

        return self._guard("calcular a curvatura", run)

    def check_jacobi(self, algebra_ref: str) -> Dict[str, Any]:
        def run():
            alg = self._algebra(algebra_ref)
            antisymmetry = check_antisymmetry(alg, self.tol)
            jacobi = check_jacobi(alg, self.tol)
            return {
                "passed": antisymmetry.passed and jacobi.passed,
                "payload": {
                    "antisymmetry": validation_to_dict(antisymmetry, limit=20),
                    "jacobi": validation_to_dict(jacobi, limit=20),
                },
            }

        return self._guard("verificar Jacobi", run)

    def check_nilpotent(self, algebra_ref: str) -> Dict[str, Any]:
        def run():
            result = is_two_step_nilpotent(self._algebra(algebra_ref), self.tol)
            return {"passed": result.holds, "payload": nilpotency_to_dict(result)}

        return self._guard("verificar a 2-nilpotência", run)

    def verify_six_rho(self, algebra_ref: str) -> Dict[str, Any]:
        def run():
            report = verify_six_rho(self._algebra(algebra_ref), self.tol)
            return {"passed": report.passed, "payload": six_rho_to_dict(report)}

        return self._guard("verificar ρ′ = 6ρ", run)

    # ------------------------------------------------------------------
    # grupos finitos
    # ------------------------------------------------------------------

    def fg_twist(
        self,
        g_ref: str,
        h_ref: Optional[str] = None,
        inner: bool = False,
        lambda_ref: Optional[str] = None,
        mu_ref: Optional[str] = None,
        include_table: bool = False,
    ) -> Dict[str, Any]:
        def run():
            g, h, lam, mu = self._actions(g_ref, h_ref, inner, lambda_ref, mu_ref)
            outcome = twisted_product(g, h, lam, mu, self.settings.order_cap)
            payload = twist_outcome_to_dict(outcome, include_table)
            payload["g"] = g.name
            payload["h"] = h.name
            if outcome.failure_witness is not None:
                payload["failure_labels"] = [
                    f"({g.labels[p // h.order]},{h.labels[p % h.order]})" for p in outcome.failure_witness
                ]
            return {"passed": outcome.is_group, "payload": payload}

        return self._guard("montar o produto torcido", run)

    def fg_condition(
        self,
        g_ref: str,
        h_ref: Optional[str] = None,
        inner: bool = False,
        lambda_ref: Optional[str] = None,
        mu_ref: Optional[str] = None,
    ) -> Dict[str, Any]:
        def run():
            g, h, lam, mu = self._actions(g_ref, h_ref, inner, lambda_ref, mu_ref)
            condition = check_twist_condition(lam, mu)
            payload = condition_to_dict(condition)
            payload["kernel_lambda"] = sorted(action_kernel(lam))
            payload["kernel_mu"] = sorted(action_kernel(mu))
            if condition.witness is not None:
                gi, hi = condition.witness
                payload["witness_labels"] = [g.labels[gi], h.labels[hi]]
            return {"passed": condition.holds, "payload": payload}

        return self._guard("verificar a condição de núcleos", run)

    # ------------------------------------------------------------------
    # corpus
    # ------------------------------------------------------------------

    def derive_action(self, name: str, step: Optional[float] = None) -> Dict[str, Any]:
        def run():
            case = derivation_cases([name])[name]
            derived = derive_infinitesimal_action(
                case.action, case.basis_acting, case.basis_target, step, case.target_algebra
            )
            error = float(np.max(np.abs(derived.action.matrices - case.exact.matrices), initial=0.0))
            derivation_ok = derived.derivation is None or derived.derivation.passed
            payload = derived_action_to_dict(derived)
            payload["name"] = name
            payload["exact"] = action_to_dict(case.exact)
            payload["max_error"] = error
            return {"passed": derived.converged and derivation_ok and error <= DERIVED_TOL, "payload": payload}

        return self._guard("derivar a ação infinitesimal", run)

    def reproduce(self, target: str, golden_dir: Optional[str] = None) -> Dict[str, Any]:
        def run():
            checks = reproduce(target, self.tol, self.seed, Path(golden_dir) if golden_dir else None)
            passed = all(c.passed for c in checks)
            return {
                "passed": passed,
                "payload": {
                    "target": target,
                    "passed": passed,
                    "checks": [reproduction_to_dict(c) for c in checks],
                },
            }

        return self._guard("reproduzir o exemplo", run)

    def list_builtins(self) -> Dict[str, Any]:
        def run():
            return {
                "passed": True,
                "payload": {
                    "builtins": {name: builtin(name).description for name in BUILTIN_NAMES},
                    "derivation_cases": sorted(derivation_cases()),
                    "finite_groups": {name: g.order for name, g in finite_corpus().items()},
                },
            }

        return self._guard("listar os exemplos", run)

    def export_builtin(self, name: str, directory: str) -> Dict[str, Any]:
        """Grava o exemplo como arquivos JSON dos módulos, para uso pelos demais comandos."""

        def run():
            bundle = builtin(name)
            out = Path(directory)
            written: List[str] = []

            def save(payload: Any, filename: str) -> str:
                written.append(str(self.datasource.save(payload, out / filename)))
                return filename

            save(self._algebra_dict(bundle.algebra), "algebra.json")
            for key, alg in bundle.algebras.items():
                save(self._algebra_dict(alg), f"algebra_{key}.json")
            for key, action in bundle.actions.items():
                save(action_to_dict(action), f"action_{key}.json")
            if bundle.twist_spec is not None:
                spec = bundle.twist_spec
                save(
                    {
                        "g": save(self._algebra_dict(spec.g_algebra), "twist_g.json"),
                        "h": save(self._algebra_dict(spec.h_algebra), "twist_h.json"),
                        "L": save(action_to_dict(spec.L), "twist_L.json"),
                        "M": save(action_to_dict(spec.M), "twist_M.json"),
                    },
                    "twist_spec.json",
                )
            save(golden_payload(bundle), "expected.json")
            logger.info(f"Exemplo {name} exportado para {out}")
            return {"passed": True, "payload": {"name": name, "files": written}}

        return self._guard("exportar o exemplo", run)

    def export_group(self, name: str, path: str) -> Dict[str, Any]:
        def run():
            group = self._group(name)
            return {"passed": True, "payload": {"files": [str(self.datasource.save(group_to_dict(group), path))]}}

        return self._guard("exportar o grupo", run)

    def get_system_status(self) -> Dict[str, Any]:
        """
        Retorna o status do sistema.

        Returns:
            Dicionário com a configuração efetiva e o número de arquivos dourados
        """

        def run():
            status = self.settings.get_config_info()
            status.update({"tolerance": self.tol, "seed": self.seed})
            golden_dir = self.settings.golden_dir
            status["golden_files"] = len(list(golden_dir.glob("*.json"))) if golden_dir.is_dir() else 0
            return {"passed": True, "payload": status}

        return self._guard("obter o status do sistema", run)
