"""
Avaliação em lote do twistprod: varreduras das propriedades sobre corpora
aleatórios e embutidos, com resumo JSON e relatório Markdown.
"""

import logging
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import numpy as np
import pandas as pd

from ..core import (
    build_inner_twist,
    check_jacobi,
    check_twist_condition,
    inner_action,
    is_two_step_nilpotent,
    is_two_step_nilpotent_group,
    random_action_pair,
    random_two_step_nilpotent,
    twisted_product,
    verify_six_rho,
)
from ..corpus import finite_corpus, reproduce
from ..datasource import dumps
from ..entity import TwistProdError
from ..utils.config import get_settings

logger = logging.getLogger(__name__)

QUICK_SIZES = {"nilpotent": 20, "random_pairs": 10}
FULL_SIZES = {"nilpotent": 200, "random_pairs": 50}
RANDOM_PAIR_MAX_ORDER = 12
NILPOTENT_MAX_ORDER = 16


@dataclass
class CheckRow:
    """Uma linha da avaliação."""

    sweep: str
    instance: str
    check: str
    passed: bool
    residual: float = 0.0
    seconds: float = 0.0
    detail: str = ""


class PropertyEvaluator:
    """Executa as varreduras de propriedades e grava os resultados."""

    def __init__(self, results_dir: Optional[str] = None, tol: Optional[float] = None, seed: Optional[int] = None):
        """
        Inicializa o avaliador.

        Args:
            results_dir: Diretório de saída (padrão TWISTPROD_RESULTS_DIR)
            tol: Tolerância das verificações (padrão TWISTPROD_TOL)
            seed: Semente dos corpora aleatórios (padrão TWISTPROD_SEED)
        """
        settings = get_settings()
        self.results_dir = Path(results_dir) if results_dir else settings.results_dir
        self.results_dir.mkdir(parents=True, exist_ok=True)
        self.tol = settings.tolerance if tol is None else float(tol)
        self.seed = settings.seed if seed is None else int(seed)
        self.rows: List[CheckRow] = []

    def _record(self, sweep: str, instance: str, check: str, run: Callable[[], tuple]) -> None:
        started = time.perf_counter()
        try:
            passed, residual, detail = run()
        except TwistProdError as e:
            passed, residual, detail = False, float("nan"), f"{type(e).__name__}: {str(e)}"
            logger.error(f"Erro ao avaliar {sweep}/{instance}/{check}: {str(e)}")
        self.rows.append(
            CheckRow(sweep, instance, check, bool(passed), float(residual), time.perf_counter() - started, detail)
        )

    # ------------------------------------------------------------------
    # varreduras
    # ------------------------------------------------------------------

    def sweep_nilpotent(self, count: int) -> None:
        """ρ′ = 6ρ, Jacobi e 2-nilpotência do torcimento interno em álgebras aleatórias."""
        rng = np.random.default_rng(self.seed)
        for index in range(count):
            generators = int(rng.integers(2, 6))
            center = int(rng.integers(1, 9 - generators))
            alg = random_two_step_nilpotent(generators, center, rng)
            instance = f"n{index:03d}({generators}+{center})"

            def six_rho(alg=alg):
                report = verify_six_rho(alg, self.tol)
                return report.passed, abs(report.rho_prime - 6.0 * report.rho), f"ρ={report.rho:.6g}"

            def inner_twist(alg=alg):
                twisted = build_inner_twist(alg, self.tol)
                jacobi = check_jacobi(twisted, self.tol)
                nilpotent = is_two_step_nilpotent(twisted, self.tol)
                return jacobi.passed and nilpotent.holds, max(jacobi.max_residual, nilpotent.residual), ""

            self._record("nilpotent", instance, "six_rho", six_rho)
            self._record("nilpotent", instance, "inner_twist_closure", inner_twist)
        logger.info(f"Varredura 2-nilpotente concluída com {count} álgebras")

    def _agreement(self, g, h, lam, mu) -> tuple:
        outcome = twisted_product(g, h, lam, mu)
        condition = check_twist_condition(lam, mu)
        return outcome.is_group == condition.holds, 0.0, f"grupo={outcome.is_group}"

    def sweep_condition(self, random_pairs: int) -> None:
        """Produto torcido é grupo ⇔ condição de núcleos, em ações internas e aleatórias."""
        corpus = finite_corpus()
        for name, group in corpus.items():
            inner = inner_action(group)
            self._record("condition", f"{name} interno", "group_iff_condition",
                         lambda g=group, a=inner: self._agreement(g, g, a, a))

        small = [g for g in corpus.values() if g.order <= RANDOM_PAIR_MAX_ORDER]
        rng = np.random.default_rng(self.seed)
        cache: Dict = {}
        for index in range(random_pairs):
            g = small[int(rng.integers(len(small)))]
            h = small[int(rng.integers(len(small)))]
            lam, mu = random_action_pair(g, h, rng, cache)
            self._record("condition", f"r{index:02d} {g.name}*{h.name}", "group_iff_condition",
                         lambda g=g, h=h, lam=lam, mu=mu: self._agreement(g, h, lam, mu))
        logger.info(f"Varredura da condição concluída com {len(corpus)} internos e {random_pairs} aleatórios")

    def sweep_inner_nilpotent(self) -> None:
        """Torcimento interno é grupo ⇔ o grupo é 2-nilpotente."""
        for name, group in finite_corpus().items():
            if group.order > NILPOTENT_MAX_ORDER:
                continue

            def run(m=group):
                action = inner_action(m)
                outcome = twisted_product(m, m, action, action)
                nilpotent = is_two_step_nilpotent_group(m)
                return outcome.is_group == nilpotent.holds, 0.0, f"2-nilpotente={nilpotent.holds}"

            self._record("inner_nilpotent", name, "group_iff_two_step_nilpotent", run)

    def sweep_examples(self) -> None:
        """Reprodução de todos os exemplos."""
        started = time.perf_counter()
        checks = reproduce("all", self.tol, self.seed)
        elapsed = (time.perf_counter() - started) / max(len(checks), 1)
        for check in checks:
            self.rows.append(CheckRow("examples", check.target, check.check, check.passed, 0.0, elapsed, check.detail))

    # ------------------------------------------------------------------
    # execução e resultados
    # ------------------------------------------------------------------

    def run(self, mode: str = "quick") -> Dict[str, Any]:
        """
        Executa todas as varreduras.

        Args:
            mode: "quick" ou "full" (tamanho dos corpora aleatórios)

        Returns:
            Dicionário com "success", "summary" e "detailed_results"
        """
        if mode not in ("quick", "full"):
            return {"success": False, "error": f"Modo desconhecido {mode!r}; use quick ou full"}
        sizes = QUICK_SIZES if mode == "quick" else FULL_SIZES
        try:
            logger.info(f"Executando avaliação {mode}...")
            self.rows = []
            self.sweep_nilpotent(sizes["nilpotent"])
            self.sweep_condition(sizes["random_pairs"])
            self.sweep_inner_nilpotent()
            self.sweep_examples()

            results = {
                "success": True,
                "summary": self._summarize(mode),
                "detailed_results": [asdict(row) for row in self.rows],
            }
            self._save_results(results)
            return results
        except Exception as e:
            logger.error(f"Erro ao executar avaliação: {str(e)}")
            return {"success": False, "error": str(e)}

    def run_quick_evaluation(self) -> Dict[str, Any]:
        return self.run("quick")

    def run_full_evaluation(self) -> Dict[str, Any]:
        return self.run("full")

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(row) for row in self.rows], columns=list(CheckRow.__dataclass_fields__))

    def _summarize(self, mode: str) -> Dict[str, Any]:
        df = self.to_dataframe()
        grouped = df.groupby("sweep", sort=False).agg(
            checks=("passed", "size"),
            passed=("passed", "sum"),
            seconds=("seconds", "sum"),
            max_residual=("residual", "max"),
        )
        by_sweep = {
            str(sweep): {
                "checks": int(row["checks"]),
                "passed": int(row["passed"]),
                "seconds": float(row["seconds"]),
                "max_residual": None if pd.isna(row["max_residual"]) else float(row["max_residual"]),
            }
            for sweep, row in grouped.iterrows()
        }
        failed = df[~df["passed"]]
        total = len(df)
        return {
            "mode": mode,
            "seed": self.seed,
            "tolerance": self.tol,
            "total_checks": total,
            "passed_checks": int(df["passed"].sum()),
            "failed_checks": len(failed),
            "pass_rate": float(df["passed"].mean()) if total else 0.0,
            "by_sweep": by_sweep,
            "failures": [
                {"sweep": r.sweep, "instance": r.instance, "check": r.check, "detail": r.detail}
                for r in failed.itertuples()
            ],
        }

    def _save_results(self, results: Dict[str, Any]) -> None:
        try:
            timestamp = int(time.time())

            summary_file = self.results_dir / f"evaluation_summary_{timestamp}.json"
            summary_file.write_bytes(dumps(results["summary"]))

            report_file = self.results_dir / f"evaluation_report_{timestamp}.md"
            self._generate_markdown_report(results["summary"], report_file)

            logger.info(f"Resultados salvos em: {self.results_dir}")
        except Exception as e:
            logger.error(f"Erro ao salvar resultados: {str(e)}")

    def _generate_markdown_report(self, summary: Dict[str, Any], file_path: Path) -> None:
        lines = [
            "# Relatório de Avaliação twistprod",
            "",
            "## Resumo Executivo",
            "",
            f"- **Modo:** {summary['mode']}",
            f"- **Semente:** {summary['seed']}",
            f"- **Tolerância:** {summary['tolerance']:g}",
            f"- **Verificações:** {summary['total_checks']}",
            f"- **Aprovadas:** {summary['passed_checks']}",
            f"- **Taxa de aprovação:** {summary['pass_rate']:.3f}",
            "",
            "## Varreduras",
            "",
            "| Varredura | Verificações | Aprovadas | Tempo (s) | Maior resíduo |",
            "|-----------|--------------|-----------|-----------|---------------|",
        ]
        for sweep, stats in summary["by_sweep"].items():
            residual = "N/A" if stats["max_residual"] is None else f"{stats['max_residual']:.3e}"
            lines.append(
                f"| {sweep} | {stats['checks']} | {stats['passed']} | {stats['seconds']:.3f} | {residual} |"
            )
        lines += ["", "## Falhas", ""]
        if summary["failures"]:
            lines += [f"- `{f['sweep']}` {f['instance']} / {f['check']}: {f['detail']}" for f in summary["failures"]]
        else:
            lines.append("Nenhuma falha.")
        lines += [
            "",
            "## Detalhes Técnicos",
            "",
            f"- **Data da Avaliação**: {time.strftime('%Y-%m-%d %H:%M:%S')}",
            "",
            "---",
            "*Relatório gerado automaticamente pelo avaliador do twistprod*",
            "",
        ]
        try:
            file_path.write_text("\n".join(lines), encoding="utf-8")
        except Exception as e:
            logger.error(f"Erro ao gerar relatório: {str(e)}")
