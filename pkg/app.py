"""
Interface de linha de comando do twistprod - produtos torcidos de grupos e
álgebras de Lie.

Códigos de saída: 0 verificação aprovada, 1 verificação reprovada (execução
correta), 2 erro de entrada ou de uso.
"""

import sys
from collections import defaultdict
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import numpy as np
import typer
from rich.console import Console
from rich.table import Table

sys.path.append(str(Path(__file__).parent))

from src.core.twistprod import TwistProd
from src.datasource import dumps
from src.entity import CurvatureMethod
from src.utils import format_combination, format_matrix, format_scalar, setup_logging

app = typer.Typer(
    help="twistprod - produtos torcidos de grupos e álgebras de Lie",
    no_args_is_help=True,
    add_completion=False,
)
console = Console(soft_wrap=True)
err_console = Console(stderr=True, soft_wrap=True)


class OutputFormat(str, Enum):
    text = "text"
    json = "json"


Renderer = Callable[[Console, Dict[str, Any]], None]

TOL_OPTION = typer.Option(None, "--tol", help="Tolerância absoluta (padrão TWISTPROD_TOL)")
SEED_OPTION = typer.Option(None, "--seed", help="Semente das verificações amostrais")
OUT_OPTION = typer.Option(None, "--out", help="Grava o relatório neste arquivo em vez da saída padrão")
FORMAT_OPTION = typer.Option(OutputFormat.text, "--format", help="Formato do relatório")


@app.callback()
def main(log_level: Optional[str] = typer.Option(None, "--log-level", help="Nível de log (padrão LOG_LEVEL)")):
    setup_logging(log_level)


# ---------------------------------------------------------------------------
# renderização
# ---------------------------------------------------------------------------


def _line(out: Console, text: str = "") -> None:
    out.print(text, markup=False, highlight=False)


def _status(passed: bool, text: str) -> str:
    return f"{'✅' if passed else '❌'} {text}"


def _render_algebra(out: Console, algebra: Dict[str, Any]) -> None:
    dim, labels = algebra["dim"], algebra["labels"]
    brackets: Dict[tuple, np.ndarray] = defaultdict(lambda: np.zeros(dim))
    for i, j, k, value in algebra["constants"]:
        brackets[(i, j)][k - 1] = value
    _line(out, f"Álgebra de dimensão {dim} ({algebra['metric_note']})")
    if not brackets:
        _line(out, "  todos os colchetes são nulos")
    for (i, j), vector in sorted(brackets.items()):
        _line(out, f"  [{labels[i - 1]}, {labels[j - 1]}] = {format_combination(vector, labels)}")


def _render_validation(out: Console, report: Dict[str, Any]) -> None:
    if report["passed"]:
        _line(out, _status(True, f"{report['check']}: passou"))
        return
    _line(out, _status(False, f"{report['check']}: {report['n_failures']} falha(s)"))
    table = Table("onde (0-based)", "resíduo", "descrição")
    for failure in report["failures"]:
        table.add_row(str(tuple(failure["where"])), f"{failure['residual']:.3e}", failure["message"])
    out.print(table)


def _render_matrix(out: Console, title: str, matrix) -> None:
    _line(out, title)
    for row in format_matrix(matrix):
        _line(out, f"  {row}")


def _emit(result: Dict[str, Any], fmt: OutputFormat, out: Optional[Path], render: Renderer) -> None:
    if not result["success"]:
        err_console.print(f"❌ Erro ({result['error_type']}): {result['error']}", markup=False, highlight=False)
        raise typer.Exit(code=2)
    payload = result["payload"]
    if fmt == OutputFormat.json:
        data = dumps(payload).decode("utf-8")
        if out is not None:
            out.write_text(data, encoding="utf-8")
        else:
            typer.echo(data, nl=False)
    elif out is not None:
        with open(out, "w", encoding="utf-8") as handle:
            render(Console(file=handle, width=120, color_system=None, soft_wrap=True), payload)
    else:
        render(console, payload)
    raise typer.Exit(code=0 if result["passed"] else 1)


# ---------------------------------------------------------------------------
# álgebras de Lie
# ---------------------------------------------------------------------------


@app.command("twist-lie")
def twist_lie(
    spec: str = typer.Argument(..., help="JSON com g, h, L e M"),
    tol: Optional[float] = TOL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Monta a álgebra do produto torcido e verifica Jacobi."""

    def render(console_: Console, payload: Dict[str, Any]) -> None:
        _render_algebra(console_, payload["algebra"])
        _render_validation(console_, payload["jacobi"])

    _emit(TwistProd(tol).twist_lie(spec), fmt, out, render)


@app.command("inner-twist")
def inner_twist(
    algebra: str = typer.Argument(..., help="JSON da álgebra ou nome embutido"),
    tol: Optional[float] = TOL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Torcimento da álgebra consigo mesma pelas ações internas."""

    def render(console_: Console, payload: Dict[str, Any]) -> None:
        nilpotent = payload["input_two_step_nilpotent"]
        if not nilpotent["two_step_nilpotent"]:
            _line(console_, _status(False, f"entrada não é 2-nilpotente (tripla {tuple(nilpotent['witness'])})"))
        _render_algebra(console_, payload["algebra"])
        _render_validation(console_, payload["jacobi"])

    _emit(TwistProd(tol).inner_twist(algebra), fmt, out, render)


@app.command("curvature")
def curvature(
    algebra: str = typer.Argument(..., help="JSON da álgebra ou nome embutido"),
    method: CurvatureMethod = typer.Option(CurvatureMethod.MILNOR_FULL, "--method", help="Fórmula do escalar"),
    tol: Optional[float] = TOL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Curvaturas seccionais e curvatura escalar da métrica invariante à esquerda."""

    def render(console_: Console, payload: Dict[str, Any]) -> None:
        _render_matrix(console_, "Curvaturas seccionais k_ij:", payload["sectional"])
        _line(console_, f"Curvatura escalar ρ = {format_scalar(payload['scalar'])} ({payload['method']})")

    _emit(TwistProd(tol).curvature(algebra, method), fmt, out, render)


@app.command("check-jacobi")
def check_jacobi(
    algebra: str = typer.Argument(..., help="JSON da álgebra ou nome embutido"),
    tol: Optional[float] = TOL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Antissimetria e identidade de Jacobi nas triplas da base."""

    def render(console_: Console, payload: Dict[str, Any]) -> None:
        _render_validation(console_, payload["antisymmetry"])
        _render_validation(console_, payload["jacobi"])

    _emit(TwistProd(tol).check_jacobi(algebra), fmt, out, render)


@app.command("check-nilpotent")
def check_nilpotent(
    algebra: str = typer.Argument(..., help="JSON da álgebra ou nome embutido"),
    tol: Optional[float] = TOL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Verifica [[e_i, e_j], e_k] = 0 em todas as triplas."""

    def render(console_: Console, payload: Dict[str, Any]) -> None:
        if payload["two_step_nilpotent"]:
            _line(console_, _status(True, "2-nilpotente"))
        else:
            _line(
                console_,
                _status(
                    False,
                    f"não é 2-nilpotente: tripla {tuple(payload['witness'])}, "
                    f"resíduo {format_scalar(payload['residual'])}",
                ),
            )

    _emit(TwistProd(tol).check_nilpotent(algebra), fmt, out, render)


@app.command("verify-6rho")
def verify_6rho(
    algebra: str = typer.Argument(..., help="JSON de uma álgebra 2-nilpotente ou nome embutido"),
    tol: Optional[float] = TOL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Compara a curvatura escalar do torcimento interno com 6ρ."""

    def render(console_: Console, payload: Dict[str, Any]) -> None:
        _line(console_, f"ρ  = {format_scalar(payload['rho'])} (atalho {format_scalar(payload['rho_shortcut'])})")
        _line(
            console_,
            f"ρ′ = {format_scalar(payload['rho_prime'])} (atalho {format_scalar(payload['rho_prime_shortcut'])})",
        )
        ratio = payload["ratio"]
        _line(console_, f"ρ′/ρ = {format_scalar(ratio) if ratio is not None else 'indefinido (ρ = 0)'}")
        _line(console_, _status(payload["passed"], "ρ′ = 6ρ"))

    _emit(TwistProd(tol).verify_six_rho(algebra), fmt, out, render)


# ---------------------------------------------------------------------------
# grupos finitos
# ---------------------------------------------------------------------------


G_OPTION = typer.Option(..., "--g", help="JSON do grupo G ou nome do corpus finito (p.ex. S3, Q8)")
H_OPTION = typer.Option(None, "--h", help="JSON do grupo H ou nome do corpus finito")
INNER_OPTION = typer.Option(False, "--inner", help="Usa H = G e as ações internas")
LAMBDA_OPTION = typer.Option(None, "--lambda", help="JSON da ação λ de H sobre G")
MU_OPTION = typer.Option(None, "--mu", help="JSON da ação μ de G sobre H")


@app.command("fg-twist")
def fg_twist(
    g: str = G_OPTION,
    h: Optional[str] = H_OPTION,
    inner: bool = INNER_OPTION,
    lambda_path: Optional[str] = LAMBDA_OPTION,
    mu_path: Optional[str] = MU_OPTION,
    table: bool = typer.Option(False, "--table", help="Inclui a tabela do produto no relatório JSON"),
    out: Optional[Path] = OUT_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Produto torcido de dois grupos finitos com verificação exaustiva dos axiomas."""

    def render(console_: Console, payload: Dict[str, Any]) -> None:
        name = f"{payload['g']} * {payload['h']}"
        if payload["is_group"]:
            _line(console_, _status(True, f"{name} é um grupo de ordem {payload['order']}"))
            return
        witness = payload["failure_witness"]
        labels = ", ".join(payload["failure_labels"])
        _line(console_, _status(False, f"{name} não é grupo (ordem {payload['order']})"))
        _line(console_, f"  associatividade falha na tripla {tuple(witness)}: {labels}")
        condition = payload["condition"]
        if condition is not None and condition["witness"] is not None:
            _line(console_, f"  condição de núcleos falha em (g, h) = {tuple(condition['witness'])} ({condition['clause']})")

    _emit(TwistProd().fg_twist(g, h, inner, lambda_path, mu_path, table), fmt, out, render)


@app.command("fg-condition")
def fg_condition(
    g: str = G_OPTION,
    h: Optional[str] = H_OPTION,
    inner: bool = INNER_OPTION,
    lambda_path: Optional[str] = LAMBDA_OPTION,
    mu_path: Optional[str] = MU_OPTION,
    out: Optional[Path] = OUT_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Condição de núcleos μ(g)(h)·h⁻¹ ∈ ker λ e λ(h)(g)·g⁻¹ ∈ ker μ."""

    def render(console_: Console, payload: Dict[str, Any]) -> None:
        _line(console_, f"ker λ = {payload['kernel_lambda']}")
        _line(console_, f"ker μ = {payload['kernel_mu']}")
        if payload["holds"]:
            _line(console_, _status(True, "condição satisfeita"))
        else:
            g_label, h_label = payload["witness_labels"]
            _line(
                console_,
                _status(False, f"condição violada em (g, h) = ({g_label}, {h_label}), cláusula {payload['clause']}"),
            )

    _emit(TwistProd().fg_condition(g, h, inner, lambda_path, mu_path), fmt, out, render)


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------


@app.command("derive-action")
def derive_action(
    name: str = typer.Argument(..., help="Caso de derivação (veja list-builtins)"),
    step: Optional[float] = typer.Option(None, "--step", help="Passo h (padrão TWISTPROD_FD_STEP)"),
    out: Optional[Path] = OUT_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Deriva L por diferenças finitas e compara com a forma fechada."""

    def render(console_: Console, payload: Dict[str, Any]) -> None:
        for a, matrix in enumerate(payload["action"]["matrices"]):
            _render_matrix(console_, f"L(E{a + 1}) derivada:", matrix)
        _line(console_, f"passo h = {payload['step']:.3g}, |L(h) - L(h/2)| = {payload['residual']:.3e}")
        _line(console_, f"constante de segunda ordem C ≈ {payload['constant']:.3e}")
        _line(console_, f"erro máximo contra a forma fechada: {payload['max_error']:.3e}")
        if payload["derivation"] is not None:
            _render_validation(console_, payload["derivation"])
        _line(console_, _status(payload["converged"], "convergência h → h/2"))

    _emit(TwistProd().derive_action(name, step), fmt, out, render)


@app.command("reproduce")
def reproduce(
    target: str = typer.Argument(..., help="example1 … example5 ou all"),
    golden_dir: Optional[str] = typer.Option(None, "--golden-dir", help="Diretório dos arquivos dourados"),
    tol: Optional[float] = TOL_OPTION,
    seed: Optional[int] = SEED_OPTION,
    out: Optional[Path] = OUT_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Recalcula os exemplos e compara com os valores embutidos e dourados."""

    def render(console_: Console, payload: Dict[str, Any]) -> None:
        current = None
        for check in payload["checks"]:
            if check["target"] != current:
                current = check["target"]
                _line(console_, f"== {current} ==")
            _line(console_, _status(check["passed"], check["check"]))
            for detail in check["detail"].splitlines():
                _line(console_, f"    {detail}")
            if check["diff"]:
                _line(console_, check["diff"])
        total = len(payload["checks"])
        failed = sum(not c["passed"] for c in payload["checks"])
        _line(console_, _status(payload["passed"], f"{total - failed}/{total} verificações"))

    _emit(TwistProd(tol, seed).reproduce(target, golden_dir), fmt, out, render)


@app.command("list-builtins")
def list_builtins(fmt: OutputFormat = FORMAT_OPTION):
    """Exemplos embutidos, casos de derivação e grupos finitos do corpus."""

    def render(console_: Console, payload: Dict[str, Any]) -> None:
        table = Table("exemplo", "descrição")
        for name, description in payload["builtins"].items():
            table.add_row(name, description)
        console_.print(table)
        _line(console_, f"casos de derivação: {', '.join(payload['derivation_cases'])}")
        groups = ", ".join(f"{name} ({order})" for name, order in payload["finite_groups"].items())
        _line(console_, f"grupos finitos: {groups}")

    _emit(TwistProd().list_builtins(), fmt, None, render)


@app.command("export-builtin")
def export_builtin(
    name: str = typer.Argument(..., help="Nome do exemplo embutido"),
    directory: Path = typer.Argument(..., help="Diretório de destino"),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Grava o exemplo como arquivos JSON utilizáveis pelos demais comandos."""
    _emit(TwistProd().export_builtin(name, str(directory)), fmt, None, _render_files)


@app.command("export-group")
def export_group(
    name: str = typer.Argument(..., help="Nome do grupo no corpus finito"),
    path: Path = typer.Argument(..., help="Arquivo JSON de destino"),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Grava um grupo do corpus finito no formato JSON de grupos."""
    _emit(TwistProd().export_group(name, str(path)), fmt, None, _render_files)


def _render_files(out: Console, payload: Dict[str, Any]) -> None:
    for path in payload["files"]:
        _line(out, f"📁 {path}")


@app.command("status")
def status(
    tol: Optional[float] = TOL_OPTION,
    seed: Optional[int] = SEED_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Configuração efetiva (.env e opções) e arquivos dourados disponíveis."""

    def render(console_: Console, payload: Dict[str, Any]) -> None:
        table = Table("configuração", "valor")
        for key, value in payload.items():
            table.add_row(key, str(value))
        console_.print(table)

    _emit(TwistProd(tol, seed).get_system_status(), fmt, None, render)


if __name__ == "__main__":
    app()
