"""
Módulo de configuração do twistprod a partir do ambiente (.env).
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler

# Carregar variáveis de ambiente
load_dotenv()

PROJECT_ROOT = Path(__file__).resolve().parents[2]


def _project_path(value: str) -> Path:
    """Caminhos relativos são ancorados na raiz do projeto."""
    path = Path(value)
    return path if path.is_absolute() else PROJECT_ROOT / path


class Settings:
    """Configurações lidas do ambiente no momento da construção."""

    def __init__(self):
        """Inicializa as configurações baseadas no .env."""
        self.tolerance = float(os.getenv("TWISTPROD_TOL", "1e-9"))
        self.seed = int(os.getenv("TWISTPROD_SEED", "0"))
        self.fd_step = float(os.getenv("TWISTPROD_FD_STEP", "1e-4"))
        self.order_cap = int(os.getenv("TWISTPROD_ORDER_CAP", "4096"))
        self.golden_dir = _project_path(os.getenv("TWISTPROD_GOLDEN_DIR", "data/golden"))
        self.results_dir = _project_path(os.getenv("TWISTPROD_RESULTS_DIR", "eval/results"))
        self.log_level = os.getenv("LOG_LEVEL", "WARNING")

        if self.tolerance <= 0:
            raise ValueError(f"TWISTPROD_TOL deve ser positivo, recebido {self.tolerance}")
        if self.fd_step <= 0:
            raise ValueError(f"TWISTPROD_FD_STEP deve ser positivo, recebido {self.fd_step}")

    def get_config_info(self) -> Dict[str, Any]:
        """
        Retorna informações sobre a configuração atual.

        Returns:
            Dicionário com as configurações
        """
        return {
            "tolerance": self.tolerance,
            "seed": self.seed,
            "fd_step": self.fd_step,
            "order_cap": self.order_cap,
            "golden_dir": str(self.golden_dir),
            "results_dir": str(self.results_dir),
            "log_level": self.log_level,
        }


def get_settings() -> Settings:
    return Settings()


def resolve_tolerance(tol: Optional[float]) -> float:
    """Tolerância explícita ou o padrão de TWISTPROD_TOL."""
    return get_settings().tolerance if tol is None else float(tol)


def setup_logging(level: Optional[str] = None) -> None:
    """Configura o logging com saída rich; o nível padrão vem de LOG_LEVEL."""
    level = (level or get_settings().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=True, show_path=False)],
        force=True,
    )
