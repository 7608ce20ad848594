"""
Arquivos dourados: um JSON por exemplo embutido com a matriz seccional, a
curvatura escalar e as constantes de estrutura de referência.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np
import orjson

from ..entity import BuiltinBundle, ExpectedValues, IngestionError
from ..utils.config import get_settings

logger = logging.getLogger(__name__)


def golden_path(name: str, directory: Optional[Path] = None) -> Path:
    directory = get_settings().golden_dir if directory is None else Path(directory)
    return directory / f"{name}.json"


def golden_payload(bundle: BuiltinBundle) -> Dict[str, Any]:
    expected = bundle.expected
    return {
        "name": bundle.name,
        "description": bundle.description,
        "labels": list(bundle.algebra.basis_labels),
        "constants": [[i, j, k, v] for i, j, k, v in expected.constants],
        "sectional": np.asarray(expected.sectional, dtype=float).tolist(),
        "scalar": float(expected.scalar),
        "method": "milnor_full",
    }


def write_golden(bundle: BuiltinBundle, directory: Optional[Path] = None) -> Path:
    """Grava o arquivo dourado de um exemplo e devolve o caminho."""
    path = golden_path(bundle.name, directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(orjson.dumps(golden_payload(bundle), option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS) + b"\n")
    logger.info(f"Arquivo dourado salvo em {path}")
    return path


def load_golden(name: str, directory: Optional[Path] = None) -> Optional[ExpectedValues]:
    """Valores de referência gravados; None quando o arquivo não existe."""
    path = golden_path(name, directory)
    if not path.exists():
        logger.warning(f"Arquivo dourado ausente: {path}")
        return None
    try:
        payload = orjson.loads(path.read_bytes())
        return ExpectedValues(
            np.asarray(payload["sectional"], dtype=float),
            float(payload["scalar"]),
            [(int(i), int(j), int(k), float(v)) for i, j, k, v in payload["constants"]],
        )
    except orjson.JSONDecodeError as e:
        raise IngestionError(f"JSON inválido em {path}: {e.msg}", e.lineno, e.colno)
    except (KeyError, TypeError, ValueError) as e:
        raise IngestionError(f"Arquivo dourado malformado em {path}: {str(e)}")
