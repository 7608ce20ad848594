from pathlib import Path
from typing import Any, Optional, Type, TypeVar, Union
import logging

import orjson
from pydantic import BaseModel, ValidationError

from src.core.lie_core import make_algebra
from src.datasource.interface import Datasource, PathLike
from src.datasource.schemas import (
    ActionFile,
    AlgebraFile,
    GroupActionFile,
    GroupFile,
    TwistSpecFile,
)
from src.datasource.serializers import dumps
from src.entity import (
    CayleyGroup,
    DimensionMismatchError,
    GroupAction,
    InfinitesimalAction,
    IngestionError,
    LieAlgebra,
    TwistSpec,
)
from src.entity.algebra import ORTHONORMAL_NOTE

logger = logging.getLogger(__name__)

Model = TypeVar("Model", bound=BaseModel)


class JsonDatasource(Datasource):
    """Leitura e escrita dos formatos JSON de álgebras, ações, grupos e especificações."""

    def __init__(self, tol: Optional[float] = None):
        self.tol = tol

    def _read(self, path: PathLike) -> Any:
        path = Path(path)
        try:
            return orjson.loads(path.read_bytes())
        except FileNotFoundError:
            raise IngestionError(f"Arquivo não encontrado: {path}")
        except orjson.JSONDecodeError as e:
            raise IngestionError(f"JSON inválido em {path}: {e.msg}", e.lineno, e.colno)

    def _validate(self, model: Type[Model], payload: Any, origin: str) -> Model:
        try:
            return model.model_validate(payload)
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(part) for part in first["loc"]) or "<raiz>"
            raise IngestionError(f"Esquema inválido em {origin} ({where}): {first['msg']}")

    def _algebra(self, data: AlgebraFile) -> LieAlgebra:
        return make_algebra(
            data.dim,
            data.constants,
            labels=data.labels,
            metric_note=data.metric_note or ORTHONORMAL_NOTE,
            tol=self.tol,
        )

    def _action(self, data: ActionFile) -> InfinitesimalAction:
        for a, matrix in enumerate(data.matrices):
            if len(matrix) != data.target_dim or any(len(row) != data.target_dim for row in matrix):
                raise DimensionMismatchError(f"linhas da matriz {a + 1}", data.target_dim, len(matrix))
        if len(data.matrices) != data.acting_dim:
            raise DimensionMismatchError("número de matrizes (acting_dim)", data.acting_dim, len(data.matrices))
        return InfinitesimalAction(data.acting_dim, data.target_dim, data.matrices)

    def load_algebra(self, path: PathLike) -> LieAlgebra:
        algebra = self._algebra(self._validate(AlgebraFile, self._read(path), str(path)))
        logger.info(f"Álgebra de dimensão {algebra.dim} carregada de {path}")
        return algebra

    def load_action(self, path: PathLike) -> InfinitesimalAction:
        return self._action(self._validate(ActionFile, self._read(path), str(path)))

    def load_twist_spec(self, path: PathLike) -> TwistSpec:
        """Caminhos dentro da especificação são relativos ao diretório do arquivo."""
        path = Path(path)
        data = self._validate(TwistSpecFile, self._read(path), str(path))
        base = path.parent

        def algebra(item: Union[AlgebraFile, str]) -> LieAlgebra:
            return self.load_algebra(base / item) if isinstance(item, str) else self._algebra(item)

        def action(item: Union[ActionFile, str]) -> InfinitesimalAction:
            return self.load_action(base / item) if isinstance(item, str) else self._action(item)

        return TwistSpec(algebra(data.g), algebra(data.h), action(data.L), action(data.M))

    def load_group(self, path: PathLike) -> CayleyGroup:
        data = self._validate(GroupFile, self._read(path), str(path))
        return CayleyGroup(data.table, data.labels or [], data.name or Path(path).stem)

    def load_group_action(self, path: PathLike, source: CayleyGroup, target: CayleyGroup) -> GroupAction:
        data = self._validate(GroupActionFile, self._read(path), str(path))
        if len(data.maps) != source.order:
            raise DimensionMismatchError("número de permutações (ordem do grupo atuante)", source.order, len(data.maps))
        for h, perm in enumerate(data.maps):
            if len(perm) != target.order:
                raise DimensionMismatchError(f"permutação {h} (ordem do grupo alvo)", target.order, len(perm))
        return GroupAction(source, target, data.maps)

    def save(self, payload: Any, path: PathLike) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(dumps(payload))
        logger.info(f"Arquivo salvo em {path}")
        return path
