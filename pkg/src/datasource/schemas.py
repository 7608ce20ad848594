"""
Esquemas pydantic dos arquivos JSON de entrada e saída.
"""

from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, model_validator


class AlgebraFile(BaseModel):
    """`{"dim": n, "labels": [...], "constants": [[i, j, k, valor], ...]}`, índices 1-based."""

    model_config = ConfigDict(extra="forbid")

    dim: PositiveInt
    labels: Optional[List[str]] = None
    constants: List[Tuple[int, int, int, float]] = Field(default_factory=list)
    metric_note: Optional[str] = None

    @model_validator(mode="after")
    def _labels_match_dim(self) -> "AlgebraFile":
        if self.labels is not None and len(self.labels) != self.dim:
            raise ValueError(f"{len(self.labels)} rótulos para dimensão {self.dim}")
        return self


class ActionFile(BaseModel):
    """Uma matriz target_dim × target_dim (por linhas) por vetor da base atuante."""

    model_config = ConfigDict(extra="forbid")

    acting_dim: PositiveInt
    target_dim: PositiveInt
    matrices: List[List[List[float]]]


class TwistSpecFile(BaseModel):
    """Álgebras e ações embutidas ou caminhos relativos ao próprio arquivo."""

    model_config = ConfigDict(extra="forbid")

    g: Union[AlgebraFile, str]
    h: Union[AlgebraFile, str]
    L: Union[ActionFile, str]
    M: Union[ActionFile, str]


class GroupFile(BaseModel):
    """`{"order": n, "labels": [...], "table": [[...], ...]}`, índices 0-based."""

    model_config = ConfigDict(extra="forbid")

    order: PositiveInt
    labels: Optional[List[str]] = None
    table: List[List[int]]
    name: Optional[str] = None

    @model_validator(mode="after")
    def _square(self) -> "GroupFile":
        if len(self.table) != self.order or any(len(row) != self.order for row in self.table):
            raise ValueError(f"Tabela deve ser {self.order}×{self.order}")
        return self


class GroupActionFile(BaseModel):
    """`{"maps": [[permutação], ...]}` indexado pelos elementos do grupo atuante."""

    model_config = ConfigDict(extra="forbid")

    maps: List[List[int]]


class CurvatureReportFile(BaseModel):
    """Saída de `curvature --format json`: matriz seccional quadrada, escalar e método."""

    model_config = ConfigDict(extra="forbid")

    sectional: List[List[float]]
    scalar: float
    method: Literal["milnor_full", "metabelian_shortcut"]

    @model_validator(mode="after")
    def _square_sectional(self) -> "CurvatureReportFile":
        n = len(self.sectional)
        if any(len(row) != n for row in self.sectional):
            raise ValueError(f"Matriz seccional deve ser {n}×{n}")
        return self
