from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Union

from src.entity import CayleyGroup, GroupAction, InfinitesimalAction, LieAlgebra, TwistSpec

PathLike = Union[str, Path]


class Datasource(ABC):
    @abstractmethod
    def load_algebra(self, path: PathLike) -> LieAlgebra:
        pass

    @abstractmethod
    def load_action(self, path: PathLike) -> InfinitesimalAction:
        pass

    @abstractmethod
    def load_twist_spec(self, path: PathLike) -> TwistSpec:
        pass

    @abstractmethod
    def load_group(self, path: PathLike) -> CayleyGroup:
        pass

    @abstractmethod
    def load_group_action(self, path: PathLike, source: CayleyGroup, target: CayleyGroup) -> GroupAction:
        pass

    @abstractmethod
    def save(self, payload: Any, path: PathLike) -> Path:
        pass
