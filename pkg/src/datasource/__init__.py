"""
Fontes de dados do twistprod: esquemas e leitura/escrita dos arquivos JSON.
"""

from .interface import Datasource
from .json_files import JsonDatasource
from .schemas import ActionFile, AlgebraFile, CurvatureReportFile, GroupActionFile, GroupFile, TwistSpecFile
from .serializers import (
    action_to_dict,
    algebra_to_dict,
    condition_to_dict,
    curvature_to_dict,
    derived_action_to_dict,
    dumps,
    group_action_to_dict,
    group_to_dict,
    nilpotency_to_dict,
    reproduction_to_dict,
    sampled_to_dict,
    six_rho_to_dict,
    twist_outcome_to_dict,
    validation_to_dict,
)

__all__ = [
    "Datasource",
    "JsonDatasource",
    "AlgebraFile",
    "ActionFile",
    "TwistSpecFile",
    "GroupFile",
    "GroupActionFile",
    "CurvatureReportFile",
    "action_to_dict",
    "algebra_to_dict",
    "condition_to_dict",
    "curvature_to_dict",
    "derived_action_to_dict",
    "dumps",
    "group_action_to_dict",
    "group_to_dict",
    "nilpotency_to_dict",
    "reproduction_to_dict",
    "sampled_to_dict",
    "six_rho_to_dict",
    "twist_outcome_to_dict",
    "validation_to_dict",
]
