"""
Conversão das entidades e relatórios em dicionários serializáveis e em bytes JSON.
"""

from typing import Any, Dict, Optional, Sequence

import numpy as np
import orjson

from ..core.lie_core import nonzero_constants
from ..entity import (
    CayleyGroup,
    ConditionResult,
    CurvatureReport,
    DerivedAction,
    Failure,
    GroupAction,
    InfinitesimalAction,
    LieAlgebra,
    NilpotencyResult,
    ReproductionCheck,
    SampledCheckReport,
    SixRhoReport,
    TwistOutcome,
    ValidationReport,
)

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS


def dumps(payload: Any) -> bytes:
    return orjson.dumps(payload, option=JSON_OPTIONS) + b"\n"


def _witness(where: Optional[Sequence[int]]) -> Optional[list]:
    return None if where is None else [int(v) for v in where]


def algebra_to_dict(alg: LieAlgebra, drop_below: float = 0.0) -> Dict[str, Any]:
    """Constantes com i < j, 1-based, em ordem lexicográfica de (i, j, k)."""
    return {
        "dim": alg.dim,
        "labels": list(alg.basis_labels),
        "constants": [list(entry) for entry in nonzero_constants(alg, drop_below)],
        "metric_note": alg.metric_note,
    }


def action_to_dict(action: InfinitesimalAction) -> Dict[str, Any]:
    return {
        "acting_dim": action.acting_dim,
        "target_dim": action.target_dim,
        "matrices": action.matrices.tolist(),
    }


def group_to_dict(group: CayleyGroup) -> Dict[str, Any]:
    return {"order": group.order, "labels": list(group.labels), "table": group.table.tolist(), "name": group.name}


def group_action_to_dict(action: GroupAction) -> Dict[str, Any]:
    return {"maps": action.maps.tolist()}


def failure_to_dict(failure: Failure) -> Dict[str, Any]:
    return {"where": _witness(failure.where), "residual": float(failure.residual), "message": failure.message}


def validation_to_dict(report: ValidationReport, limit: Optional[int] = None) -> Dict[str, Any]:
    failures = report.failures if limit is None else report.failures[:limit]
    return {
        "check": report.check,
        "passed": report.passed,
        "tolerance": report.tolerance,
        "n_failures": len(report.failures),
        "failures": [failure_to_dict(f) for f in failures],
    }


def nilpotency_to_dict(result: NilpotencyResult) -> Dict[str, Any]:
    return {"two_step_nilpotent": result.holds, "witness": _witness(result.witness), "residual": result.residual}


def curvature_to_dict(report: CurvatureReport) -> Dict[str, Any]:
    return {"sectional": report.sectional.tolist(), "scalar": report.scalar, "method": report.method.value}


def six_rho_to_dict(report: SixRhoReport) -> Dict[str, Any]:
    return {
        "rho": report.rho,
        "rho_prime": report.rho_prime,
        "rho_shortcut": report.rho_shortcut,
        "rho_prime_shortcut": report.rho_prime_shortcut,
        "ratio": report.ratio,
        "tolerance": report.tolerance,
        "passed": report.passed,
    }


def condition_to_dict(result: ConditionResult) -> Dict[str, Any]:
    return {"holds": result.holds, "witness": _witness(result.witness), "clause": result.clause}


def twist_outcome_to_dict(outcome: TwistOutcome, include_table: bool = False) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "is_group": outcome.is_group,
        "order": outcome.order,
        "failure_witness": _witness(outcome.failure_witness),
        "condition": condition_to_dict(outcome.condition) if outcome.condition is not None else None,
        "validation": validation_to_dict(outcome.validation, limit=1) if outcome.validation is not None else None,
    }
    if include_table and outcome.table is not None:
        payload["table"] = group_to_dict(outcome.table)
    return payload


def sampled_to_dict(report: SampledCheckReport) -> Dict[str, Any]:
    return {
        "check": report.check,
        "statistical": report.statistical,
        "n_samples": report.n_samples,
        "seed": report.seed,
        "max_residual": report.max_residual,
        "tolerance": report.tolerance,
        "passed": report.passed,
        "failures": [failure_to_dict(f) for f in report.failures[:10]],
    }


def derived_action_to_dict(derived: DerivedAction) -> Dict[str, Any]:
    return {
        "action": action_to_dict(derived.action),
        "step": derived.step,
        "residual": derived.residual,
        "constant": derived.constant,
        "converged": derived.converged,
        "derivation": validation_to_dict(derived.derivation) if derived.derivation is not None else None,
    }


def reproduction_to_dict(check: ReproductionCheck) -> Dict[str, Any]:
    return {
        "target": check.target,
        "check": check.check,
        "passed": check.passed,
        "detail": check.detail,
        "diff": check.diff,
    }


def matrix_to_list(matrix) -> list:
    return np.asarray(matrix, dtype=float).tolist()
