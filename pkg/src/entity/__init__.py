"""
Entidades do twistprod.
"""

from .algebra import InfinitesimalAction, LieAlgebra, StructureTensor, TwistSpec, Vector
from .bundle import BuiltinBundle, DerivationCase, ExpectedValues
from .errors import (
    DimensionMismatchError,
    IngestionError,
    OrderCapError,
    PreconditionError,
    StructuralError,
    TwistProdError,
    UnknownBuiltinError,
)
from .group import CayleyGroup, ConditionResult, GroupAction, TwistCandidate, TwistedInverse, TwistOutcome
from .parametric import ParametricGroup, SmoothAction
from .report import (
    CurvatureMethod,
    CurvatureReport,
    DerivedAction,
    Failure,
    NilpotencyResult,
    ReproductionCheck,
    SampledCheckReport,
    SixRhoReport,
    TwistResult,
    ValidationReport,
)

__all__ = [
    "StructureTensor",
    "LieAlgebra",
    "InfinitesimalAction",
    "TwistSpec",
    "Vector",
    "CayleyGroup",
    "GroupAction",
    "ConditionResult",
    "TwistOutcome",
    "TwistedInverse",
    "TwistCandidate",
    "ParametricGroup",
    "SmoothAction",
    "Failure",
    "ValidationReport",
    "NilpotencyResult",
    "CurvatureMethod",
    "CurvatureReport",
    "SixRhoReport",
    "TwistResult",
    "SampledCheckReport",
    "DerivedAction",
    "ReproductionCheck",
    "BuiltinBundle",
    "DerivationCase",
    "ExpectedValues",
    "TwistProdError",
    "IngestionError",
    "DimensionMismatchError",
    "PreconditionError",
    "StructuralError",
    "OrderCapError",
    "UnknownBuiltinError",
]
