"""
Corpus do twistprod: grupos paramétricos, grupos finitos embutidos, exemplos
com valores de referência e a reprodução dos exemplos.
"""

from .builtin import (
    BUILTIN_NAMES,
    E2_CANONICAL_BASIS,
    E2_SKEW_BASIS,
    builtin,
    derivation_cases,
    e2_algebra,
    e2_raw_algebra,
    e2_rotation_matrices,
    semidirect_heisenberg_spec,
    shear_matrices,
)
from .derivation import derive_infinitesimal_action
from .finite import finite_corpus, finite_group, quaternion_group
from .golden import golden_payload, load_golden, write_golden
from .parametric import (
    conjugation_action,
    e2_center_kernel,
    e2_group,
    e2_inner_action,
    e2_rotation_action,
    e2_translation_kernel,
    heisenberg_center_kernel,
    heisenberg_group,
    heisenberg_inner_action,
    heisenberg_printed_conjugation,
    r_group,
    render_e2_matrix,
    shear_action,
    trivial_smooth_action,
    validate_parametric_group,
    validate_smooth_action,
)
from .reproduce import EXAMPLE_TARGETS, reproduce
from .sampled import sampled_condition_check

__all__ = [
    "BUILTIN_NAMES",
    "E2_CANONICAL_BASIS",
    "E2_SKEW_BASIS",
    "builtin",
    "derivation_cases",
    "e2_algebra",
    "e2_raw_algebra",
    "e2_rotation_matrices",
    "semidirect_heisenberg_spec",
    "shear_matrices",
    "derive_infinitesimal_action",
    "finite_corpus",
    "finite_group",
    "quaternion_group",
    "golden_payload",
    "load_golden",
    "write_golden",
    "conjugation_action",
    "e2_center_kernel",
    "e2_group",
    "e2_inner_action",
    "e2_rotation_action",
    "e2_translation_kernel",
    "heisenberg_center_kernel",
    "heisenberg_group",
    "heisenberg_inner_action",
    "heisenberg_printed_conjugation",
    "r_group",
    "render_e2_matrix",
    "shear_action",
    "trivial_smooth_action",
    "validate_parametric_group",
    "validate_smooth_action",
    "EXAMPLE_TARGETS",
    "reproduce",
    "sampled_condition_check",
]
