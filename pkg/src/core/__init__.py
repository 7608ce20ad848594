"""
Módulo central do twistprod: álgebras de Lie, produtos torcidos, grupos finitos
e curvatura.

A fachada `TwistProd` fica em `src.core.twistprod` e não é reexportada aqui,
pois depende do corpus, que por sua vez importa estes módulos.
"""

from .curvature import (
    block_scalar_curvatures,
    curvature_report,
    scalar_curvature,
    scalar_curvature_metabelian,
    sectional_curvatures,
    verify_six_rho,
)
from .finite_groups import (
    action_kernel,
    automorphisms,
    check_twist_condition,
    cyclic_group,
    direct_product,
    homomorphisms_to_aut,
    inner_action,
    is_two_step_nilpotent_group,
    random_action_pair,
    search_non_inner_twists,
    semidirect_product,
    trivial_action,
    twisted_inverse,
    twisted_product,
    validate_action,
    validate_group,
)
from .lie_core import (
    abelian_algebra,
    adjoint_action,
    bracket,
    change_basis,
    check_antisymmetry,
    check_jacobi,
    derived_series_dims,
    heisenberg_algebra,
    is_two_step_nilpotent,
    lower_central_series_dims,
    make_algebra,
    nonzero_constants,
    random_two_step_nilpotent,
)
from .twisted_lie import (
    build_inner_twist,
    build_twisted_algebra,
    check_derivation_property,
    direct_sum,
    inner_twist_spec,
    twist_lie,
    twisted_bracket,
    zero_action,
)

__all__ = [
    "block_scalar_curvatures",
    "curvature_report",
    "scalar_curvature",
    "scalar_curvature_metabelian",
    "sectional_curvatures",
    "verify_six_rho",
    "action_kernel",
    "automorphisms",
    "check_twist_condition",
    "cyclic_group",
    "direct_product",
    "homomorphisms_to_aut",
    "inner_action",
    "is_two_step_nilpotent_group",
    "random_action_pair",
    "search_non_inner_twists",
    "semidirect_product",
    "trivial_action",
    "twisted_inverse",
    "twisted_product",
    "validate_action",
    "validate_group",
    "abelian_algebra",
    "adjoint_action",
    "bracket",
    "change_basis",
    "check_antisymmetry",
    "check_jacobi",
    "derived_series_dims",
    "heisenberg_algebra",
    "is_two_step_nilpotent",
    "lower_central_series_dims",
    "make_algebra",
    "nonzero_constants",
    "random_two_step_nilpotent",
    "build_inner_twist",
    "build_twisted_algebra",
    "check_derivation_property",
    "direct_sum",
    "inner_twist_spec",
    "twist_lie",
    "twisted_bracket",
    "zero_action",
]
