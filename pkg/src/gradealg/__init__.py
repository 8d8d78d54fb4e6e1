"""Exact computations on finite graded rings: gradings, graded ideal
lattices, the zoo of graded primeness notions, and their radicals."""

from .caps import Caps, CapExceeded, DEFAULT_CAPS, caps_from_env
from .core import (
    FiniteGroup,
    FiniteModule,
    FiniteRing,
    ValidationError,
    bracket_ring,
    cyclic_module,
    idealization,
    make_cyclic_ring,
    make_field,
    make_matrix_ring,
    make_prime_field,
    make_product_ring,
    make_quotient_ring,
    make_subring,
    make_zero_mult_ring,
)
from .grading import (
    GradedModule,
    GradedRing,
    GradingError,
    bracket_graded,
    graded_module,
    idealization_graded,
    product_graded_ring,
    quotient_graded_ring,
    trivial_grading,
    trivial_module_grading,
    validate_grading,
)
from .ideals import (
    ColonSet,
    Ideal,
    additive_closure,
    all_graded_ideals,
    all_ideals,
    colon,
    generate,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    is_graded,
    maximal_graded_ideals,
    principal_graded_ideal,
    re_submodules,
    subset_product,
)
from .prime import (
    WHOLE_RING,
    all_graded_weakly_prime,
    gn_radical,
    gp_radical,
    gw_intersection,
    gw_systems,
    is_component_weakly_prime,
    is_graded_prime,
    is_graded_weakly_prime,
    is_weakly_system,
    is_xry_weakly_prime,
    weakly_systems_within,
)
from .results import CheckResult
from .total import (
    all_graded_weakly_total_prime,
    colon_characterization,
    g_twin_zeros,
    is_g_weakly_total_prime,
    is_graded_total_prime,
    is_graded_weakly_total_prime,
    principal_triple_check,
    total_twin_zeros,
)

__version__ = "0.1.0"
