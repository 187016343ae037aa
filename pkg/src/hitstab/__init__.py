"""Hit problem subquotients, functor characters, and stability over F_2."""

from .cache import CharacterCache, cache_get_or_compute, set_cache_dir
from .combinat import (
    concat_ones,
    dominance_leq,
    enumerate_omega,
    enumerate_partitions,
    format_partition,
    is_p_restricted,
    p_adic_compose,
    p_adic_decompose,
    parse_partition,
    stability,
    stability_modulus,
)
from .functor_eval import (
    Character,
    kostka,
    simple_character,
    simple_coeff,
    steinberg_product_check,
    weyl_dim,
)
from .g0 import (
    ConjectureReport,
    IsoCriterionResult,
    StabilityReport,
    conjecture_report,
    decompose_character,
    iso_criterion,
    periodicity_check,
    qa_factors,
    reproduce_table_n8,
    steinberg_reduce,
)
from .steenrod import (
    hit_quotient,
    kernel_dim,
    q_level_dims,
    q_subquotient,
    qa_character,
    qa_dim,
    qa_space,
)

__version__ = "0.1.0"

__all__ = [
    "Character",
    "CharacterCache",
    "ConjectureReport",
    "IsoCriterionResult",
    "StabilityReport",
    "cache_get_or_compute",
    "concat_ones",
    "conjecture_report",
    "decompose_character",
    "dominance_leq",
    "enumerate_omega",
    "enumerate_partitions",
    "format_partition",
    "hit_quotient",
    "is_p_restricted",
    "iso_criterion",
    "kernel_dim",
    "kostka",
    "p_adic_compose",
    "p_adic_decompose",
    "parse_partition",
    "periodicity_check",
    "q_level_dims",
    "q_subquotient",
    "qa_character",
    "qa_dim",
    "qa_factors",
    "qa_space",
    "reproduce_table_n8",
    "set_cache_dir",
    "simple_character",
    "simple_coeff",
    "stability",
    "stability_modulus",
    "steinberg_product_check",
    "steinberg_reduce",
    "weyl_dim",
]
