"""
Checked algebra-to-algebra constructions.

Each construction verifies the hypotheses of the result it realizes before
materializing the output structure constants; pass ``checked=False`` to skip
the verification.
"""

from .arity import (
    DEFAULT_TABLE_BUDGET,
    TraceFunctional,
    iterate_raise,
    lower_arity,
    lower_arity_k,
    raise_arity,
    reduce_trace_bracket,
    ternary_from_trace,
)
from .triple_systems import (
    jts_from_jordan,
    jts_from_ternary_assoc,
    lts_from_hom_assoc,
    lts_from_hom_lie,
    lts_from_jts,
    lts_from_maltsev,
    lts_from_ternary_assoc,
    minus_algebra,
    plus_algebra,
    ternary_assoc_from_hom_assoc,
)
from .twisting import derived, replace_twists, ternary_twist, twist
from .catalog import RECIPES, ConstructionRecipe, ParamKind, RecipeSpec

__all__ = [
    'ConstructionRecipe',
    'DEFAULT_TABLE_BUDGET',
    'ParamKind',
    'RECIPES',
    'RecipeSpec',
    'TraceFunctional',
    'derived',
    'iterate_raise',
    'jts_from_jordan',
    'jts_from_ternary_assoc',
    'lower_arity',
    'lower_arity_k',
    'lts_from_hom_assoc',
    'lts_from_hom_lie',
    'lts_from_jts',
    'lts_from_maltsev',
    'lts_from_ternary_assoc',
    'minus_algebra',
    'plus_algebra',
    'raise_arity',
    'reduce_trace_bracket',
    'replace_twists',
    'ternary_assoc_from_hom_assoc',
    'ternary_from_trace',
    'ternary_twist',
    'twist',
]
