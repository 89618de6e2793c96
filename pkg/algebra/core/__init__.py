"""
Exact linear algebra, the HomAlgebra value and check reports.
"""

from .enumeration import Condition, basis_tuples, check_conditions, combine_reports, random_vectors
from .hom_algebra import (
    HomAlgebra,
    compare_twists,
    hom_associator,
    hom_jacobian,
    is_anti_morphism,
    is_morphism,
    is_multiplicative,
    is_weak_morphism,
)
from .linalg import (
    LinearMap,
    MultilinearMap,
    Vector,
    apply,
    compose,
    evaluate,
    power,
    to_scalar,
    twist_product,
)
from .reports import CheckConfig, CheckMode, CheckReport, Witness

__all__ = [
    'CheckConfig',
    'CheckMode',
    'CheckReport',
    'Condition',
    'HomAlgebra',
    'LinearMap',
    'MultilinearMap',
    'Vector',
    'Witness',
    'apply',
    'basis_tuples',
    'check_conditions',
    'combine_reports',
    'compare_twists',
    'compose',
    'evaluate',
    'hom_associator',
    'hom_jacobian',
    'is_anti_morphism',
    'is_morphism',
    'is_multiplicative',
    'is_weak_morphism',
    'power',
    'random_vectors',
    'to_scalar',
    'twist_product',
]
