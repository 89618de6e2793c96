"""
Hom-Nambu algebra workbench - computational core

Exact structure-constant representation of n-ary Hom-algebras, checkers for
their defining identities, the constructions that transform one into
another, and generators for the standard examples.
"""

from .core import CheckConfig, CheckMode, CheckReport, HomAlgebra, LinearMap, MultilinearMap, Vector, Witness
from .errors import AlgebraError, BudgetExceededError, HypothesisError

__all__ = [
    'AlgebraError',
    'BudgetExceededError',
    'CheckConfig',
    'CheckMode',
    'CheckReport',
    'HomAlgebra',
    'HypothesisError',
    'LinearMap',
    'MultilinearMap',
    'Vector',
    'Witness',
]
