"""
Identity checkers for Hom-algebras.

Every checker takes ``(algebra, cfg)`` and returns a ``CheckReport``;
``CHECKERS`` maps the stable checker names used by documents and the CLI
to the functions.
"""

from .checkers import (
    CHECKERS,
    check_alternative,
    check_antisymmetry,
    check_hom_associative,
    check_hom_jordan_ts,
    check_hom_lie,
    check_hom_lie_ts,
    check_hom_nambu,
    check_jordan,
    check_maltsev,
    check_multiplicative,
    check_nambu_lie,
    check_ternary_total_hom_assoc,
)

__all__ = [
    'CHECKERS',
    'check_alternative',
    'check_antisymmetry',
    'check_hom_associative',
    'check_hom_jordan_ts',
    'check_hom_lie',
    'check_hom_lie_ts',
    'check_hom_nambu',
    'check_jordan',
    'check_maltsev',
    'check_multiplicative',
    'check_nambu_lie',
    'check_ternary_total_hom_assoc',
]
