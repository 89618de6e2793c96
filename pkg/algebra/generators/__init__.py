"""
Generators for the concrete algebras: bilinear-form triple systems and the
fermionic example, octonions and the exceptional Jordan algebra, matrix
algebras and their triple systems, and small Lie and n-Lie algebras.
"""

from .forms import (
    BilinearForm,
    bilinear_jts,
    bilinear_lts,
    fermionic_alpha,
    fermionic_direct,
    fermionic_form,
    fermionic_system,
)
from .lie import affine2, affine2_trace, cross_product_nlie, quaternion_cross_3lie, sl2, sl2_scaling_automorphism
from .matrices import (
    hom_pair_ternary_ring,
    involution_jts,
    matrix_algebra,
    matrix_conjugation,
    matrix_jts,
    matrix_ternary_ring,
    reversal_permutation,
    transpose_map,
    upper_triangular2,
    upper_triangular2_scaling,
)
from .octonions import (
    OCTONION_TABLE,
    OctonionTable,
    exceptional_jordan,
    lift,
    octonion_basic_triple_automorphism,
    octonion_conjugate,
    octonions,
)
from .registry import GENERATORS, GeneratedExample, generate

__all__ = [
    'BilinearForm',
    'GENERATORS',
    'GeneratedExample',
    'OCTONION_TABLE',
    'OctonionTable',
    'affine2',
    'affine2_trace',
    'bilinear_jts',
    'bilinear_lts',
    'cross_product_nlie',
    'exceptional_jordan',
    'fermionic_alpha',
    'fermionic_direct',
    'fermionic_form',
    'fermionic_system',
    'generate',
    'hom_pair_ternary_ring',
    'involution_jts',
    'lift',
    'matrix_algebra',
    'matrix_conjugation',
    'matrix_jts',
    'matrix_ternary_ring',
    'octonion_basic_triple_automorphism',
    'octonion_conjugate',
    'octonions',
    'quaternion_cross_3lie',
    'reversal_permutation',
    'sl2',
    'sl2_scaling_automorphism',
    'transpose_map',
    'upper_triangular2',
    'upper_triangular2_scaling',
]
