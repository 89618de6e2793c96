"""
Small Lie and n-Lie algebras used as inputs to the arity constructions.
"""

import logging
from itertools import combinations, permutations

from algebra.constructions.arity import TraceFunctional
from algebra.core.hom_algebra import HomAlgebra
from algebra.core.linalg import LinearMap, ScalarLike, Vector, to_scalar
from algebra.errors import ScalarError, ShapeError

logger = logging.getLogger(__name__)


def sl2() -> HomAlgebra:
    """Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    h, e, f = (Vector.basis(3, i) for i in range(3))
    brackets = {(0, 1): 2 * e, (0, 2): -2 * f, (1, 2): h}
    table = {}
    for (i, j), value in brackets.items():
        table[(i, j)] = value
        table[(j, i)] = -value
    return HomAlgebra.from_table(3, 2, table, name="sl2")


def sl2_scaling_automorphism(t: ScalarLike = 2) -> LinearMap:
    """``h -> h``, ``e -> t e``, ``f -> f / t``."""
    t = to_scalar(t)
    if t == 0:
        raise ScalarError("scaling parameter t must be nonzero")
    return LinearMap.diagonal([1, t, 1 / t])


def affine2() -> HomAlgebra:
    """The two-dimensional non-abelian Lie algebra ``[e1, e2] = e2``."""
    table = {(0, 1): Vector.basis(2, 1), (1, 0): -Vector.basis(2, 1)}
    return HomAlgebra.from_table(2, 2, table, name="affine2")


def affine2_trace() -> TraceFunctional:
    """``tau(e1) = 1``, ``tau(e2) = 0``; vanishes on [L, L] = span(e2)."""
    return TraceFunctional((1, 0))


def _permutation_sign(order) -> int:
    sign = 1
    for i, j in combinations(range(len(order)), 2):
        if order[i] > order[j]:
            sign = -sign
    return sign


def cross_product_nlie(n: int) -> HomAlgebra:
    """The (n+1)-dimensional n-Lie algebra ``[e_i1, ..., e_in] = eps(i1 ... in l) e_l``.

    ``l`` is the one index missing from the arguments; brackets with a
    repeated index vanish.
    """
    if n < 2:
        raise ShapeError(f"cross product bracket needs n >= 2, got {n}")
    dim = n + 1
    table = {}
    for key in permutations(range(dim), n):
        missing = next(l for l in range(dim) if l not in key)
        sign = _permutation_sign(key + (missing,))
        table[key] = sign * Vector.basis(dim, missing)
    logger.debug(f"cross_product_nlie: {len(table)} structure constants on dimension {dim}")
    return HomAlgebra.from_table(dim, n, table, name=f"cross_product_{n}lie")


def quaternion_cross_3lie() -> HomAlgebra:
    """The 3-Lie algebra on Q^4 with ``[e1, e2, e3] = e4``."""
    return cross_product_nlie(3).relabeled("quaternion_cross_3lie")
