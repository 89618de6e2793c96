"""
Twisting constructions.

Composing the bracket of a Hom-algebra with a weak self-morphism beta, and
the twists with beta, gives another Hom-algebra of the same kind:

    V_beta = (V, beta o [.], (beta alpha_1, ..., beta alpha_{n-1}))

Iterating this with beta = alpha on a multiplicative algebra gives its
derived sequence.
"""

import logging
from typing import Optional, Sequence, Union

from algebra.constructions.preconditions import require, warn_unchecked
from algebra.core.hom_algebra import HomAlgebra, is_multiplicative, is_weak_morphism
from algebra.core.linalg import LinearMap
from algebra.core.reports import CheckConfig
from algebra.errors import ShapeError

logger = logging.getLogger(__name__)


def twist(V: HomAlgebra, beta: LinearMap, *, checked: bool = True, cfg: Optional[CheckConfig] = None) -> HomAlgebra:
    """Twist ``V`` by a weak self-morphism ``beta``.

    Raises:
        HypothesisError: ``beta`` does not commute with the bracket.
    """
    return _twist("twist", V, beta, checked, cfg)


def ternary_twist(
    V: HomAlgebra, beta: LinearMap, *, checked: bool = True, cfg: Optional[CheckConfig] = None
) -> HomAlgebra:
    """Twist a ternary algebra (totally Hom-associative, Hom-Jordan or Hom-Lie triple system)."""
    V.require_arity(3, "ternary_twist")
    return _twist("ternary_twist", V, beta, checked, cfg)


def _twist(construction: str, V: HomAlgebra, beta: LinearMap, checked: bool, cfg: Optional[CheckConfig]) -> HomAlgebra:
    if beta.dim != V.dim:
        raise ShapeError(f"{construction}: map has dimension {beta.dim}, algebra has {V.dim}")
    if checked:
        require(construction, "beta is a weak self-morphism", lambda: is_weak_morphism(beta, V, V, cfg))
    else:
        warn_unchecked(construction)
    logger.info(f"{construction}: twisting {V!r}")
    return V.derive(
        construction,
        bracket=V.bracket.twist_product(beta),
        twists=[beta.compose(alpha) for alpha in V.twists],
    )


def derived(V: HomAlgebra, k: int, *, checked: bool = True, cfg: Optional[CheckConfig] = None) -> HomAlgebra:
    """The k-th derived algebra ``(V, alpha^(2^k - 1) o [.], alpha^(2^k))``."""
    if k < 0:
        raise ShapeError(f"derived: k must be nonnegative, got {k}")
    if k == 0:
        return V
    if checked:
        require("derived", "V is multiplicative", lambda: is_multiplicative(V, cfg))
    else:
        warn_unchecked("derived")
    alpha = V.alpha
    twist_map = alpha.power(2**k)
    return V.derive(
        f"derived(k={k})",
        bracket=V.bracket.twist_product(alpha.power(2**k - 1)),
        twists=[twist_map] * (V.arity - 1),
    )


def replace_twists(L: HomAlgebra, maps: Union[LinearMap, Sequence[LinearMap]]) -> HomAlgebra:
    """Keep the bracket and swap in new twisting maps (one map is used for every slot)."""
    if isinstance(maps, LinearMap):
        maps = [maps] * (L.arity - 1)
    return L.derive("replace_twists", twists=list(maps))
