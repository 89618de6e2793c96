"""
Triple systems built from binary and ternary Hom-algebras.

Key Features:
- J(A): Hom-Jordan triple system {xyz} = (xyz) + (zyx) of a ternary totally
  Hom-associative algebra
- L(J): Meyberg's Hom-Lie triple system [xyz] = {xyz} - {yxz}
- L(A): the four-term Hom-Lie triple system, L(J(A)) in closed form
- A_T / L_T / A_L: ternary products (xy)alpha(z) and [[x,y],alpha(z)] from
  binary Hom-associative and Hom-Lie algebras
- Plus and minus algebras, Jordan triple systems of Jordan algebras and Lie
  triple systems of Maltsev algebras

Every construction materializes its output structure constants eagerly and,
unless called with ``checked=False``, verifies the hypotheses its conclusion
depends on first.
"""

import logging
from fractions import Fraction
from typing import Optional

from algebra.constructions.preconditions import require, warn_unchecked
from algebra.core.hom_algebra import HomAlgebra, compare_twists, is_multiplicative
from algebra.core.linalg import LinearMap, MultilinearMap
from algebra.core.reports import CheckConfig
from algebra.errors import AlgebraError
from algebra.identities.checkers import check_hom_associative, check_hom_lie, check_jordan, check_maltsev

logger = logging.getLogger(__name__)


def _require_equal_twists(construction: str, A: HomAlgebra, checked: bool) -> None:
    if checked:
        require(construction, "twists are equal", lambda: compare_twists(A))
    else:
        warn_unchecked(construction)


def _jordan_table(m: MultilinearMap) -> MultilinearMap:
    return m + m.permuted((2, 1, 0))


def _meyberg_table(m: MultilinearMap) -> MultilinearMap:
    return m - m.permuted((1, 0, 2))


def _product_then_twist(A: HomAlgebra) -> MultilinearMap:
    mu = A.bracket.evaluate
    alpha = A.alpha
    return MultilinearMap.from_function(A.dim, 3, lambda a: mu([mu([a[0], a[1]]), alpha(a[2])]))


def _assert_same_table(construction: str, direct: MultilinearMap, composed: MultilinearMap) -> None:
    if direct != composed:
        raise AlgebraError(f"{construction}: closed form disagrees with the composed construction")


# ---------------------------------------------------------------------------
# From ternary algebras
# ---------------------------------------------------------------------------


def jts_from_ternary_assoc(A: HomAlgebra, *, checked: bool = True, cfg: Optional[CheckConfig] = None) -> HomAlgebra:
    """``{xyz} = (xyz) + (zyx)``, same twists.

    Ternary total Hom-associativity of ``A`` is the caller's responsibility;
    only equality of the twists is checked.
    """
    A.require_arity(3, "jts_from_ternary_assoc")
    _require_equal_twists("jts_from_ternary_assoc", A, checked)
    return A.derive("jts_from_ternary_assoc", bracket=_jordan_table(A.bracket))


def lts_from_jts(J: HomAlgebra, *, checked: bool = True, cfg: Optional[CheckConfig] = None) -> HomAlgebra:
    """Meyberg's construction ``[xyz] = {xyz} - {yxz}``, same twists."""
    J.require_arity(3, "lts_from_jts")
    _require_equal_twists("lts_from_jts", J, checked)
    return J.derive("lts_from_jts", bracket=_meyberg_table(J.bracket))


def lts_from_ternary_assoc(A: HomAlgebra, *, checked: bool = True, cfg: Optional[CheckConfig] = None) -> HomAlgebra:
    """``[xyz] = (xyz) - (yxz) - (zxy) + (zyx)``, same twists."""
    A.require_arity(3, "lts_from_ternary_assoc")
    _require_equal_twists("lts_from_ternary_assoc", A, checked)
    m = A.bracket
    bracket = m - m.permuted((1, 0, 2)) - m.permuted((2, 0, 1)) + m.permuted((2, 1, 0))
    _assert_same_table("lts_from_ternary_assoc", bracket, _meyberg_table(_jordan_table(m)))
    return A.derive("lts_from_ternary_assoc", bracket=bracket)


# ---------------------------------------------------------------------------
# From binary Hom-algebras
# ---------------------------------------------------------------------------


def ternary_assoc_from_hom_assoc(
    A: HomAlgebra, *, checked: bool = True, cfg: Optional[CheckConfig] = None
) -> HomAlgebra:
    """``(xyz) = (xy) alpha(z)`` with both twists ``alpha^2``.

    Multiplicativity is not needed here, only Hom-associativity.
    """
    A.require_arity(2, "ternary_assoc_from_hom_assoc")
    if checked:
        require("ternary_assoc_from_hom_assoc", "A is Hom-associative", lambda: check_hom_associative(A, cfg))
    else:
        warn_unchecked("ternary_assoc_from_hom_assoc")
    square = A.alpha.power(2)
    return A.derive("ternary_assoc_from_hom_assoc", bracket=_product_then_twist(A), twists=[square, square])


def lts_from_hom_lie(L: HomAlgebra, *, checked: bool = True, cfg: Optional[CheckConfig] = None) -> HomAlgebra:
    """``[xyz] = [[x,y], alpha(z)]`` with both twists ``alpha^2``.

    The input must be a multiplicative Hom-Lie algebra; both are checked.
    """
    L.require_arity(2, "lts_from_hom_lie")
    if checked:
        require("lts_from_hom_lie", "L is Hom-Lie", lambda: check_hom_lie(L, cfg))
        require("lts_from_hom_lie", "L is multiplicative", lambda: is_multiplicative(L, cfg))
    else:
        warn_unchecked("lts_from_hom_lie")
    square = L.alpha.power(2)
    return L.derive("lts_from_hom_lie", bracket=_product_then_twist(L), twists=[square, square])


def lts_from_hom_assoc(A: HomAlgebra, *, checked: bool = True, cfg: Optional[CheckConfig] = None) -> HomAlgebra:
    """``[xyz] = (xy)a(z) - (yx)a(z) - (zx)a(y) + (zy)a(x)`` with twists ``alpha^2``."""
    A.require_arity(2, "lts_from_hom_assoc")
    if checked:
        require("lts_from_hom_assoc", "A is Hom-associative", lambda: check_hom_associative(A, cfg))
    else:
        warn_unchecked("lts_from_hom_assoc")
    mu = A.bracket.evaluate
    alpha = A.alpha

    def product(args):
        x, y, z = args
        return (
            mu([mu([x, y]), alpha(z)])
            - mu([mu([y, x]), alpha(z)])
            - mu([mu([z, x]), alpha(y)])
            + mu([mu([z, y]), alpha(x)])
        )

    bracket = MultilinearMap.from_function(A.dim, 3, product)
    t = _product_then_twist(A)
    composed = t - t.permuted((1, 0, 2)) - t.permuted((2, 0, 1)) + t.permuted((2, 1, 0))
    _assert_same_table("lts_from_hom_assoc", bracket, composed)
    square = alpha.power(2)
    return A.derive("lts_from_hom_assoc", bracket=bracket, twists=[square, square])


# ---------------------------------------------------------------------------
# Jordan, Lie and Maltsev helpers
# ---------------------------------------------------------------------------


def plus_algebra(A: HomAlgebra) -> HomAlgebra:
    """``x * y = (xy + yx) / 2``."""
    A.require_arity(2, "plus_algebra")
    m = A.bracket
    return A.derive("plus_algebra", bracket=(m + m.permuted((1, 0))) * Fraction(1, 2))


def minus_algebra(A: HomAlgebra) -> HomAlgebra:
    """The commutator algebra ``[x, y] = xy - yx``."""
    A.require_arity(2, "minus_algebra")
    m = A.bracket
    return A.derive("minus_algebra", bracket=m - m.permuted((1, 0)))


def jts_from_jordan(A: HomAlgebra, *, checked: bool = True, cfg: Optional[CheckConfig] = None) -> HomAlgebra:
    """``{xyz} = x(yz) + (xy)z - y(xz)`` of a Jordan algebra, identity twists."""
    A.require_arity(2, "jts_from_jordan")
    if checked:
        require("jts_from_jordan", "A is a Jordan algebra", lambda: check_jordan(A, cfg))
    else:
        warn_unchecked("jts_from_jordan")
    mu = A.bracket.evaluate

    def product(args):
        x, y, z = args
        return mu([x, mu([y, z])]) + mu([mu([x, y]), z]) - mu([y, mu([x, z])])

    bracket = MultilinearMap.from_function(A.dim, 3, product)
    identity = LinearMap.identity(A.dim)
    return A.derive("jts_from_jordan", bracket=bracket, twists=[identity, identity])


def lts_from_maltsev(A: HomAlgebra, *, checked: bool = True, cfg: Optional[CheckConfig] = None) -> HomAlgebra:
    """``[xyz] = 2(xy)z - (zx)y - (yz)x`` of a Maltsev algebra, identity twists."""
    A.require_arity(2, "lts_from_maltsev")
    if checked:
        require("lts_from_maltsev", "A is a Maltsev algebra", lambda: check_maltsev(A, cfg))
    else:
        warn_unchecked("lts_from_maltsev")
    mu = A.bracket.evaluate

    def product(args):
        x, y, z = args
        return 2 * mu([mu([x, y]), z]) - mu([mu([z, x]), y]) - mu([mu([y, z]), x])

    bracket = MultilinearMap.from_function(A.dim, 3, product)
    identity = LinearMap.identity(A.dim)
    return A.derive("lts_from_maltsev", bracket=bracket, twists=[identity, identity])
