"""
Decision procedures for the defining identities of Hom-algebras.

Each checker states its identity as one or more multilinear conditions and
hands them to ``check_conditions``, which enumerates basis tuples (a proof,
by multilinearity) or exact random samples (a certificate on failure).
Checkers that need a fixed arity raise ``ArityError`` instead of coercing.

Identities that are not multilinear in their arguments (the Jordan identity
is cubic in x, the Maltsev identity quadratic) are checked through their full
polarization, which vanishes exactly when the original identity does in
characteristic 0.
"""

import itertools
import logging
from typing import Callable, Dict, List, Optional

from algebra.core.enumeration import Condition, check_conditions, combine_reports
from algebra.core.hom_algebra import HomAlgebra, hom_associator, hom_jacobian, is_multiplicative
from algebra.core.linalg import Vector
from algebra.core.reports import CheckConfig, CheckReport

logger = logging.getLogger(__name__)

Checker = Callable[[HomAlgebra, Optional[CheckConfig]], CheckReport]


def _logged(report: CheckReport) -> CheckReport:
    logger.info(report.summary())
    return report


def _zero_like(v: Vector) -> Vector:
    return Vector.zero(v.dim)


def _nambu_condition(L: HomAlgebra) -> Condition:
    n = L.arity

    def sides(args):
        value = hom_jacobian(L, args[: n - 1], args[n - 1 :])
        return value, _zero_like(value)

    return Condition("hom_nambu_identity", 2 * n - 1, sides)


def _identity_twist_condition(A: HomAlgebra) -> Condition:
    alpha = A.alpha
    return Condition("identity_twist", 1, lambda args: (alpha(args[0]), args[0]))


# ---------------------------------------------------------------------------
# n-ary identities
# ---------------------------------------------------------------------------


def check_hom_nambu(L: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """The n-ary Hom-Nambu identity: the Hom-Jacobian vanishes on all 2n-1 tuples."""
    return _logged(check_conditions("hom_nambu", L.dim, [_nambu_condition(L)], cfg))


def check_antisymmetry(L: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """Full anti-symmetry, via the adjacent transpositions that generate S_n."""
    n = L.arity
    bracket = L.bracket.evaluate
    conditions = []
    for i in range(n - 1):

        def sides(args, i=i):
            swapped = list(args)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            return bracket(args), -bracket(swapped)

        conditions.append(Condition(f"swap_slots_{i + 1}_{i + 2}", n, sides))
    return _logged(check_conditions("antisymmetry", L.dim, conditions, cfg))


def check_nambu_lie(L: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """Hom-Nambu-Lie: anti-symmetric bracket satisfying the Hom-Nambu identity."""
    antisymmetry = check_antisymmetry(L, cfg)
    if not antisymmetry.passed:
        return _logged(combine_reports("nambu_lie", [antisymmetry]))
    return _logged(combine_reports("nambu_lie", [antisymmetry, check_hom_nambu(L, cfg)]))


# ---------------------------------------------------------------------------
# Ternary identities
# ---------------------------------------------------------------------------


def check_ternary_total_hom_assoc(A: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """``((uvw) a1(x) a2(y)) = (a1(u) (vwx) a2(y)) = (a1(u) a2(v) (wxy))``."""
    A.require_arity(3, "ternary total Hom-associativity")
    t = A.bracket.evaluate
    a1, a2 = A.twists

    def left(args):
        u, v, w, x, y = args
        return t([t([u, v, w]), a1(x), a2(y)])

    def middle(args):
        u, v, w, x, y = args
        return t([a1(u), t([v, w, x]), a2(y)])

    def right(args):
        u, v, w, x, y = args
        return t([a1(u), a2(v), t([w, x, y])])

    conditions = [
        Condition("outer_left_equals_middle", 5, lambda args: (left(args), middle(args))),
        Condition("middle_equals_outer_right", 5, lambda args: (middle(args), right(args))),
    ]
    return _logged(check_conditions("ternary_total_hom_assoc", A.dim, conditions, cfg))


def check_hom_jordan_ts(J: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """Outer symmetry ``{xyz} = {zyx}`` and the Hom-Jordan triple identity."""
    J.require_arity(3, "the Hom-Jordan triple system check")
    t = J.bracket.evaluate
    a1, a2 = J.twists

    def outer_symmetry(args):
        x, y, z = args
        return t([x, y, z]), t([z, y, x])

    def jordan_triple(args):
        x, y, u, v, w = args
        lhs = t([a1(x), a2(y), t([u, v, w])]) - t([a1(u), a2(v), t([x, y, w])])
        rhs = t([t([x, y, u]), a1(v), a2(w)]) - t([a1(u), t([y, x, v]), a2(w)])
        return lhs, rhs

    conditions = [
        Condition("outer_symmetry", 3, outer_symmetry),
        Condition("hom_jordan_triple_identity", 5, jordan_triple),
    ]
    return _logged(check_conditions("hom_jordan_ts", J.dim, conditions, cfg))


def check_hom_lie_ts(T: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """Left anti-symmetry, the ternary Jacobi identity and the ternary Hom-Nambu identity."""
    T.require_arity(3, "the Hom-Lie triple system check")
    t = T.bracket.evaluate

    def left_antisymmetry(args):
        u, v, w = args
        return t([u, v, w]), -t([v, u, w])

    def ternary_jacobi(args):
        u, v, w = args
        total = t([u, v, w]) + t([w, u, v]) + t([v, w, u])
        return total, _zero_like(total)

    conditions = [
        Condition("left_antisymmetry", 3, left_antisymmetry),
        Condition("ternary_jacobi", 3, ternary_jacobi),
        _nambu_condition(T),
    ]
    return _logged(check_conditions("hom_lie_ts", T.dim, conditions, cfg))


# ---------------------------------------------------------------------------
# Binary identities
# ---------------------------------------------------------------------------


def _antisymmetry_condition(A: HomAlgebra) -> Condition:
    mu = A.bracket.evaluate
    return Condition("antisymmetry", 2, lambda args: (mu([args[0], args[1]]), -mu([args[1], args[0]])))


def check_hom_associative(A: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """The Hom-associator ``(xy)alpha(z) - alpha(x)(yz)`` vanishes."""
    A.require_arity(2, "the Hom-associativity check")

    def sides(args):
        value = hom_associator(A, *args)
        return value, _zero_like(value)

    return _logged(check_conditions("hom_associative", A.dim, [Condition("hom_associator", 3, sides)], cfg))


def check_hom_lie(L: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """Anti-symmetry plus ``[[x,y],a(z)] + [[z,x],a(y)] + [[y,z],a(x)] = 0``."""
    L.require_arity(2, "the Hom-Lie check")
    mu = L.bracket.evaluate
    alpha = L.alpha

    def hom_jacobi(args):
        x, y, z = args
        total = mu([mu([x, y]), alpha(z)]) + mu([mu([z, x]), alpha(y)]) + mu([mu([y, z]), alpha(x)])
        return total, _zero_like(total)

    conditions = [_antisymmetry_condition(L), Condition("hom_jacobi", 3, hom_jacobi)]
    return _logged(check_conditions("hom_lie", L.dim, conditions, cfg))


def _associator(mu, x: Vector, y: Vector, z: Vector) -> Vector:
    return mu([mu([x, y]), z]) - mu([x, mu([y, z])])


def check_alternative(A: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """The associator ``(xy)z - x(yz)`` is anti-symmetric (untwisted algebras only)."""
    A.require_arity(2, "the alternative-algebra check")
    mu = A.bracket.evaluate
    conditions = [
        _identity_twist_condition(A),
        Condition("associator_swap_12", 3, lambda a: (_associator(mu, *a), -_associator(mu, a[1], a[0], a[2]))),
        Condition("associator_swap_23", 3, lambda a: (_associator(mu, *a), -_associator(mu, a[0], a[2], a[1]))),
    ]
    return _logged(check_conditions("alternative", A.dim, conditions, cfg))


def _maltsev_jacobian(mu, x: Vector, y: Vector, z: Vector) -> Vector:
    return mu([mu([x, y]), z]) + mu([mu([z, x]), y]) + mu([mu([y, z]), x])


def check_maltsev(A: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """Anti-symmetry plus ``J(x,y,xz) = J(x,y,z)x`` (untwisted algebras only).

    The identity is quadratic in x and is checked in polarized form
    ``J(x1,y,x2 z) + J(x2,y,x1 z) = J(x1,y,z)x2 + J(x2,y,z)x1``.
    """
    A.require_arity(2, "the Maltsev check")
    mu = A.bracket.evaluate

    def polarized(args):
        x1, x2, y, z = args
        lhs = _maltsev_jacobian(mu, x1, y, mu([x2, z])) + _maltsev_jacobian(mu, x2, y, mu([x1, z]))
        rhs = mu([_maltsev_jacobian(mu, x1, y, z), x2]) + mu([_maltsev_jacobian(mu, x2, y, z), x1])
        return lhs, rhs

    conditions = [
        _identity_twist_condition(A),
        _antisymmetry_condition(A),
        Condition("maltsev_identity", 4, polarized),
    ]
    return _logged(check_conditions("maltsev", A.dim, conditions, cfg))


def check_jordan(A: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """Commutativity plus ``(x^2 y) x = x^2 (y x)`` (untwisted algebras only).

    The identity is cubic in x and is checked in fully polarized form: the
    sum over the six orderings of (x1, x2, x3).
    """
    A.require_arity(2, "the Jordan check")
    mu = A.bracket.evaluate

    def commutativity(args):
        x, y = args
        return mu([x, y]), mu([y, x])

    def polarized(args):
        xs, y = args[:3], args[3]
        lhs: List[Vector] = []
        rhs: List[Vector] = []
        for a, b, c in itertools.permutations(xs):
            square = mu([a, b])
            lhs.append(mu([mu([square, y]), c]))
            rhs.append(mu([square, mu([y, c])]))
        return sum(lhs[1:], lhs[0]), sum(rhs[1:], rhs[0])

    conditions = [
        _identity_twist_condition(A),
        Condition("commutativity", 2, commutativity),
        Condition("jordan_identity", 4, polarized),
    ]
    return _logged(check_conditions("jordan", A.dim, conditions, cfg))


def check_multiplicative(L: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    return _logged(is_multiplicative(L, cfg))


CHECKERS: Dict[str, Checker] = {
    "hom_nambu": check_hom_nambu,
    "nambu_lie": check_nambu_lie,
    "antisymmetry": check_antisymmetry,
    "ternary_total_hom_assoc": check_ternary_total_hom_assoc,
    "hom_jordan_ts": check_hom_jordan_ts,
    "hom_lie_ts": check_hom_lie_ts,
    "hom_associative": check_hom_associative,
    "hom_lie": check_hom_lie,
    "maltsev": check_maltsev,
    "alternative": check_alternative,
    "jordan": check_jordan,
    "multiplicative": check_multiplicative,
}
