"""
Raising and lowering the arity of Hom-Nambu algebras.

Raising nests the bracket once:

    [x_1, ..., x_{2n-1}]' = [[x_1, ..., x_n], alpha(x_{n+1}), ..., alpha(x_{2n-1})]

with all twists alpha^2; iterating k times gives arity 2^k (n-1) + 1.
Lowering fixes the first argument to an element a with alpha_1(a) = a and
[a, x_2, ..., x_{n-1}, a] = 0. The trace-bracket construction turns a
Hom-Lie algebra with a trace function into an anti-symmetric ternary
Hom-Nambu algebra, and its reduction by a fixed element gives a binary
Hom-Lie algebra again.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from algebra.constructions.preconditions import require, warn_unchecked
from algebra.core.enumeration import Condition, check_conditions
from algebra.core.hom_algebra import HomAlgebra, is_multiplicative
from algebra.core.linalg import LinearMap, MultilinearMap, Vector, to_scalar
from algebra.core.reports import CheckConfig, CheckMode
from algebra.errors import AlgebraError, BudgetExceededError, ShapeError
from algebra.identities.checkers import check_antisymmetry, check_hom_lie, check_hom_nambu

logger = logging.getLogger(__name__)

DEFAULT_TABLE_BUDGET = 10**6


# ---------------------------------------------------------------------------
# Raising
# ---------------------------------------------------------------------------


def _raised_bracket(L: HomAlgebra, table_budget: int) -> MultilinearMap:
    n, d = L.arity, L.dim
    arity = 2 * n - 1
    required = d**arity
    if required > table_budget:
        raise BudgetExceededError(f"raise_arity to arity {arity} on dimension {d}", required, table_budget)
    alpha_images = [L.alpha.image(j) for j in range(d)]
    evaluate = L.bracket.evaluate
    table = {}
    for inner_key, inner in L.bracket.items():
        for rest in itertools.product(range(d), repeat=n - 1):
            value = evaluate([inner] + [alpha_images[j] for j in rest])
            if not value.is_zero():
                table[inner_key + rest] = value
    return MultilinearMap(d, arity, table)


def raise_arity(
    L: HomAlgebra,
    *,
    checked: bool = True,
    cfg: Optional[CheckConfig] = None,
    table_budget: int = DEFAULT_TABLE_BUDGET,
) -> HomAlgebra:
    """The (2n-1)-ary algebra of a multiplicative n-ary Hom-Nambu algebra."""
    if checked:
        require("raise_arity", "L is multiplicative", lambda: is_multiplicative(L, cfg))
        require("raise_arity", "L is Hom-Nambu", lambda: check_hom_nambu(L, cfg))
    else:
        warn_unchecked("raise_arity")
    bracket = _raised_bracket(L, table_budget)
    square = L.alpha.power(2)
    logger.info(f"raise_arity: {L.arity}-ary -> {bracket.arity}-ary, {bracket.nnz} structure constants")
    return L.derive("raise_arity", bracket=bracket, twists=[square] * (bracket.arity - 1))


def iterate_raise(
    L: HomAlgebra,
    k: int,
    *,
    checked: bool = True,
    cfg: Optional[CheckConfig] = None,
    table_budget: int = DEFAULT_TABLE_BUDGET,
) -> HomAlgebra:
    """Apply ``raise_arity`` k times; hypotheses are checked on the input only.

    Each stage is again multiplicative and Hom-Nambu, so later stages run
    unchecked.
    """
    if k < 0:
        raise ShapeError(f"iterate_raise: k must be nonnegative, got {k}")
    if k == 0:
        return L
    result = raise_arity(L, checked=checked, cfg=cfg, table_budget=table_budget)
    for stage in range(2, k + 1):
        logger.debug(f"iterate_raise: stage {stage} of {k}")
        bracket = _raised_bracket(result, table_budget)
        square = result.alpha.power(2)
        result = result.derive("raise_arity", bracket=bracket, twists=[square] * (bracket.arity - 1))
    return result


# ---------------------------------------------------------------------------
# Lowering
# ---------------------------------------------------------------------------


def lower_arity(
    L: HomAlgebra, a: Vector, *, checked: bool = True, cfg: Optional[CheckConfig] = None
) -> HomAlgebra:
    """``[x_1, ..., x_{n-1}]' = [a, x_1, ..., x_{n-1}]`` with twists ``(alpha_2, ..., alpha_{n-1})``.

    Raises:
        HypothesisError: ``alpha_1(a) != a``, or ``[a, x_2, ..., x_{n-1}, a]``
            is nonzero for some basis tuple.
    """
    n = L.arity
    if n < 3:
        raise ShapeError(f"lower_arity needs arity at least 3, got {n}")
    if a.dim != L.dim:
        raise ShapeError(f"lower_arity: fixed element has dimension {a.dim}, algebra has {L.dim}")
    step = f"lower_arity(a={a.render()})"
    if checked:
        alpha1 = L.twists[0]
        fixed = Condition("alpha1_fixes_a", 0, lambda _: (alpha1(a), a))
        require("lower_arity", "alpha_1(a) = a", lambda: check_conditions("fixed_point", L.dim, [fixed]))
        antisymmetry = check_antisymmetry(L, cfg)
        # only an exhaustive pass implies the vanishing condition
        if antisymmetry.passed and antisymmetry.mode == CheckMode.EXHAUSTIVE:
            step += " [a-vanishing implied by anti-symmetry]"
            logger.info("lower_arity: bracket is anti-symmetric on every basis tuple, skipping the vanishing check")
        else:
            require("lower_arity", "[a, x_2, ..., x_{n-1}, a] = 0", lambda: _vanishing_report(L, a))
    else:
        warn_unchecked("lower_arity")
    return L.derive(step, bracket=L.bracket.contract_first(a), twists=L.twists[1:])


def _vanishing_report(L: HomAlgebra, a: Vector):
    evaluate = L.bracket.evaluate

    def sides(args):
        value = evaluate([a] + list(args) + [a])
        return value, Vector.zero(L.dim)

    # always over basis tuples
    cfg = CheckConfig(mode=CheckMode.EXHAUSTIVE, budget=max(L.dim ** (L.arity - 2), 1))
    return check_conditions("a_vanishing", L.dim, [Condition("a_bracket_a_vanishes", L.arity - 2, sides)], cfg)


def lower_arity_k(
    L: HomAlgebra, elements: Sequence[Vector], *, checked: bool = True, cfg: Optional[CheckConfig] = None
) -> HomAlgebra:
    """``[x_{k+1}, ..., x_n]_k = [a_1, ..., a_k, x_{k+1}, ..., x_n]``, checked stage by stage."""
    if len(elements) > L.arity - 2:
        raise ShapeError(f"cannot fix {len(elements)} arguments of a {L.arity}-ary bracket")
    result = L
    for a in elements:
        result = lower_arity(result, a, checked=checked, cfg=cfg)
    return result


# ---------------------------------------------------------------------------
# Trace brackets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TraceFunctional:
    """A linear form ``tau(x) = sum_i coefficients[i] * x_i``."""

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        coefficients = tuple(to_scalar(c) for c in self.coefficients)
        if not coefficients:
            raise ShapeError("a functional needs at least one coefficient")
        object.__setattr__(self, "coefficients", coefficients)

    @property
    def dim(self) -> int:
        return len(self.coefficients)

    def __call__(self, v: Vector) -> Fraction:
        if v.dim != self.dim:
            raise ShapeError(f"functional has dimension {self.dim}, vector has {v.dim}")
        return sum((self.coefficients[i] * c for i, c in v.support), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coefficients)


def _scalar(value: Fraction) -> Vector:
    # scalar conditions are reported as 1-dimensional vectors
    return Vector((value,))


def _trace_hypotheses(L: HomAlgebra, tau: TraceFunctional, beta: LinearMap, checked: bool, cfg, construction: str):
    L.require_arity(2, construction)
    if tau.dim != L.dim or beta.dim != L.dim:
        raise ShapeError(f"{construction}: functional/map dimensions {tau.dim}/{beta.dim} differ from algebra {L.dim}")
    if not checked:
        warn_unchecked(construction)
        return
    mu = L.bracket.evaluate
    alpha = L.alpha
    require(construction, "L is Hom-Lie", lambda: check_hom_lie(L, cfg))
    hypotheses = [
        ("tau is a trace function", Condition("tau_of_bracket_vanishes", 2,
                                              lambda a: (_scalar(tau(mu(list(a)))), _scalar(Fraction(0))))),
        ("tau(alpha x) tau(y) = tau(x) tau(alpha y)", Condition("tau_alpha_compatible", 2,
                                              lambda a: (_scalar(tau(alpha(a[0])) * tau(a[1])),
                                                         _scalar(tau(a[0]) * tau(alpha(a[1])))))),
        ("tau(beta x) tau(y) = tau(x) tau(beta y)", Condition("tau_beta_compatible", 2,
                                              lambda a: (_scalar(tau(beta(a[0])) * tau(a[1])),
                                                         _scalar(tau(a[0]) * tau(beta(a[1])))))),
        ("tau(alpha x) beta(y) = tau(beta x) alpha(y)", Condition("alpha_beta_compatible", 2,
                                              lambda a: (tau(alpha(a[0])) * beta(a[1]),
                                                         tau(beta(a[0])) * alpha(a[1])))),
    ]
    for hypothesis, condition in hypotheses:
        require(construction, hypothesis, lambda c=condition: check_conditions(condition.label, L.dim, [c]))


def ternary_from_trace(
    L: HomAlgebra,
    tau: TraceFunctional,
    beta: LinearMap,
    *,
    checked: bool = True,
    cfg: Optional[CheckConfig] = None,
) -> HomAlgebra:
    """``[xyz]_tau = tau(x)[y,z] + tau(y)[z,x] + tau(z)[x,y]`` with twists ``(alpha, beta)``.

    Each violated hypothesis (Hom-Lie, trace function, the three
    compatibility conditions) is refused separately.
    """
    _trace_hypotheses(L, tau, beta, checked, cfg, "ternary_from_trace")
    return L.derive("ternary_from_trace", bracket=_trace_table(L, tau), twists=[L.alpha, beta])


def _trace_table(L: HomAlgebra, tau: TraceFunctional) -> MultilinearMap:
    mu = L.bracket.evaluate

    def product(args):
        x, y, z = args
        return tau(x) * mu([y, z]) + tau(y) * mu([z, x]) + tau(z) * mu([x, y])

    return MultilinearMap.from_function(L.dim, 3, product)


def reduce_trace_bracket(
    L: HomAlgebra,
    tau: TraceFunctional,
    beta: LinearMap,
    a: Vector,
    *,
    checked: bool = True,
    cfg: Optional[CheckConfig] = None,
) -> HomAlgebra:
    """``[x,y]' = tau(a)[x,y] + [a, tau(y)x - tau(x)y]`` with twist ``beta``.

    Equals ``lower_arity(ternary_from_trace(L, tau, beta), a)``; the two
    tables are compared when the hypotheses were checked.
    """
    _trace_hypotheses(L, tau, beta, checked, cfg, "reduce_trace_bracket")
    if a.dim != L.dim:
        raise ShapeError(f"reduce_trace_bracket: fixed element has dimension {a.dim}, algebra has {L.dim}")
    if checked:
        alpha = L.alpha
        fixed = Condition("alpha_fixes_a", 0, lambda _: (alpha(a), a))
        require("reduce_trace_bracket", "alpha(a) = a", lambda: check_conditions("fixed_point", L.dim, [fixed]))
    mu = L.bracket.evaluate
    tau_a = tau(a)

    def product(args):
        x, y = args
        return tau_a * mu([x, y]) + mu([a, tau(y) * x - tau(x) * y])

    bracket = MultilinearMap.from_function(L.dim, 2, product)
    if checked:
        if _trace_table(L, tau).contract_first(a) != bracket:
            raise AlgebraError("reduce_trace_bracket: closed form disagrees with lowering the trace bracket")
    return L.derive(f"reduce_trace_bracket(a={a.render()})", bracket=bracket, twists=[beta])
