"""
n-ary Hom-algebras and their derived quantities.

A ``HomAlgebra`` is a carrier Q^dim with an n-linear bracket and an ordered
list of n-1 twisting maps. This module evaluates the n-ary Hom-Jacobian and
the Hom-associator, and checks multiplicativity and (weak) morphisms.

Usage:
    L = HomAlgebra(bracket, twists)
    hom_jacobian(L, xs, ys)       # n-1 xs, n ys
    is_multiplicative(L).passed
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Mapping, Optional, Sequence, Tuple

from algebra.core.enumeration import Condition, check_conditions, combine_reports
from algebra.core.linalg import Key, LinearMap, MultilinearMap, Vector
from algebra.core.reports import CheckConfig, CheckReport
from algebra.errors import ArityError, ShapeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HomAlgebra:
    """``(V, [.], (alpha_1, ..., alpha_{n-1}))`` in structure constants.

    ``name`` and ``provenance`` are presentation metadata and take no part in
    equality.
    """

    bracket: MultilinearMap
    twists: Tuple[LinearMap, ...]
    name: str = ""
    provenance: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        twists = tuple(self.twists)
        object.__setattr__(self, "twists", twists)
        object.__setattr__(self, "provenance", tuple(self.provenance))
        if len(twists) != self.bracket.arity - 1:
            raise ShapeError(
                f"a {self.bracket.arity}-ary algebra needs {self.bracket.arity - 1} twists, got {len(twists)}"
            )
        for i, twist in enumerate(twists):
            if twist.dim != self.bracket.dim:
                raise ShapeError(f"twist {i + 1} has dimension {twist.dim}, expected {self.bracket.dim}")

    @classmethod
    def untwisted(cls, bracket: MultilinearMap, name: str = "") -> "HomAlgebra":
        """The algebra with every twist equal to the identity."""
        identity = LinearMap.identity(bracket.dim)
        return cls(bracket, (identity,) * (bracket.arity - 1), name=name)

    @classmethod
    def from_table(
        cls,
        dim: int,
        arity: int,
        table: Mapping[Key, Vector],
        twists: Optional[Sequence[LinearMap]] = None,
        name: str = "",
    ) -> "HomAlgebra":
        bracket = MultilinearMap(dim, arity, table)
        if twists is None:
            return cls.untwisted(bracket, name=name)
        return cls(bracket, tuple(twists), name=name)

    @property
    def dim(self) -> int:
        return self.bracket.dim

    @property
    def arity(self) -> int:
        return self.bracket.arity

    @property
    def alpha(self) -> LinearMap:
        """The first twisting map (the twist, for multiplicative algebras)."""
        return self.twists[0]

    def evaluate(self, *args: Vector) -> Vector:
        return self.bracket.evaluate(args)

    def derive(
        self,
        step: str,
        bracket: Optional[MultilinearMap] = None,
        twists: Optional[Sequence[LinearMap]] = None,
        name: Optional[str] = None,
    ) -> "HomAlgebra":
        """A new algebra recording ``step`` in its provenance."""
        return HomAlgebra(
            bracket if bracket is not None else self.bracket,
            tuple(twists) if twists is not None else self.twists,
            name=name if name is not None else self.name,
            provenance=self.provenance + (step,),
        )

    def relabeled(self, name: str) -> "HomAlgebra":
        return replace(self, name=name)

    def require_arity(self, arity: int, what: str) -> None:
        if self.arity != arity:
            raise ArityError(f"{what} needs arity {arity}, got a {self.arity}-ary algebra")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomAlgebra):
            return NotImplemented
        return self.bracket == other.bracket and self.twists == other.twists

    def __hash__(self) -> int:
        return hash((self.bracket, self.twists))

    def __repr__(self) -> str:
        label = self.name or "HomAlgebra"
        return f"{label}(dim={self.dim}, arity={self.arity}, nnz={self.bracket.nnz})"


def hom_jacobian(L: HomAlgebra, xs: Sequence[Vector], ys: Sequence[Vector]) -> Vector:
    """The n-ary Hom-Jacobian ``J(x_1..x_{n-1}; y_1..y_n)``.

    The outer term is ``[alpha_1 x_1, ..., alpha_{n-1} x_{n-1}, [y_1..y_n]]``;
    term i inserts ``[x_1..x_{n-1}, y_i]`` at slot i, with ``y_j`` twisted by
    ``alpha_j`` before the slot and by ``alpha_{j-1}`` after it.
    """
    n = L.arity
    if len(xs) != n - 1 or len(ys) != n:
        raise ShapeError(f"Hom-Jacobian of a {n}-ary algebra takes {n - 1} + {n} arguments, got {len(xs)} + {len(ys)}")
    alpha = L.twists
    bracket = L.bracket.evaluate
    result = bracket([alpha[i](x) for i, x in enumerate(xs)] + [bracket(list(ys))])
    for i in range(n):
        inner = bracket(list(xs) + [ys[i]])
        args = [alpha[j](ys[j]) for j in range(i)] + [inner] + [alpha[j - 1](ys[j]) for j in range(i + 1, n)]
        result = result - bracket(args)
    return result


def hom_associator(A: HomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """``(xy) alpha(z) - alpha(x) (yz)``."""
    A.require_arity(2, "the Hom-associator")
    mu = A.bracket.evaluate
    alpha = A.alpha
    return mu([mu([x, y]), alpha(z)]) - mu([alpha(x), mu([y, z])])


def compare_twists(L: HomAlgebra) -> CheckReport:
    """Pass iff all twisting maps are equal; the witness names the first unequal pair."""
    reference = L.twists[0]
    conditions = [
        Condition(f"alpha1 = alpha{j + 1}", 1, lambda args, t=twist: (reference(args[0]), t(args[0])))
        for j, twist in enumerate(L.twists[1:], start=1)
    ]
    return check_conditions("twists_equal", L.dim, conditions, CheckConfig.exhaustive())


def is_multiplicative(L: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """Equal twists, and ``alpha`` commutes with the bracket on every basis tuple.

    The witness condition is ``alpha1 = alphaJ`` when the twists differ and
    ``bracket_compatible`` when they agree but do not respect the bracket.
    """
    twists = compare_twists(L)
    if not twists.passed:
        return combine_reports("multiplicative", [twists])
    alpha = L.alpha
    bracket = L.bracket.evaluate

    def sides(args):
        return alpha(bracket(args)), bracket([alpha(a) for a in args])

    compatible = check_conditions("multiplicative", L.dim, [Condition("bracket_compatible", L.arity, sides)], cfg)
    return combine_reports("multiplicative", [twists, compatible])


def _require_same_shape(f: LinearMap, src: HomAlgebra, dst: HomAlgebra) -> None:
    if not (f.dim == src.dim == dst.dim):
        raise ShapeError(f"morphism dimensions differ: map {f.dim}, source {src.dim}, target {dst.dim}")
    if src.arity != dst.arity:
        raise ShapeError(f"morphism between arities {src.arity} and {dst.arity}")


def _bracket_condition(f: LinearMap, src: HomAlgebra, dst: HomAlgebra) -> Condition:
    def sides(args):
        return f(src.bracket.evaluate(args)), dst.bracket.evaluate([f(a) for a in args])

    return Condition("bracket_compatible", src.arity, sides)


def is_weak_morphism(
    f: LinearMap, src: HomAlgebra, dst: HomAlgebra, cfg: Optional[CheckConfig] = None
) -> CheckReport:
    """``f o [.]_src = [.]_dst o f^{(x)n}``."""
    _require_same_shape(f, src, dst)
    return check_conditions("weak_morphism", src.dim, [_bracket_condition(f, src, dst)], cfg)


def is_morphism(f: LinearMap, src: HomAlgebra, dst: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """A weak morphism that also intertwines every twist: ``f o alpha_i = alpha_i' o f``."""
    _require_same_shape(f, src, dst)
    conditions = [
        Condition(f"twist{i + 1}_intertwined", 1, lambda args, a=a, b=b: (f(a(args[0])), b(f(args[0]))))
        for i, (a, b) in enumerate(zip(src.twists, dst.twists))
    ]
    intertwined = check_conditions("morphism", src.dim, conditions, CheckConfig.exhaustive())
    if not intertwined.passed:
        return intertwined
    compatible = check_conditions("morphism", src.dim, [_bracket_condition(f, src, dst)], cfg)
    return combine_reports("morphism", [intertwined, compatible])


def is_anti_morphism(theta: LinearMap, A: HomAlgebra, cfg: Optional[CheckConfig] = None) -> CheckReport:
    """``theta(ab) = theta(b) theta(a)`` for a binary algebra."""
    A.require_arity(2, "an anti-morphism check")
    if theta.dim != A.dim:
        raise ShapeError(f"map has dimension {theta.dim}, algebra has {A.dim}")
    mu = A.bracket.evaluate

    def sides(args):
        a, b = args
        return theta(mu([a, b])), mu([theta(b), theta(a)])

    return check_conditions("anti_morphism", A.dim, [Condition("reverses_product", 2, sides)], cfg)
