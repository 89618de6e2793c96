"""
The fixed catalog of construction recipes.

A ``ConstructionRecipe`` names a construction and carries its typed
parameters; pipelines are ordered lists of recipes applied to an algebra.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Mapping, Optional

from algebra.constructions import arity, triple_systems, twisting
from algebra.core.hom_algebra import HomAlgebra
from algebra.core.reports import CheckConfig
from algebra.errors import AlgebraError


class ParamKind(str, Enum):
    LINEAR_MAP = "linear_map"
    VECTOR = "vector"
    VECTOR_LIST = "vector_list"
    FUNCTIONAL = "functional"
    INT = "int"


@dataclass(frozen=True)
class RecipeSpec:
    """How to call one construction: its function, parameter kinds and whether it gates hypotheses."""

    function: Callable[..., HomAlgebra]
    params: Mapping[str, ParamKind] = field(default_factory=dict)
    checkable: bool = True
    table_budgeted: bool = False
    description: str = ""


RECIPES: Dict[str, RecipeSpec] = {
    "twist": RecipeSpec(twisting.twist, {"beta": ParamKind.LINEAR_MAP},
                        description="bracket beta o [.], twists beta alpha_i"),
    "ternary_twist": RecipeSpec(twisting.ternary_twist, {"beta": ParamKind.LINEAR_MAP},
                                description="twist of a ternary algebra"),
    "derived": RecipeSpec(twisting.derived, {"k": ParamKind.INT},
                          description="k-th derived algebra of a multiplicative algebra"),
    "replace_twists": RecipeSpec(twisting.replace_twists, {"maps": ParamKind.LINEAR_MAP}, checkable=False,
                                 description="same bracket, every twist replaced by one map"),
    "jts_from_ternary_assoc": RecipeSpec(triple_systems.jts_from_ternary_assoc,
                                         description="{xyz} = (xyz) + (zyx)"),
    "lts_from_jts": RecipeSpec(triple_systems.lts_from_jts, description="[xyz] = {xyz} - {yxz}"),
    "lts_from_ternary_assoc": RecipeSpec(triple_systems.lts_from_ternary_assoc,
                                         description="[xyz] = (xyz) - (yxz) - (zxy) + (zyx)"),
    "ternary_assoc_from_hom_assoc": RecipeSpec(triple_systems.ternary_assoc_from_hom_assoc,
                                               description="(xyz) = (xy) alpha(z)"),
    "lts_from_hom_lie": RecipeSpec(triple_systems.lts_from_hom_lie, description="[xyz] = [[x,y], alpha(z)]"),
    "lts_from_hom_assoc": RecipeSpec(triple_systems.lts_from_hom_assoc,
                                     description="four-term Hom-Lie triple product of a Hom-associative algebra"),
    "plus_algebra": RecipeSpec(triple_systems.plus_algebra, checkable=False, description="x * y = (xy + yx)/2"),
    "minus_algebra": RecipeSpec(triple_systems.minus_algebra, checkable=False, description="[x, y] = xy - yx"),
    "jts_from_jordan": RecipeSpec(triple_systems.jts_from_jordan, description="{xyz} = x(yz) + (xy)z - y(xz)"),
    "lts_from_maltsev": RecipeSpec(triple_systems.lts_from_maltsev,
                                   description="[xyz] = 2(xy)z - (zx)y - (yz)x"),
    "raise_arity": RecipeSpec(arity.raise_arity, table_budgeted=True, description="arity n -> 2n - 1"),
    "iterate_raise": RecipeSpec(arity.iterate_raise, {"k": ParamKind.INT}, table_budgeted=True,
                                description="raise_arity applied k times"),
    "lower_arity": RecipeSpec(arity.lower_arity, {"a": ParamKind.VECTOR},
                              description="fix the first argument to a"),
    "lower_arity_k": RecipeSpec(arity.lower_arity_k, {"elements": ParamKind.VECTOR_LIST},
                                description="fix the first k arguments"),
    "ternary_from_trace": RecipeSpec(arity.ternary_from_trace,
                                     {"tau": ParamKind.FUNCTIONAL, "beta": ParamKind.LINEAR_MAP},
                                     description="tau(x)[y,z] + tau(y)[z,x] + tau(z)[x,y]"),
    "reduce_trace_bracket": RecipeSpec(arity.reduce_trace_bracket,
                                       {"tau": ParamKind.FUNCTIONAL, "beta": ParamKind.LINEAR_MAP,
                                        "a": ParamKind.VECTOR},
                                       description="tau(a)[x,y] + [a, tau(y)x - tau(x)y]"),
}


@dataclass(frozen=True)
class ConstructionRecipe:
    """A catalog name with a complete set of typed parameters."""

    name: str
    parameters: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        spec = RECIPES.get(self.name)
        if spec is None:
            raise AlgebraError(f"unknown recipe {self.name!r}; known: {', '.join(sorted(RECIPES))}")
        missing = set(spec.params) - set(self.parameters)
        unknown = set(self.parameters) - set(spec.params)
        if missing or unknown:
            raise AlgebraError(
                f"recipe {self.name!r} takes parameters {sorted(spec.params)}; "
                f"missing {sorted(missing)}, unexpected {sorted(unknown)}"
            )

    @property
    def spec(self) -> RecipeSpec:
        return RECIPES[self.name]

    def apply(
        self,
        algebra: HomAlgebra,
        *,
        checked: bool = True,
        cfg: Optional[CheckConfig] = None,
        table_budget: Optional[int] = None,
    ) -> HomAlgebra:
        spec = self.spec
        if not spec.checkable:
            return spec.function(algebra, **self.parameters)
        options = {"checked": checked, "cfg": cfg}
        if spec.table_budgeted and table_budget is not None:
            options["table_budget"] = table_budget
        return spec.function(algebra, **self.parameters, **options)
