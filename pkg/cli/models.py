"""Pydantic models for algebra documents, pipelines and reports."""

from enum import Enum
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from algebra.core.linalg import to_scalar
from algebra.core.reports import CheckMode

ScalarText = str
MatrixText = List[List[ScalarText]]


def _check_scalar(value: Any) -> str:
    if not isinstance(value, str):
        raise ValueError(f"scalars are written as strings \"p\" or \"p/q\", got {value!r}")
    return str(to_scalar(value))


def _check_matrix(rows: MatrixText) -> MatrixText:
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise ValueError("matrices are written as lists of rows")
    return [[_check_scalar(v) for v in row] for row in rows]


# Algebra documents


class OutputTerm(BaseModel):
    """One nonzero coordinate of a bracket value (1-based index)."""

    model_config = ConfigDict(extra="forbid")

    index: int = Field(..., ge=1, description="1-based basis index")
    coeff: ScalarText = Field(..., description="Exact rational, \"p\" or \"p/q\"")

    @field_validator("coeff", mode="before")
    @classmethod
    def coeff_is_rational(cls, value):
        return _check_scalar(value)


class BracketEntry(BaseModel):
    """Structure constants of one basis tuple."""

    model_config = ConfigDict(extra="forbid")

    args: List[int] = Field(..., description="1-based basis indices, one per slot")
    out: List[OutputTerm] = Field(..., description="Nonzero coordinates of the value")


class AlgebraDocument(BaseModel):
    """An n-ary Hom-algebra in sparse structure constants."""

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "example": {
                "format_version": "1",
                "dim": 2,
                "arity": 2,
                "bracket": [
                    {"args": [1, 2], "out": [{"index": 2, "coeff": "1"}]},
                    {"args": [2, 1], "out": [{"index": 2, "coeff": "-1"}]},
                ],
                "twists": [[["1", "0"], ["0", "1"]]],
                "metadata": {"name": "affine2", "provenance": []},
                "maps": {},
                "functionals": {"trace": ["1", "0"]},
            }
        },
    )

    format_version: Literal["1"] = Field(..., description="Document format version")
    dim: int = Field(..., ge=1, description="Dimension of the carrier")
    arity: int = Field(..., ge=2, description="Arity n of the bracket")
    bracket: List[BracketEntry] = Field(default_factory=list, description="Omitted tuples are zero")
    twists: List[MatrixText] = Field(..., description="n-1 dense matrices, column j is the image of e_j")
    metadata: Dict[str, Any] = Field(default_factory=dict, description="Free-form name and provenance")
    maps: Dict[str, MatrixText] = Field(default_factory=dict, description="Designated linear maps")
    functionals: Dict[str, List[ScalarText]] = Field(default_factory=dict, description="Designated linear forms")

    @field_validator("twists", mode="before")
    @classmethod
    def twists_are_rational(cls, value):
        if not isinstance(value, list):
            return value
        return [_check_matrix(m) for m in value]

    @field_validator("maps", mode="before")
    @classmethod
    def maps_are_rational(cls, value):
        if not isinstance(value, dict):
            return value
        return {name: _check_matrix(m) for name, m in value.items()}

    @field_validator("functionals", mode="before")
    @classmethod
    def functionals_are_rational(cls, value):
        if not isinstance(value, dict):
            return value
        return {name: [_check_scalar(v) for v in row] for name, row in value.items()}

    @model_validator(mode="after")
    def shapes_match(self):
        seen = set()
        for n, entry in enumerate(self.bracket):
            if len(entry.args) != self.arity:
                raise ValueError(f"bracket[{n}].args has {len(entry.args)} indices, expected arity {self.arity}")
            for index in entry.args:
                if not 1 <= index <= self.dim:
                    raise ValueError(f"bracket[{n}].args: index {index} out of range 1..{self.dim}")
            key = tuple(entry.args)
            if key in seen:
                raise ValueError(f"bracket[{n}].args: tuple {list(key)} listed twice")
            seen.add(key)
            for m, term in enumerate(entry.out):
                if term.index > self.dim:
                    raise ValueError(f"bracket[{n}].out[{m}].index {term.index} out of range 1..{self.dim}")
        if len(self.twists) != self.arity - 1:
            raise ValueError(f"twists: expected {self.arity - 1} matrices for arity {self.arity}, got {len(self.twists)}")
        for label, matrix in [(f"twists[{i}]", m) for i, m in enumerate(self.twists)] + [
            (f"maps.{name}", m) for name, m in self.maps.items()
        ]:
            if len(matrix) != self.dim or any(len(row) != self.dim for row in matrix):
                raise ValueError(f"{label}: expected a {self.dim}x{self.dim} matrix")
        for name, row in self.functionals.items():
            if len(row) != self.dim:
                raise ValueError(f"functionals.{name}: expected {self.dim} coefficients, got {len(row)}")
        return self


# Pipelines


class ExampleSpec(BaseModel):
    """A built-in example and its parameters."""

    model_config = ConfigDict(extra="forbid")

    name: str = Field(..., description="Example generator name")
    params: Dict[str, Any] = Field(default_factory=dict, description="Generator parameters")


class RecipeStep(BaseModel):
    """One construction applied to the current algebra."""

    model_config = ConfigDict(extra="forbid")

    recipe: str = Field(..., description="Construction name from the recipe catalog")
    params: Dict[str, Any] = Field(default_factory=dict, description="Recipe parameters; \"@name\" refers to a designated map, functional or vector")
    checked: bool = Field(default=True, description="Verify the construction's hypotheses first")


class CheckSpec(BaseModel):
    """An identity check run on the final algebra."""

    model_config = ConfigDict(extra="forbid")

    identity: str = Field(..., description="Checker name")
    mode: CheckMode = Field(default=CheckMode.AUTO, description="auto, exhaustive or randomized")
    samples: Optional[int] = Field(default=None, ge=1, description="Random samples")
    seed: Optional[int] = Field(default=None, description="Random seed")
    budget: Optional[int] = Field(default=None, ge=1, description="Exhaustive tuple budget")


class PipelineDocument(BaseModel):
    """An input algebra, a list of constructions and the checks to run."""

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "example": {
                "format_version": "1",
                "example": {"name": "fermionic", "params": {"N": 2, "lam": "1", "eta": ["2", "3"]}},
                "steps": [{"recipe": "replace_twists", "params": {"maps": "identity"}}],
                "checks": [{"identity": "hom_nambu"}],
            }
        },
    )

    format_version: Literal["1"] = Field(..., description="Document format version")
    algebra: Optional[AlgebraDocument] = Field(default=None, description="Inline input algebra")
    example: Optional[ExampleSpec] = Field(default=None, description="Built-in input algebra")
    steps: List[RecipeStep] = Field(default_factory=list)
    checks: List[CheckSpec] = Field(default_factory=list)

    @model_validator(mode="after")
    def one_input(self):
        if (self.algebra is None) == (self.example is None):
            raise ValueError("exactly one of 'algebra' and 'example' must be given")
        return self


# Reports


class StepStatus(str, Enum):
    OK = "ok"
    REFUSED = "refused"


class WitnessModel(BaseModel):
    """Counterexample: basis indices (1-based) or dense vectors, and both sides."""

    identity: str
    condition: str
    args: List[Union[int, List[ScalarText]]]
    lhs: List[ScalarText]
    rhs: List[ScalarText]
    text: str


class CheckReportModel(BaseModel):
    identity: str
    mode: CheckMode
    passed: bool
    tuples_checked: int
    samples: Optional[int] = None
    seed: Optional[int] = None
    notes: List[str] = Field(default_factory=list)
    witness: Optional[WitnessModel] = None


class StepRecord(BaseModel):
    recipe: str
    params: Dict[str, Any] = Field(default_factory=dict)
    checked: bool = True
    status: StepStatus
    dim: Optional[int] = None
    arity: Optional[int] = None
    nnz: Optional[int] = None
    error: Optional[str] = None
    hypothesis: Optional[str] = None
    witness: Optional[WitnessModel] = None


class PipelineReport(BaseModel):
    """Machine-readable pipeline outcome; contains no timestamps."""

    format_version: Literal["1"] = "1"
    input: str
    passed: bool
    steps: List[StepRecord] = Field(default_factory=list)
    checks: List[CheckReportModel] = Field(default_factory=list)
    algebra: Optional[AlgebraDocument] = None
