"""
Check configuration and results.

Every identity check in the package returns a ``CheckReport``. A failing
report always carries a ``Witness``: the exact inputs together with the two
sides of the violated equation, so the failure can be replayed.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Sequence, Tuple, Union

from algebra.core.linalg import Vector
from algebra.errors import AlgebraError

DEFAULT_SAMPLES = 200
DEFAULT_SEED = 0
DEFAULT_COORD_RANGE = 3
DEFAULT_BUDGET = 10**8

WitnessArg = Union[int, Vector]


class CheckMode(str, Enum):
    """How a checker chooses its inputs."""

    AUTO = "auto"
    EXHAUSTIVE = "exhaustive"
    RANDOMIZED = "randomized"


@dataclass(frozen=True)
class CheckConfig:
    """Enumeration strategy for identity checks.

    Attributes:
        mode: ``auto`` enumerates all basis tuples while that stays within
            ``budget`` and samples otherwise; ``exhaustive`` refuses above the
            budget; ``randomized`` always samples.
        samples: Number of random argument tuples in randomized mode.
        seed: Seed of the numpy generator used for sampling.
        coord_range: Random coordinates are integers in [-coord_range, coord_range].
        budget: Maximum number of basis tuples an exhaustive check may visit.
    """

    mode: CheckMode = CheckMode.AUTO
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    coord_range: int = DEFAULT_COORD_RANGE
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        object.__setattr__(self, "mode", CheckMode(self.mode))
        if self.samples < 1:
            raise AlgebraError(f"sample count must be at least 1, got {self.samples}")
        if self.coord_range < 1:
            raise AlgebraError(f"coordinate range must be at least 1, got {self.coord_range}")
        if self.budget < 1:
            raise AlgebraError(f"budget must be at least 1, got {self.budget}")

    @classmethod
    def exhaustive(cls, budget: int = DEFAULT_BUDGET) -> "CheckConfig":
        return cls(mode=CheckMode.EXHAUSTIVE, budget=budget)

    @classmethod
    def randomized(cls, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> "CheckConfig":
        return cls(mode=CheckMode.RANDOMIZED, samples=samples, seed=seed)

    def with_mode(self, mode: CheckMode) -> "CheckConfig":
        return replace(self, mode=mode)


def _render_arg(arg: WitnessArg) -> str:
    if isinstance(arg, Vector):
        return f"({arg.render()})"
    return f"e{arg + 1}"


@dataclass(frozen=True)
class Witness:
    """A concrete counterexample.

    ``args`` holds 0-based basis indices for exhaustive checks and full
    vectors for randomized ones.
    """

    identity_name: str
    condition: str
    args: Tuple[WitnessArg, ...]
    lhs: Vector
    rhs: Vector

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if self.lhs == self.rhs:
            raise AlgebraError(f"witness for {self.identity_name} has equal sides")

    def vectors(self, dim: int) -> Tuple[Vector, ...]:
        """The witness inputs as vectors of the given dimension."""
        return tuple(a if isinstance(a, Vector) else Vector.basis(dim, a) for a in self.args)

    def describe(self) -> str:
        rendered = ", ".join(_render_arg(a) for a in self.args)
        return (
            f"{self.identity_name} [{self.condition}] at ({rendered}): "
            f"lhs = {self.lhs.render()}, rhs = {self.rhs.render()}"
        )


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check."""

    identity_name: str
    mode: CheckMode
    passed: bool
    tuples_checked: int
    witness: Optional[Witness] = None
    samples: Optional[int] = None
    seed: Optional[int] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "notes", tuple(self.notes))
        if not self.passed and self.witness is None:
            raise AlgebraError(f"failing report for {self.identity_name} needs a witness")
        if self.passed and self.witness is not None:
            raise AlgebraError(f"passing report for {self.identity_name} cannot carry a witness")

    def __bool__(self) -> bool:
        return self.passed

    @property
    def failed_condition(self) -> Optional[str]:
        return self.witness.condition if self.witness else None

    def renamed(self, identity_name: str, extra_notes: Sequence[str] = ()) -> "CheckReport":
        """Same outcome reported under another identity name."""
        witness = self.witness
        if witness is not None:
            witness = replace(witness, identity_name=identity_name)
        return replace(
            self, identity_name=identity_name, witness=witness, notes=self.notes + tuple(extra_notes)
        )

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        if self.mode == CheckMode.RANDOMIZED:
            how = f"randomized, {self.samples} samples, seed {self.seed}"
        else:
            how = "exhaustive"
        line = f"{verdict} {self.identity_name} ({how}, {self.tuples_checked} tuples)"
        if self.witness is not None:
            line += f"\n  witness: {self.witness.describe()}"
        return line
