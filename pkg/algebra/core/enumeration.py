"""
Input enumeration for multilinear identity checks.

A check is a list of ``Condition``s, each an equation ``lhs(args) = rhs(args)``
that is multilinear in its ``slots`` arguments. Exhaustive mode walks every
basis tuple in lexicographic order, which proves the equation for all inputs;
randomized mode evaluates exact random integer vectors drawn from a seeded
numpy generator. Both stop at the first counterexample.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from algebra.core.linalg import Vector
from algebra.core.reports import CheckConfig, CheckMode, CheckReport, Witness
from algebra.errors import BudgetExceededError

logger = logging.getLogger(__name__)

Sides = Callable[[Sequence[Vector]], Tuple[Vector, Vector]]


@dataclass(frozen=True)
class Condition:
    """One equation of an identity, multilinear in ``slots`` arguments."""

    label: str
    slots: int
    sides: Sides


def basis_tuples(dim: int, slots: int) -> Iterator[Tuple[int, ...]]:
    """All index tuples of length ``slots`` in lexicographic order."""
    return itertools.product(range(dim), repeat=slots)


def random_vectors(rng: np.random.Generator, dim: int, count: int, coord_range: int) -> List[Vector]:
    """``count`` vectors with integer coordinates in [-coord_range, coord_range]."""
    draws = rng.integers(-coord_range, coord_range, size=(count, dim), endpoint=True)
    return [Vector(tuple(int(c) for c in row)) for row in draws]


def resolve_mode(cfg: CheckConfig, dim: int, slots: int, what: str) -> CheckMode:
    """Pick exhaustive or randomized enumeration for ``dim ** slots`` basis tuples."""
    required = dim**slots
    if cfg.mode == CheckMode.RANDOMIZED:
        return CheckMode.RANDOMIZED
    if required <= cfg.budget:
        return CheckMode.EXHAUSTIVE
    if cfg.mode == CheckMode.EXHAUSTIVE:
        raise BudgetExceededError(f"exhaustive {what}", required, cfg.budget)
    logger.info(f"{what}: {required} basis tuples exceed budget {cfg.budget}, sampling {cfg.samples} instead")
    return CheckMode.RANDOMIZED


def check_conditions(
    identity_name: str,
    dim: int,
    conditions: Sequence[Condition],
    cfg: Optional[CheckConfig] = None,
    notes: Sequence[str] = (),
) -> CheckReport:
    """Run ``conditions`` in order and report the first counterexample.

    Args:
        identity_name: Label recorded in the report and its witness.
        dim: Dimension of the carrier.
        conditions: Equations to verify, checked in sequence.
        cfg: Enumeration settings; defaults to ``CheckConfig()``.
        notes: Free-form remarks copied into the report.

    Returns:
        CheckReport: passed, or failed with the lexicographically least
        failing basis tuple (exhaustive) or the first failing sample.
    """
    cfg = cfg or CheckConfig()
    widest = max((c.slots for c in conditions), default=0)
    mode = resolve_mode(cfg, dim, widest, identity_name)
    basis = [Vector.basis(dim, i) for i in range(dim)]
    rng = np.random.default_rng(cfg.seed) if mode == CheckMode.RANDOMIZED else None
    checked = 0

    for condition in conditions:
        if mode == CheckMode.EXHAUSTIVE:
            inputs = ((key, [basis[i] for i in key]) for key in basis_tuples(dim, condition.slots))
        else:
            inputs = _sampled_inputs(rng, dim, condition.slots, cfg)
        for key, args in inputs:
            checked += 1
            lhs, rhs = condition.sides(args)
            if lhs != rhs:
                witness = Witness(identity_name, condition.label, key, lhs, rhs)
                logger.debug(f"{identity_name} failed after {checked} tuples: {witness.describe()}")
                return _report(identity_name, mode, cfg, False, checked, witness, notes)

    return _report(identity_name, mode, cfg, True, checked, None, notes)


def _sampled_inputs(rng: np.random.Generator, dim: int, slots: int, cfg: CheckConfig):
    for _ in range(cfg.samples):
        args = random_vectors(rng, dim, slots, cfg.coord_range)
        yield tuple(args), args


def _report(identity_name, mode, cfg, passed, checked, witness, notes) -> CheckReport:
    randomized = mode == CheckMode.RANDOMIZED
    return CheckReport(
        identity_name=identity_name,
        mode=mode,
        passed=passed,
        tuples_checked=checked,
        witness=witness,
        samples=cfg.samples if randomized else None,
        seed=cfg.seed if randomized else None,
        notes=tuple(notes),
    )


def combine_reports(identity_name: str, reports: Sequence[CheckReport], notes: Sequence[str] = ()) -> CheckReport:
    """Fold sub-reports run in sequence; the first failure wins."""
    total = 0
    mode = CheckMode.EXHAUSTIVE
    samples = seed = None
    all_notes = list(notes)
    for report in reports:
        total += report.tuples_checked
        all_notes.extend(report.notes)
        if report.mode == CheckMode.RANDOMIZED:
            mode, samples, seed = CheckMode.RANDOMIZED, report.samples, report.seed
        if not report.passed:
            return CheckReport(identity_name, report.mode, False, total, report.witness,
                               report.samples, report.seed, tuple(all_notes))
    return CheckReport(identity_name, mode, True, total, None, samples, seed, tuple(all_notes))
