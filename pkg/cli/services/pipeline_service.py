"""Pipeline service - runs construction pipelines and identity checks."""

import json
import logging
import re
from dataclasses import replace
from typing import Any, Dict, List, Optional

from algebra.constructions.arity import TraceFunctional
from algebra.constructions.catalog import RECIPES, ConstructionRecipe, ParamKind
from algebra.core.linalg import LinearMap, Vector, to_scalar
from algebra.core.reports import CheckConfig, CheckReport, Witness
from algebra.errors import AlgebraError, HypothesisError
from algebra.generators.registry import GeneratedExample, generate
from algebra.identities.checkers import CHECKERS
from cli.config import TABLE_BUDGET
from cli.models import (
    CheckReportModel,
    CheckSpec,
    PipelineDocument,
    PipelineReport,
    StepRecord,
    StepStatus,
    WitnessModel,
)
from cli.services.document_service import DocumentError, document_service

logger = logging.getLogger(__name__)

_BASIS_NAME = re.compile(r"e(\d+)")


def witness_model(witness: Witness) -> WitnessModel:
    args = [[str(c) for c in a] if isinstance(a, Vector) else a + 1 for a in witness.args]
    return WitnessModel(
        identity=witness.identity_name,
        condition=witness.condition,
        args=args,
        lhs=[str(c) for c in witness.lhs],
        rhs=[str(c) for c in witness.rhs],
        text=witness.describe(),
    )


def report_model(report: CheckReport) -> CheckReportModel:
    return CheckReportModel(
        identity=report.identity_name,
        mode=report.mode,
        passed=report.passed,
        tuples_checked=report.tuples_checked,
        samples=report.samples,
        seed=report.seed,
        notes=list(report.notes),
        witness=witness_model(report.witness) if report.witness else None,
    )


class ParameterResolver:
    """Turns JSON recipe parameters into typed values for one algebra bundle.

    ``"@name"`` refers to a designated map or functional; ``"identity"`` is
    the identity map; ``"e3"`` is a basis vector (1-based); vectors and
    functionals are otherwise lists of scalars, maps lists of rows.
    """

    def __init__(self, bundle: GeneratedExample):
        self.bundle = bundle
        self.dim = bundle.algebra.dim

    def resolve(self, recipe: str, params: Dict[str, Any]) -> Dict[str, Any]:
        spec = RECIPES.get(recipe)
        if spec is None:
            raise DocumentError(recipe, [("recipe", f"unknown recipe; known: {', '.join(sorted(RECIPES))}")])
        resolved = {}
        for key, value in params.items():
            kind = spec.params.get(key)
            if kind is None:
                raise DocumentError(recipe, [(f"params.{key}", f"not a parameter of {recipe}")])
            try:
                resolved[key] = self._convert(kind, value)
            except (AlgebraError, TypeError, KeyError) as exc:
                raise DocumentError(recipe, [(f"params.{key}", str(exc))]) from exc
        return resolved

    def _convert(self, kind: ParamKind, value: Any) -> Any:
        if kind == ParamKind.INT:
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"expected an integer, got {value!r}")
            return value
        if kind == ParamKind.LINEAR_MAP:
            return self._linear_map(value)
        if kind == ParamKind.FUNCTIONAL:
            return self._functional(value)
        if kind == ParamKind.VECTOR:
            return self._vector(value)
        if not isinstance(value, list):
            raise TypeError(f"expected a list of vectors, got {value!r}")
        return [self._vector(v) for v in value]

    def _reference(self, value: str, table: Dict[str, Any], what: str):
        name = value[1:]
        if name not in table:
            raise KeyError(f"no designated {what} named {name!r}; available: {sorted(table) or 'none'}")
        return table[name]

    def _linear_map(self, value: Any) -> LinearMap:
        if value == "identity":
            return LinearMap.identity(self.dim)
        if isinstance(value, str) and value.startswith("@"):
            return self._reference(value, dict(self.bundle.maps), "map")
        if not isinstance(value, list):
            raise TypeError(f"expected a matrix, '@name' or 'identity', got {value!r}")
        return LinearMap(value)

    def _functional(self, value: Any) -> TraceFunctional:
        if isinstance(value, str) and value.startswith("@"):
            return self._reference(value, dict(self.bundle.functionals), "functional")
        if not isinstance(value, list):
            raise TypeError(f"expected a coefficient list or '@name', got {value!r}")
        return TraceFunctional(tuple(value))

    def _vector(self, value: Any) -> Vector:
        if isinstance(value, str):
            match = _BASIS_NAME.fullmatch(value)
            if not match:
                raise TypeError(f"expected a coordinate list or a basis name like 'e1', got {value!r}")
            return Vector.basis(self.dim, int(match.group(1)) - 1)
        if not isinstance(value, list):
            raise TypeError(f"expected a coordinate list, got {value!r}")
        vector = Vector(tuple(to_scalar(v) for v in value))
        if vector.dim != self.dim:
            raise TypeError(f"vector has {vector.dim} coordinates, algebra has dimension {self.dim}")
        return vector


class PipelineService:
    """Service layer for construction pipelines."""

    def __init__(self, defaults: Optional[CheckConfig] = None, table_budget: int = TABLE_BUDGET):
        self.defaults = defaults or CheckConfig()
        self.table_budget = table_budget

    def load_input(self, doc: PipelineDocument) -> GeneratedExample:
        if doc.example is not None:
            return generate(doc.example.name, **doc.example.params)
        return document_service.from_document(doc.algebra)

    def describe_input(self, doc: PipelineDocument) -> str:
        if doc.example is not None:
            return f"example {doc.example.name} {json.dumps(doc.example.params, sort_keys=True)}"
        name = doc.algebra.metadata.get("name") or "unnamed"
        return f"algebra document {name}"

    def check_config(self, spec: CheckSpec) -> CheckConfig:
        cfg = replace(self.defaults, mode=spec.mode)
        if spec.samples is not None:
            cfg = replace(cfg, samples=spec.samples)
        if spec.seed is not None:
            cfg = replace(cfg, seed=spec.seed)
        if spec.budget is not None:
            cfg = replace(cfg, budget=spec.budget)
        return cfg

    def apply_step(self, bundle: GeneratedExample, recipe: str, params: Dict[str, Any], checked: bool) -> GeneratedExample:
        """Apply one recipe; the designated maps and functionals carry over."""
        resolved = ParameterResolver(bundle).resolve(recipe, params)
        try:
            construction = ConstructionRecipe(recipe, resolved)
        except AlgebraError as exc:
            raise DocumentError(recipe, [("params", str(exc))]) from exc
        algebra = construction.apply(bundle.algebra, checked=checked, cfg=self.defaults, table_budget=self.table_budget)
        return GeneratedExample(algebra, bundle.maps, bundle.functionals)

    def run_check(self, bundle: GeneratedExample, spec: CheckSpec) -> CheckReport:
        checker = CHECKERS.get(spec.identity)
        if checker is None:
            raise DocumentError(spec.identity, [("identity", f"unknown checker; known: {', '.join(sorted(CHECKERS))}")])
        return checker(bundle.algebra, self.check_config(spec))

    def run_pipeline(self, doc: PipelineDocument) -> PipelineReport:
        """Run every step, then every check; stop at the first refused construction."""
        description = self.describe_input(doc)
        logger.info(f"Running pipeline on {description}: {len(doc.steps)} steps, {len(doc.checks)} checks")
        bundle = self.load_input(doc)
        steps: List[StepRecord] = []
        refused = False

        for step in doc.steps:
            try:
                bundle = self.apply_step(bundle, step.recipe, step.params, step.checked)
            except HypothesisError as exc:
                logger.error(f"Step {step.recipe} refused: {exc}")
                report = exc.report if isinstance(exc.report, CheckReport) else None
                steps.append(
                    StepRecord(
                        recipe=step.recipe,
                        params=step.params,
                        checked=step.checked,
                        status=StepStatus.REFUSED,
                        error=str(exc),
                        hypothesis=exc.hypothesis,
                        witness=witness_model(report.witness) if report and report.witness else None,
                    )
                )
                refused = True
                break
            algebra = bundle.algebra
            steps.append(
                StepRecord(
                    recipe=step.recipe,
                    params=step.params,
                    checked=step.checked,
                    status=StepStatus.OK,
                    dim=algebra.dim,
                    arity=algebra.arity,
                    nnz=algebra.bracket.nnz,
                )
            )

        checks = [] if refused else [report_model(self.run_check(bundle, spec)) for spec in doc.checks]
        passed = not refused and all(c.passed for c in checks)
        logger.info(f"Pipeline {'passed' if passed else 'failed'}")
        return PipelineReport(
            input=description,
            passed=passed,
            steps=steps,
            checks=checks,
            algebra=document_service.to_document(bundle.algebra, bundle.maps, bundle.functionals),
        )


def format_pipeline_report(report: PipelineReport) -> str:
    """Human-readable pipeline summary."""
    lines = ["=" * 60, f"Pipeline on {report.input}", "=" * 60]
    for n, step in enumerate(report.steps, start=1):
        if step.status == StepStatus.OK:
            lines.append(f"✓ step {n}: {step.recipe} -> dim {step.dim}, arity {step.arity}, {step.nnz} constants")
        else:
            lines.append(f"✗ step {n}: {step.recipe} refused: {step.hypothesis}")
            if step.witness is not None:
                lines.append(f"    witness: {step.witness.text}")
    for check in report.checks:
        mark = "✓" if check.passed else "✗"
        how = "exhaustive" if check.samples is None else f"randomized, {check.samples} samples, seed {check.seed}"
        lines.append(f"{mark} {check.identity} ({how}, {check.tuples_checked} tuples)")
        for note in check.notes:
            lines.append(f"    note: {note}")
        if check.witness is not None:
            lines.append(f"    witness: {check.witness.text}")
    if report.algebra is not None and not report.steps and not report.checks:
        lines.append(f"algebra: dim {report.algebra.dim}, arity {report.algebra.arity}, "
                     f"{len(report.algebra.bracket)} constants")
    lines.append("-" * 60)
    lines.append("PASSED" if report.passed else "FAILED")
    return "\n".join(lines) + "\n"
