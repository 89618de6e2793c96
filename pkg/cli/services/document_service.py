"""Document service - algebra documents to and from HomAlgebra values."""

import json
import logging
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Tuple, Union

from pydantic import ValidationError

from algebra.constructions.arity import TraceFunctional
from algebra.core.hom_algebra import HomAlgebra
from algebra.core.linalg import LinearMap, MultilinearMap, Vector
from algebra.errors import AlgebraError
from algebra.generators.registry import GeneratedExample
from cli.config import FORMAT_VERSION
from cli.models import AlgebraDocument, BracketEntry, OutputTerm, PipelineDocument

logger = logging.getLogger(__name__)


class DocumentError(AlgebraError):
    """A document failed to parse or validate; ``problems`` lists (location, message) pairs."""

    def __init__(self, source: str, problems: List[Tuple[str, str]]):
        detail = "; ".join(f"{loc}: {msg}" if loc else msg for loc, msg in problems)
        super().__init__(f"{source}: {detail}")
        self.source = source
        self.problems = problems


def _location(loc: Tuple[Union[str, int], ...]) -> str:
    text = ""
    for part in loc:
        if isinstance(part, int):
            text += f"[{part}]"
        else:
            text += f".{part}" if text else part
    return text


def _problems(exc: ValidationError) -> List[Tuple[str, str]]:
    problems = []
    for error in exc.errors():
        message = error["msg"]
        if error["type"] == "json_invalid":
            # pydantic reports the JSON decoder position in ctx
            message = f"malformed JSON: {error.get('ctx', {}).get('error', message)}"
        problems.append((_location(tuple(error["loc"])), message))
    return problems


def _matrix_text(f: LinearMap) -> List[List[str]]:
    return [[str(v) for v in row] for row in f.matrix]


class DocumentService:
    """Parses, validates and canonically serializes algebra and pipeline documents."""

    def parse_algebra(self, text: str, source: str = "<algebra>") -> AlgebraDocument:
        try:
            return AlgebraDocument.model_validate_json(text)
        except ValidationError as exc:
            raise DocumentError(source, _problems(exc)) from exc

    def parse_pipeline(self, text: str, source: str = "<pipeline>") -> PipelineDocument:
        try:
            return PipelineDocument.model_validate_json(text)
        except ValidationError as exc:
            raise DocumentError(source, _problems(exc)) from exc

    def read_algebra(self, path: Path) -> GeneratedExample:
        logger.info(f"Reading algebra document {path}")
        return self.from_document(self.parse_algebra(Path(path).read_text(), source=str(path)))

    def from_document(self, doc: AlgebraDocument) -> GeneratedExample:
        """The algebra with its designated maps and functionals."""
        table = {}
        for entry in doc.bracket:
            terms = {term.index - 1: term.coeff for term in entry.out}
            table[tuple(i - 1 for i in entry.args)] = Vector.from_support(doc.dim, terms)
        bracket = MultilinearMap(doc.dim, doc.arity, table)
        metadata = doc.metadata
        algebra = HomAlgebra(
            bracket,
            tuple(LinearMap(m) for m in doc.twists),
            name=str(metadata.get("name", "")),
            provenance=tuple(str(p) for p in metadata.get("provenance", [])),
        )
        maps = {name: LinearMap(m) for name, m in doc.maps.items()}
        functionals = {name: TraceFunctional(row) for name, row in doc.functionals.items()}
        return GeneratedExample(algebra, maps, functionals)

    def to_document(
        self,
        algebra: HomAlgebra,
        maps: Optional[Mapping[str, LinearMap]] = None,
        functionals: Optional[Mapping[str, TraceFunctional]] = None,
    ) -> AlgebraDocument:
        """Canonical document: lexicographic tuple order, reduced scalars, sorted names."""
        bracket = [
            BracketEntry(
                args=[i + 1 for i in key],
                out=[OutputTerm(index=i + 1, coeff=str(c)) for i, c in value.support],
            )
            for key, value in algebra.bracket.items()
        ]
        maps = maps or {}
        functionals = functionals or {}
        return AlgebraDocument(
            format_version=FORMAT_VERSION,
            dim=algebra.dim,
            arity=algebra.arity,
            bracket=bracket,
            twists=[_matrix_text(t) for t in algebra.twists],
            metadata={"name": algebra.name, "provenance": list(algebra.provenance)},
            maps={name: _matrix_text(maps[name]) for name in sorted(maps)},
            functionals={name: [str(c) for c in functionals[name].coefficients] for name in sorted(functionals)},
        )

    def serialize_algebra(self, doc: AlgebraDocument) -> str:
        return doc.model_dump_json(indent=2) + "\n"

    def dump_example(self, example: GeneratedExample) -> str:
        return self.serialize_algebra(self.to_document(example.algebra, example.maps, example.functionals))

    def canonicalize(self, text: str) -> str:
        """Re-serialize a document in canonical form."""
        return self.dump_example(self.from_document(self.parse_algebra(text)))


def dumps_json(payload: Dict) -> str:
    """Stable JSON text for reports."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


document_service = DocumentService()
