"""
The octonions and the 27-dimensional exceptional Jordan algebra.

The octonion basis is e0 (the unit), e1, ..., e7 at indices 0..7. The
exceptional Jordan algebra consists of 3 x 3 Hermitian octonionic matrices

    X = [[a1, x, y], [conj(x), a2, z], [conj(y), conj(z), a3]]

with a1, a2, a3 rational. Basis ordering: a1, a2, a3 (indices 0-2), then the
eight coordinates of x (3-10), y (11-18) and z (19-26). The product is
X * Y = (XY + YX) / 2.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from algebra.constructions.preconditions import require
from algebra.core.enumeration import Condition, check_conditions
from algebra.core.hom_algebra import HomAlgebra
from algebra.core.linalg import LinearMap, MultilinearMap, Vector
from algebra.core.reports import CheckConfig
from algebra.errors import AlgebraError

logger = logging.getLogger(__name__)

# row x column, e.g. row e1, column e2 is e4
_TABLE_ROWS = (
    "e0 e1 e2 e3 e4 e5 e6 e7",
    "e1 -e0 e4 e7 -e2 e6 -e5 -e3",
    "e2 -e4 -e0 e5 e1 -e3 e7 -e6",
    "e3 -e7 -e5 -e0 e6 e2 -e4 e1",
    "e4 e2 -e1 -e6 -e0 e7 e3 -e5",
    "e5 -e6 e3 -e2 -e7 -e0 e1 e4",
    "e6 e5 -e7 e4 -e3 -e1 -e0 e2",
    "e7 e3 e6 -e1 e5 -e4 -e2 -e0",
)

BASIC_TRIPLE_IMAGES = (0, 5, 6, 7, 1, 2, 3, 4)

JORDAN_DIM = 27
_BLOCK_OFFSETS = {(0, 1): 3, (0, 2): 11, (1, 2): 19}


@dataclass(frozen=True)
class OctonionTable:
    """Signed basis products: ``e_i e_j = sign * e_index``."""

    entries: Tuple[Tuple[Tuple[int, int], ...], ...]

    @classmethod
    def parse(cls, rows: Sequence[str]) -> "OctonionTable":
        parsed = []
        for row in rows:
            cells = []
            for token in row.split():
                sign = -1 if token.startswith("-") else 1
                cells.append((sign, int(token.lstrip("-")[1:])))
            parsed.append(tuple(cells))
        return cls(tuple(parsed))

    def product(self, i: int, j: int) -> Tuple[int, int]:
        return self.entries[i][j]


OCTONION_TABLE = OctonionTable.parse(_TABLE_ROWS)


def octonions() -> HomAlgebra:
    """The eight-dimensional alternative algebra, identity twist."""
    table = {}
    for i in range(8):
        for j in range(8):
            sign, k = OCTONION_TABLE.product(i, j)
            table[(i, j)] = Vector.from_support(8, {k: sign})
    return HomAlgebra.from_table(8, 2, table, name="octonions")


def octonion_basic_triple_automorphism() -> LinearMap:
    """The automorphism sending the basic triple (e1, e2, e3) to (e5, e6, e7)."""
    return LinearMap.from_images([Vector.basis(8, k) for k in BASIC_TRIPLE_IMAGES])


def octonion_conjugate() -> LinearMap:
    return LinearMap.diagonal([1] + [-1] * 7)


# ---------------------------------------------------------------------------
# Exceptional Jordan algebra
# ---------------------------------------------------------------------------

Octonion = List[Fraction]


def _oct_mul(p: Octonion, q: Octonion) -> Octonion:
    out = [Fraction(0)] * 8
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                sign, k = OCTONION_TABLE.product(i, j)
                out[k] += sign * a * b
    return out


def _oct_conj(p: Octonion) -> Octonion:
    return [p[0]] + [-c for c in p[1:]]


def _hermitian(v: Vector) -> List[List[Octonion]]:
    """3 x 3 matrix of octonions for a 27-dimensional coordinate vector."""
    zero = [Fraction(0)] * 8
    m = [[list(zero) for _ in range(3)] for _ in range(3)]
    for i in range(3):
        m[i][i][0] = v[i]
    for (i, j), offset in _BLOCK_OFFSETS.items():
        entry = list(v.entries[offset:offset + 8])
        m[i][j] = entry
        m[j][i] = _oct_conj(entry)
    return m


def _coordinates(m: List[List[Octonion]]) -> Vector:
    coords = [Fraction(0)] * JORDAN_DIM
    for i in range(3):
        diagonal = m[i][i]
        if any(diagonal[1:]):
            raise AlgebraError("Jordan product left a non-real diagonal entry")
        coords[i] = diagonal[0]
    for (i, j), offset in _BLOCK_OFFSETS.items():
        coords[offset:offset + 8] = m[i][j]
    return Vector(tuple(coords))


def _matmul(x: List[List[Octonion]], y: List[List[Octonion]]) -> List[List[Octonion]]:
    out = []
    for i in range(3):
        row = []
        for k in range(3):
            acc = [Fraction(0)] * 8
            for j in range(3):
                acc = [a + b for a, b in zip(acc, _oct_mul(x[i][j], y[j][k]))]
            row.append(acc)
        out.append(row)
    return out


def _jordan_product(args: Sequence[Vector]) -> Vector:
    x, y = (_hermitian(v) for v in args)
    xy, yx = _matmul(x, y), _matmul(y, x)
    half = Fraction(1, 2)
    return _coordinates([[[half * (a + b) for a, b in zip(p, q)] for p, q in zip(r, s)] for r, s in zip(xy, yx)])


@lru_cache(maxsize=1)
def _exceptional_bracket() -> MultilinearMap:
    logger.info("building the 27-dimensional exceptional Jordan product")
    return MultilinearMap.from_function(JORDAN_DIM, 2, _jordan_product)


def exceptional_jordan() -> HomAlgebra:
    """3 x 3 Hermitian octonionic matrices with ``X * Y = (XY + YX) / 2``."""
    return HomAlgebra.untwisted(_exceptional_bracket(), name="exceptional_jordan")


def lift(alpha: LinearMap) -> LinearMap:
    """Extend an octonion map entry-wise to the exceptional Jordan algebra.

    Raises:
        HypothesisError: ``alpha`` moves the unit or does not commute with
            conjugation.
    """
    conj = octonion_conjugate()
    unit = Vector.basis(8, 0)
    conditions = [
        Condition("fixes_unit", 0, lambda _: (alpha(unit), unit)),
        Condition("commutes_with_conjugation", 1, lambda a: (alpha(conj(a[0])), conj(alpha(a[0])))),
    ]
    require("lift", "alpha preserves the unit and conjugation",
            lambda: check_conditions("octonion_lift", 8, conditions, CheckConfig.exhaustive()))
    rows = [[Fraction(0)] * JORDAN_DIM for _ in range(JORDAN_DIM)]
    for i in range(3):
        rows[i][i] = Fraction(1)
    for offset in _BLOCK_OFFSETS.values():
        for i in range(8):
            for j in range(8):
                rows[offset + i][offset + j] = alpha.matrix[i][j]
    return LinearMap(tuple(tuple(r) for r in rows))
