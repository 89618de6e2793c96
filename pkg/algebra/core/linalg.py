"""
Exact linear algebra over the rationals.

Vectors, linear maps and sparse multilinear maps (structure constants) on
k^d with k = Q. Every value is immutable after construction and every scalar
is a canonical ``fractions.Fraction``; there is no floating-point path.

Basis indices are 0-based in this module. Documents and reports print them
1-based (e1, e2, ...).

Usage:
    mu = MultilinearMap(dim=2, arity=2, table={(0, 1): Vector.basis(2, 1)})
    mu.evaluate([Vector.basis(2, 0), Vector.basis(2, 1)])   # e2
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from algebra.errors import BudgetExceededError, ScalarError, ShapeError, SingularMatrixError

ScalarLike = Union[int, Fraction, str]
Key = Tuple[int, ...]

ZERO = Fraction(0)
ONE = Fraction(1)

_SCALAR_PATTERN = re.compile(r"[+-]?\d+(/\d+)?")


def to_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` literal to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ScalarError(f"booleans are not scalars: {value!r}")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        text = value.strip()
        if not _SCALAR_PATTERN.fullmatch(text):
            raise ScalarError(f"malformed rational literal {value!r}")
        numerator, _, denominator = text.partition("/")
        if denominator and int(denominator) == 0:
            raise ScalarError(f"zero denominator in {value!r}")
        return Fraction(int(numerator), int(denominator) if denominator else 1)
    raise ScalarError(f"cannot interpret {value!r} as an exact rational")


def format_scalar(value: Fraction) -> str:
    """Canonical text form: ``"p"`` or ``"p/q"``."""
    return str(value)


# ---------------------------------------------------------------------------
# Vectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Vector:
    """A dense coordinate vector in Q^dim."""

    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(to_scalar(e) for e in self.entries)
        if not entries:
            raise ShapeError("a vector needs at least one coordinate")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def _trusted(cls, entries: Tuple[Fraction, ...]) -> "Vector":
        # entries already canonical Fractions (internal arithmetic results)
        vector = object.__new__(cls)
        object.__setattr__(vector, "entries", entries)
        return vector

    @classmethod
    def zero(cls, dim: int) -> "Vector":
        if dim < 1:
            raise ShapeError(f"dimension must be positive, got {dim}")
        return cls._trusted((ZERO,) * dim)

    @classmethod
    def basis(cls, dim: int, index: int) -> "Vector":
        if not 0 <= index < dim:
            raise ShapeError(f"basis index {index} out of range for dimension {dim}")
        entries = [ZERO] * dim
        entries[index] = ONE
        return cls._trusted(tuple(entries))

    @classmethod
    def from_support(cls, dim: int, terms: Mapping[int, ScalarLike]) -> "Vector":
        entries = [ZERO] * dim
        for index, coeff in terms.items():
            if not 0 <= index < dim:
                raise ShapeError(f"basis index {index} out of range for dimension {dim}")
            entries[index] += to_scalar(coeff)
        return cls._trusted(tuple(entries))

    @property
    def dim(self) -> int:
        return len(self.entries)

    @cached_property
    def support(self) -> Tuple[Tuple[int, Fraction], ...]:
        """Nonzero coordinates as ``(index, coefficient)`` pairs."""
        return tuple((i, c) for i, c in enumerate(self.entries) if c)

    @cached_property
    def integer_form(self) -> Tuple[Dict[int, int], int]:
        """Support scaled to integers: ``({index: numerator}, common denominator)``."""
        denominator = math.lcm(*(c.denominator for _, c in self.support)) if self.support else 1
        numerators = {i: c.numerator * (denominator // c.denominator) for i, c in self.support}
        return numerators, denominator

    def is_zero(self) -> bool:
        return not self.support

    def _check_same_dim(self, other: "Vector") -> None:
        if other.dim != self.dim:
            raise ShapeError(f"vector dimensions differ: {self.dim} vs {other.dim}")

    def __add__(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            return NotImplemented
        self._check_same_dim(other)
        return Vector._trusted(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            return NotImplemented
        self._check_same_dim(other)
        return Vector._trusted(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Vector":
        return Vector._trusted(tuple(-a for a in self.entries))

    def __mul__(self, scalar: ScalarLike) -> "Vector":
        if isinstance(scalar, Vector):
            return NotImplemented
        s = to_scalar(scalar)
        return Vector._trusted(tuple(s * a for a in self.entries))

    __rmul__ = __mul__

    def __getitem__(self, index: int) -> Fraction:
        return self.entries[index]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def render(self) -> str:
        """Human-readable form with 1-based basis names, e.g. ``2*e1 - 1/3*e4``."""
        if not self.support:
            return "0"
        parts: List[str] = []
        for index, coeff in self.support:
            magnitude = abs(coeff)
            term = f"e{index + 1}" if magnitude == 1 else f"{magnitude}*e{index + 1}"
            if not parts:
                parts.append(term if coeff > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if coeff > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Vector({self.render()})"


# ---------------------------------------------------------------------------
# Linear maps
# ---------------------------------------------------------------------------


def _object_array(rows: Sequence[Sequence[Fraction]]) -> np.ndarray:
    array = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            array[i, j] = value
    return array


@dataclass(frozen=True, eq=False)
class LinearMap:
    """A d x d matrix; column j is the image of basis vector e_j."""

    matrix: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(to_scalar(e) for e in row) for row in self.matrix)
        if not rows:
            raise ShapeError("a linear map needs a positive dimension")
        for i, row in enumerate(rows):
            if len(row) != len(rows):
                raise ShapeError(f"matrix row {i + 1} has {len(row)} entries, expected {len(rows)}")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def identity(cls, dim: int) -> "LinearMap":
        return cls.diagonal([ONE] * dim)

    @classmethod
    def diagonal(cls, values: Sequence[ScalarLike]) -> "LinearMap":
        values = [to_scalar(v) for v in values]
        n = len(values)
        return cls(tuple(tuple(values[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def scalar(cls, dim: int, value: ScalarLike) -> "LinearMap":
        return cls.diagonal([value] * dim)

    @classmethod
    def from_images(cls, images: Sequence[Vector]) -> "LinearMap":
        """Build the map sending e_j to ``images[j]``."""
        n = len(images)
        for j, image in enumerate(images):
            if image.dim != n:
                raise ShapeError(f"image of e{j + 1} has dimension {image.dim}, expected {n}")
        return cls(tuple(tuple(images[j][i] for j in range(n)) for i in range(n)))

    @classmethod
    def _from_array(cls, array: np.ndarray) -> "LinearMap":
        return cls(tuple(tuple(row) for row in array.tolist()))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @cached_property
    def columns(self) -> Tuple[Tuple[Tuple[int, Fraction], ...], ...]:
        """Sparse columns: for each j, the nonzero ``(i, entry)`` of the image of e_j."""
        n = self.dim
        return tuple(
            tuple((i, self.matrix[i][j]) for i in range(n) if self.matrix[i][j]) for j in range(n)
        )

    def image(self, index: int) -> Vector:
        return Vector._trusted(tuple(row[index] for row in self.matrix))

    def apply(self, v: Vector) -> Vector:
        if v.dim != self.dim:
            raise ShapeError(f"cannot apply a {self.dim}-dimensional map to a {v.dim}-dimensional vector")
        acc = [ZERO] * self.dim
        for j, c in v.support:
            for i, m in self.columns[j]:
                acc[i] += c * m
        return Vector._trusted(tuple(acc))

    __call__ = apply

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self ∘ other``."""
        if other.dim != self.dim:
            raise ShapeError(f"cannot compose maps of dimensions {self.dim} and {other.dim}")
        return LinearMap._from_array(_object_array(self.matrix) @ _object_array(other.matrix))

    __matmul__ = compose

    def power(self, k: int) -> "LinearMap":
        if k < 0:
            raise ShapeError(f"power exponent must be nonnegative, got {k}")
        result = LinearMap.identity(self.dim)
        base = self
        while k:
            if k & 1:
                result = result.compose(base)
            base = base.compose(base)
            k >>= 1
        return result

    def transpose(self) -> "LinearMap":
        return LinearMap(tuple(zip(*self.matrix)))

    def inverse(self) -> "LinearMap":
        """Exact inverse by Gauss-Jordan elimination."""
        n = self.dim
        work = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(self.matrix)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col]), None)
            if pivot is None:
                raise SingularMatrixError(f"matrix is singular (no pivot in column {col + 1})")
            work[col], work[pivot] = work[pivot], work[col]
            factor = work[col][col]
            work[col] = [x / factor for x in work[col]]
            for r in range(n):
                if r != col and work[r][col]:
                    shift = work[r][col]
                    work[r] = [a - shift * b for a, b in zip(work[r], work[col])]
        return LinearMap(tuple(tuple(row[n:]) for row in work))

    def is_identity(self) -> bool:
        return self == LinearMap.identity(self.dim)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(str(e) for e in row) for row in self.matrix)
        return f"LinearMap([{rows}])"


# ---------------------------------------------------------------------------
# Multilinear maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MultilinearMap:
    """An n-linear map on Q^dim stored as sparse structure constants.

    ``table[(i1, ..., in)]`` is the value on the basis tuple; absent keys are
    zero. Zero values are dropped on construction.
    """

    dim: int
    arity: int
    table: Mapping[Key, Vector]

    def __post_init__(self):
        if self.dim < 1:
            raise ShapeError(f"dimension must be positive, got {self.dim}")
        if self.arity < 2:
            raise ShapeError(f"arity must be at least 2, got {self.arity}")
        cleaned: Dict[Key, Vector] = {}
        for key, value in self.table.items():
            key = tuple(key)
            if len(key) != self.arity:
                raise ShapeError(f"key {key} has length {len(key)}, expected arity {self.arity}")
            for index in key:
                if not 0 <= index < self.dim:
                    raise ShapeError(f"key {key} has index {index} outside [0, {self.dim})")
            if value.dim != self.dim:
                raise ShapeError(f"value at {key} has dimension {value.dim}, expected {self.dim}")
            if not value.is_zero():
                cleaned[key] = value
        object.__setattr__(self, "table", cleaned)

    @classmethod
    def zero(cls, dim: int, arity: int) -> "MultilinearMap":
        return cls(dim, arity, {})

    @classmethod
    def from_function(
        cls,
        dim: int,
        arity: int,
        fn: Callable[[Sequence[Vector]], Vector],
        budget: Optional[int] = None,
    ) -> "MultilinearMap":
        """Materialize structure constants by evaluating ``fn`` on every basis tuple."""
        required = dim**arity
        if budget is not None and required > budget:
            raise BudgetExceededError(f"materializing a {arity}-ary table on dimension {dim}", required, budget)
        basis = [Vector.basis(dim, i) for i in range(dim)]
        table = {}
        for key in itertools.product(range(dim), repeat=arity):
            value = fn([basis[i] for i in key])
            if not value.is_zero():
                table[key] = value
        return cls(dim, arity, table)

    @property
    def nnz(self) -> int:
        return len(self.table)

    def is_zero(self) -> bool:
        return not self.table

    def items(self) -> List[Tuple[Key, Vector]]:
        """Table entries in lexicographic key order."""
        return sorted(self.table.items())

    @cached_property
    def _prefix_tree(self) -> Tuple[dict, int]:
        denominator = 1
        for value in self.table.values():
            denominator = math.lcm(denominator, value.integer_form[1])
        root: dict = {}
        for key, value in self.table.items():
            node = root
            for index in key[:-1]:
                node = node.setdefault(index, {})
            numerators, den = value.integer_form
            scale = denominator // den
            node[key[-1]] = tuple((i, n * scale) for i, n in numerators.items())
        return root, denominator

    def evaluate(self, args: Sequence[Vector]) -> Vector:
        """Expand ``[args]`` by multilinearity over the structure constants."""
        if len(args) != self.arity:
            raise ShapeError(f"expected {self.arity} arguments, got {len(args)}")
        supports = []
        denominator = 1
        for slot, arg in enumerate(args):
            if arg.dim != self.dim:
                raise ShapeError(f"argument {slot + 1} has dimension {arg.dim}, expected {self.dim}")
            numerators, den = arg.integer_form
            if not numerators:
                return Vector.zero(self.dim)
            supports.append(numerators)
            denominator *= den
        tree, table_den = self._prefix_tree
        acc = [0] * self.dim
        _contract(tree, supports, 0, 1, acc)
        total = denominator * table_den
        return Vector._trusted(tuple(Fraction(a, total) for a in acc))

    __call__ = evaluate

    def twist_product(self, beta: LinearMap) -> "MultilinearMap":
        """Structure constants of ``beta ∘ self``."""
        if beta.dim != self.dim:
            raise ShapeError(f"cannot twist a {self.dim}-dimensional product by a {beta.dim}-dimensional map")
        return MultilinearMap(self.dim, self.arity, {k: beta.apply(v) for k, v in self.table.items()})

    def permuted(self, order: Sequence[int]) -> "MultilinearMap":
        """The map ``(x_1..x_n) -> self(x_{order[0]}, ..., x_{order[n-1]})``."""
        if sorted(order) != list(range(self.arity)):
            raise ShapeError(f"{tuple(order)} is not a permutation of {self.arity} slots")
        table = {}
        for key, value in self.table.items():
            new_key = [0] * self.arity
            for slot, index in enumerate(key):
                new_key[order[slot]] = index
            table[tuple(new_key)] = value
        return MultilinearMap(self.dim, self.arity, table)

    def contract_first(self, a: Vector) -> "MultilinearMap":
        """Fix the first argument: ``(x_2..x_n) -> self(a, x_2, ..., x_n)``."""
        if self.arity < 3:
            raise ShapeError("fixing an argument needs arity at least 3")
        if a.dim != self.dim:
            raise ShapeError(f"fixed element has dimension {a.dim}, expected {self.dim}")
        weights = dict(a.support)
        table: Dict[Key, Vector] = {}
        for key, value in self.table.items():
            weight = weights.get(key[0])
            if weight is None:
                continue
            rest = key[1:]
            scaled = weight * value
            table[rest] = table[rest] + scaled if rest in table else scaled
        return MultilinearMap(self.dim, self.arity - 1, table)

    def _check_compatible(self, other: "MultilinearMap") -> None:
        if (self.dim, self.arity) != (other.dim, other.arity):
            raise ShapeError(
                f"products differ in shape: dim {self.dim}/arity {self.arity} vs dim {other.dim}/arity {other.arity}"
            )

    def __add__(self, other: "MultilinearMap") -> "MultilinearMap":
        if not isinstance(other, MultilinearMap):
            return NotImplemented
        self._check_compatible(other)
        table = dict(self.table)
        for key, value in other.table.items():
            table[key] = table[key] + value if key in table else value
        return MultilinearMap(self.dim, self.arity, table)

    def __neg__(self) -> "MultilinearMap":
        return MultilinearMap(self.dim, self.arity, {k: -v for k, v in self.table.items()})

    def __sub__(self, other: "MultilinearMap") -> "MultilinearMap":
        if not isinstance(other, MultilinearMap):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: ScalarLike) -> "MultilinearMap":
        if isinstance(scalar, (Vector, MultilinearMap, LinearMap)):
            return NotImplemented
        s = to_scalar(scalar)
        return MultilinearMap(self.dim, self.arity, {k: s * v for k, v in self.table.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultilinearMap):
            return NotImplemented
        return (self.dim, self.arity) == (other.dim, other.arity) and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.dim, self.arity, tuple(self.items())))

    def __repr__(self) -> str:
        return f"MultilinearMap(dim={self.dim}, arity={self.arity}, nnz={self.nnz})"


def _contract(node: dict, supports: List[Dict[int, int]], slot: int, coeff: int, acc: List[int]) -> None:
    """Sum ``coeff * prod(arg coords) * table`` over the branches reachable from ``node``."""
    support = supports[slot]
    last = slot == len(supports) - 1
    if len(node) < len(support):
        pairs = ((index, child, support.get(index)) for index, child in node.items())
    else:
        pairs = ((index, node.get(index), c) for index, c in support.items())
    for _, child, c in pairs:
        if child is None or not c:
            continue
        if last:
            weight = coeff * c
            for out, numerator in child:
                acc[out] += weight * numerator
        else:
            _contract(child, supports, slot + 1, coeff * c, acc)


# ---------------------------------------------------------------------------
# Function forms
# ---------------------------------------------------------------------------


def evaluate(m: MultilinearMap, args: Sequence[Vector]) -> Vector:
    return m.evaluate(args)


def apply(f: LinearMap, v: Vector) -> Vector:
    return f.apply(v)


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    return f.compose(g)


def power(f: LinearMap, k: int) -> LinearMap:
    return f.power(k)


def twist_product(m: MultilinearMap, beta: LinearMap) -> MultilinearMap:
    return m.twist_product(beta)
