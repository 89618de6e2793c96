"""Shared builders and an independent evaluation path for the tests."""

import itertools
from fractions import Fraction
from typing import Sequence

import numpy as np

from algebra.core.hom_algebra import HomAlgebra
from algebra.core.linalg import LinearMap, MultilinearMap, Vector


def e(dim: int, index: int) -> Vector:
    """1-based basis vector, matching the rendered names."""
    return Vector.basis(dim, index - 1)


def random_bracket(seed: int, dim: int, arity: int, density: float = 0.3) -> MultilinearMap:
    """A sparse bracket with small integer structure constants."""
    rng = np.random.default_rng(seed)
    table = {}
    for key in itertools.product(range(dim), repeat=arity):
        if rng.random() < density:
            coords = rng.integers(-2, 2, size=dim, endpoint=True)
            table[key] = Vector(tuple(int(c) for c in coords))
    return MultilinearMap(dim, arity, table)


def random_algebra(seed: int, dim: int, arity: int, density: float = 0.3) -> HomAlgebra:
    return HomAlgebra.untwisted(random_bracket(seed, dim, arity, density), name=f"random({seed})")


def antisymmetrized(m: MultilinearMap) -> MultilinearMap:
    """Sum over S_n with signs; always anti-symmetric."""
    total = MultilinearMap.zero(m.dim, m.arity)
    for order in itertools.permutations(range(m.arity)):
        inversions = sum(1 for i, j in itertools.combinations(range(m.arity), 2) if order[i] > order[j])
        term = m.permuted(order)
        total = total + term if inversions % 2 == 0 else total - term
    return total


def naive_evaluate(m: MultilinearMap, args: Sequence[Vector]) -> Vector:
    """Dense expansion over every basis tuple, bypassing the prefix tree."""
    acc = [Fraction(0)] * m.dim
    for key in itertools.product(range(m.dim), repeat=m.arity):
        weight = Fraction(1)
        for slot, index in enumerate(key):
            weight *= args[slot][index]
            if not weight:
                break
        if not weight:
            continue
        value = m.table.get(key)
        if value is not None:
            for i, c in enumerate(value):
                acc[i] += weight * c
    return Vector(tuple(acc))


def naive_apply(f: LinearMap, v: Vector) -> Vector:
    return Vector(tuple(sum((row[j] * v[j] for j in range(f.dim)), Fraction(0)) for row in f.matrix))


def naive_hom_jacobian(L: HomAlgebra, xs: Sequence[Vector], ys: Sequence[Vector]) -> Vector:
    n = L.arity
    alpha = L.twists
    br = lambda args: naive_evaluate(L.bracket, args)  # noqa: E731
    result = br([naive_apply(alpha[i], x) for i, x in enumerate(xs)] + [br(list(ys))])
    for i in range(n):
        args = [naive_apply(alpha[j], ys[j]) for j in range(i)]
        args.append(br(list(xs) + [ys[i]]))
        args += [naive_apply(alpha[j - 1], ys[j]) for j in range(i + 1, n)]
        result = result - br(args)
    return result


def dense_vectors(seed: int, dim: int, count: int, coord_range: int = 3):
    rng = np.random.default_rng(seed)
    return [
        Vector(tuple(int(c) for c in row))
        for row in rng.integers(-coord_range, coord_range, size=(count, dim), endpoint=True)
    ]
