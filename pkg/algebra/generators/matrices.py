"""
Matrix algebras and the triple systems built on them.

A p x q matrix X is stored as the coordinate vector of its entries in
row-major order, so E_ij sits at index i*q + j. Matrix products are done on
numpy object arrays of Fractions.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from algebra.constructions.preconditions import require, warn_unchecked
from algebra.constructions.triple_systems import ternary_assoc_from_hom_assoc
from algebra.core.enumeration import Condition, check_conditions
from algebra.core.hom_algebra import HomAlgebra, is_anti_morphism
from algebra.core.linalg import LinearMap, MultilinearMap, Vector
from algebra.core.reports import CheckConfig
from algebra.errors import ShapeError

logger = logging.getLogger(__name__)


def _as_matrix(v: Vector, rows: int, cols: int) -> np.ndarray:
    return np.array(v.entries, dtype=object).reshape(rows, cols)


def _as_vector(m: np.ndarray) -> Vector:
    return Vector(tuple(m.reshape(-1).tolist()))


def _object_matrix(f: LinearMap) -> np.ndarray:
    return np.array([list(row) for row in f.matrix], dtype=object)


def _check_size(**sizes: int) -> None:
    for name, value in sizes.items():
        if value < 1:
            raise ShapeError(f"{name} must be positive, got {value}")


def matrix_algebra(p: int) -> HomAlgebra:
    """The associative algebra of p x p rational matrices, identity twist."""
    _check_size(p=p)
    dim = p * p
    table = {}
    for i in range(p):
        for j in range(p):
            for l in range(p):
                # E_ij E_jl = E_il
                table[(i * p + j, j * p + l)] = Vector.basis(dim, i * p + l)
    return HomAlgebra.from_table(dim, 2, table, name=f"matrices({p})")


def matrix_ternary_ring(p: int) -> HomAlgebra:
    """The ternary ring ``(xyz) = (xy)z`` of p x p matrices."""
    return ternary_assoc_from_hom_assoc(matrix_algebra(p)).relabeled(f"matrix_ternary_ring({p})")


def transpose_map(p: int) -> LinearMap:
    """``X -> X^T`` on p x p matrices."""
    _check_size(p=p)
    return LinearMap.from_images([Vector.basis(p * p, j * p + i) for i in range(p) for j in range(p)])


def matrix_conjugation(p: int, P: LinearMap) -> LinearMap:
    """The inner automorphism ``X -> P X P^-1`` of p x p matrices."""
    if P.dim != p:
        raise ShapeError(f"conjugating matrix has size {P.dim}, expected {p}")
    left, right = _object_matrix(P), _object_matrix(P.inverse())
    images = []
    for index in range(p * p):
        basis = _as_matrix(Vector.basis(p * p, index), p, p)
        images.append(_as_vector(left @ basis @ right))
    return LinearMap.from_images(images)


def reversal_permutation(p: int) -> LinearMap:
    """The permutation matrix reversing the standard basis of Q^p."""
    _check_size(p=p)
    return LinearMap.from_images([Vector.basis(p, p - 1 - i) for i in range(p)])


def matrix_jts(p: int, q: int) -> HomAlgebra:
    """``{xyz} = x y^T z + z y^T x`` on p x q matrices, identity twists."""
    _check_size(p=p, q=q)

    def product(args):
        x, y, z = (_as_matrix(v, p, q) for v in args)
        return _as_vector(x @ y.T @ z + z @ y.T @ x)

    bracket = MultilinearMap.from_function(p * q, 3, product)
    return HomAlgebra.untwisted(bracket, name=f"matrix_jts({p},{q})")


def involution_jts(
    A: HomAlgebra, theta: LinearMap, *, checked: bool = True, cfg: Optional[CheckConfig] = None
) -> HomAlgebra:
    """``{xyz} = x theta(y) z + z theta(y) x`` for an involutive anti-morphism ``theta``.

    ``A`` is an associative algebra; ``theta^2 = Id`` and
    ``theta(ab) = theta(b) theta(a)`` are checked.
    """
    A.require_arity(2, "involution_jts")
    if theta.dim != A.dim:
        raise ShapeError(f"involution has dimension {theta.dim}, algebra has {A.dim}")
    if checked:
        involutive = Condition("theta_squared_is_identity", 1, lambda a: (theta(theta(a[0])), a[0]))
        require("involution_jts", "theta is involutive",
                lambda: check_conditions("involution", A.dim, [involutive], CheckConfig.exhaustive()))
        require("involution_jts", "theta is an anti-morphism", lambda: is_anti_morphism(theta, A, cfg))
    else:
        warn_unchecked("involution_jts")
    mu = A.bracket.evaluate

    def product(args):
        x, y, z = args
        ty = theta(y)
        return mu([mu([x, ty]), z]) + mu([mu([z, ty]), x])

    bracket = MultilinearMap.from_function(A.dim, 3, product)
    return HomAlgebra.untwisted(bracket, name="involution_jts")


def upper_triangular2() -> HomAlgebra:
    """span(E11, E12) inside 2 x 2 matrices: E11 E11 = E11, E11 E12 = E12."""
    table = {(0, 0): Vector.basis(2, 0), (0, 1): Vector.basis(2, 1)}
    return HomAlgebra.from_table(2, 2, table, name="upper_triangular2")


def upper_triangular2_scaling(c=2) -> LinearMap:
    """The algebra morphism ``E11 -> E11``, ``E12 -> c E12``."""
    return LinearMap.diagonal([1, c])


def hom_pair_ternary_ring(p: int, q: int, beta: LinearMap, gamma: LinearMap) -> Tuple[HomAlgebra, LinearMap]:
    """The ternary ring on Hom(V, W) + Hom(W, V) and its automorphism.

    With dim V = p and dim W = q, an element f + g has f a q x p matrix and g a
    p x q matrix; coordinates are the entries of f then those of g, each
    row-major. The product is

        (f1+g1, f2+g2, f3+g3) = (f3 g2 f1) + (g3 f2 g1)

    and ``alpha(f + g) = gamma^-1 f beta + beta^-1 g gamma`` for invertible
    ``beta`` on V and ``gamma`` on W.

    Raises:
        SingularMatrixError: ``beta`` or ``gamma`` is not invertible.
    """
    _check_size(p=p, q=q)
    if beta.dim != p or gamma.dim != q:
        raise ShapeError(f"expected beta of size {p} and gamma of size {q}, got {beta.dim} and {gamma.dim}")
    size = p * q
    dim = 2 * size
    b, g_ = _object_matrix(beta), _object_matrix(gamma)
    b_inv, g_inv = _object_matrix(beta.inverse()), _object_matrix(gamma.inverse())

    def split(v: Vector):
        return _as_matrix(Vector(v.entries[:size]), q, p), _as_matrix(Vector(v.entries[size:]), p, q)

    def join(f: np.ndarray, g: np.ndarray) -> Vector:
        return Vector(tuple(f.reshape(-1).tolist()) + tuple(g.reshape(-1).tolist()))

    def product(args):
        (f1, g1), (f2, g2), (f3, g3) = (split(v) for v in args)
        return join(f3 @ g2 @ f1, g3 @ f2 @ g1)

    bracket = MultilinearMap.from_function(dim, 3, product)
    images = []
    for index in range(dim):
        f, g = split(Vector.basis(dim, index))
        images.append(join(g_inv @ f @ b, b_inv @ g @ g_))
    algebra = HomAlgebra.untwisted(bracket, name=f"hom_pair({p},{q})")
    logger.debug(f"hom_pair_ternary_ring: {bracket.nnz} structure constants on dimension {dim}")
    return algebra, LinearMap.from_images(images)

