"""
Triple systems of a symmetric bilinear form, and the fermionic example.

For a symmetric form <,> and a scalar lam:

    [xyz] = lam (<y,z> x - <z,x> y)                  (ternary Nambu, Lie triple system)
    {xyz} = lam (<x,y> z + <y,z> x - <z,x> y)        (Jordan triple system)

The fermionic carrier has basis a_{-1}, ..., a_{-N}, a_{+1}, ..., a_{+N}
(indices 0..N-1 then N..2N-1) with <a_{-j}, a_{+k}> = delta_jk and all other
pairings zero. The diagonal map alpha(a_{+j}) = eta_j a_{+j},
alpha(a_{-j}) = eta_j^{-1} a_{-j} preserves the form, so twisting by it
gives a multiplicative ternary Hom-Nambu algebra.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from algebra.constructions.twisting import twist
from algebra.core.hom_algebra import HomAlgebra
from algebra.core.linalg import LinearMap, MultilinearMap, ScalarLike, Vector, to_scalar
from algebra.errors import AlgebraError, ScalarError, ShapeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BilinearForm:
    """``<x, y> = x^T M y`` with a symmetric matrix M."""

    matrix: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = LinearMap(self.matrix).matrix
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                if value != rows[j][i]:
                    raise ShapeError(f"bilinear form is not symmetric at ({i + 1}, {j + 1})")
        object.__setattr__(self, "matrix", rows)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __call__(self, x: Vector, y: Vector) -> Fraction:
        total = Fraction(0)
        for i, xi in x.support:
            row = self.matrix[i]
            for j, yj in y.support:
                total += xi * row[j] * yj
        return total

    def is_invariant(self, alpha: LinearMap) -> bool:
        """``<alpha x, alpha y> = <x, y>`` on all basis pairs."""
        images = [alpha.image(i) for i in range(self.dim)]
        return all(
            self(images[i], images[j]) == self.matrix[i][j] for i in range(self.dim) for j in range(self.dim)
        )


def bilinear_lts(form: BilinearForm, lam: ScalarLike = 1) -> HomAlgebra:
    """``[xyz] = lam (<y,z> x - <z,x> y)`` with identity twists."""
    lam = to_scalar(lam)

    def product(args):
        x, y, z = args
        return lam * (form(y, z) * x - form(z, x) * y)

    return HomAlgebra.untwisted(MultilinearMap.from_function(form.dim, 3, product), name="bilinear_lts")


def bilinear_jts(form: BilinearForm, lam: ScalarLike = 1) -> HomAlgebra:
    """``{xyz} = lam (<x,y> z + <y,z> x - <z,x> y)`` with identity twists."""
    lam = to_scalar(lam)

    def product(args):
        x, y, z = args
        return lam * (form(x, y) * z + form(y, z) * x - form(z, x) * y)

    return HomAlgebra.untwisted(MultilinearMap.from_function(form.dim, 3, product), name="bilinear_jts")


def fermionic_form(N: int) -> BilinearForm:
    if N < 1:
        raise ShapeError(f"fermionic system needs N >= 1, got {N}")
    dim = 2 * N
    rows = [[0] * dim for _ in range(dim)]
    for j in range(N):
        rows[j][N + j] = rows[N + j][j] = 1
    return BilinearForm(tuple(tuple(r) for r in rows))


def _check_eta(N: int, eta: Sequence[ScalarLike]) -> Tuple[Fraction, ...]:
    eta = tuple(to_scalar(e) for e in eta)
    if len(eta) != N:
        raise ShapeError(f"expected {N} values of eta, got {len(eta)}")
    for j, value in enumerate(eta):
        if value == 0:
            raise ScalarError(f"eta_{j + 1} must be nonzero")
    return eta


def fermionic_alpha(N: int, eta: Sequence[ScalarLike]) -> LinearMap:
    """``alpha(a_{-j}) = a_{-j} / eta_j``, ``alpha(a_{+j}) = eta_j a_{+j}``."""
    eta = _check_eta(N, eta)
    return LinearMap.diagonal([1 / e for e in eta] + list(eta))


def fermionic_direct(N: int, lam: ScalarLike, eta: Sequence[ScalarLike]) -> MultilinearMap:
    """The twisted fermionic product written out on basis triples.

    With s(i) the sign of a_i and k(i) its mode, the only nonzero products are

        [a_i, a_j, a_l] = lam (delta(a_j, a_l) eta_{k(i)}^{s(i)} a_i - delta(a_l, a_i) eta_{k(j)}^{s(j)} a_j)

    where delta(a, b) = 1 exactly when a and b are opposite-sign partners.
    """
    lam = to_scalar(lam)
    eta = _check_eta(N, eta)
    dim = 2 * N

    def mode(i):
        return i % N

    def factor(i):
        return eta[mode(i)] if i >= N else 1 / eta[mode(i)]

    def paired(i, j):
        return (i < N) != (j < N) and mode(i) == mode(j)

    table = {}
    for i in range(dim):
        for j in range(dim):
            for l in range(dim):
                terms = {}
                if paired(j, l):
                    terms[i] = terms.get(i, 0) + lam * factor(i)
                if paired(l, i):
                    terms[j] = terms.get(j, 0) - lam * factor(j)
                value = Vector.from_support(dim, terms)
                if not value.is_zero():
                    table[(i, j, l)] = value
    return MultilinearMap(dim, 3, table)


def fermionic_system(N: int, lam: ScalarLike, eta: Sequence[ScalarLike]) -> Tuple[HomAlgebra, LinearMap]:
    """The multiplicative ternary Hom-Nambu algebra ``V_alpha`` and its twist ``alpha``.

    Built by twisting ``bilinear_lts(fermionic_form(N), lam)`` with ``alpha``;
    the result is compared against ``fermionic_direct``.
    """
    if N < 2:
        raise ShapeError(f"fermionic system needs N >= 2, got {N}")
    alpha = fermionic_alpha(N, eta)
    base = bilinear_lts(fermionic_form(N), lam)
    algebra = twist(base, alpha).relabeled(f"fermionic(N={N})")
    if algebra.bracket != fermionic_direct(N, lam, eta):
        raise AlgebraError("fermionic product table disagrees with the twisted bilinear-form product")
    return algebra, alpha
