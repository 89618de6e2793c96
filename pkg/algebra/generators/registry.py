"""
Named example generators.

Each builder takes keyword parameters made of plain JSON values (ints,
rational strings, lists) and returns a ``GeneratedExample``: the algebra
plus the maps and functionals its constructions are usually fed with.
"""

import importlib
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Mapping, Optional, Sequence

from algebra.constructions.arity import TraceFunctional
from algebra.core.hom_algebra import HomAlgebra
from algebra.core.linalg import LinearMap, ScalarLike
from algebra.errors import AlgebraError
from algebra.generators import forms, lie, matrices

# The package namespace binds ``octonions`` to the function, so load the submodule by path.
octonions = importlib.import_module("algebra.generators.octonions")

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratedExample:
    algebra: HomAlgebra
    maps: Mapping[str, LinearMap] = field(default_factory=dict)
    functionals: Mapping[str, TraceFunctional] = field(default_factory=dict)


def _fermionic(N: int = 2, lam: ScalarLike = 1, eta: Sequence[ScalarLike] = (2, 3)) -> GeneratedExample:
    algebra, alpha = forms.fermionic_system(N, lam, eta)
    return GeneratedExample(algebra, {"alpha": alpha})


def _bilinear(builder, N: int, lam: ScalarLike, eta: Optional[Sequence[ScalarLike]]) -> GeneratedExample:
    algebra = builder(forms.fermionic_form(N), lam)
    maps = {"alpha": forms.fermionic_alpha(N, eta)} if eta is not None else {}
    return GeneratedExample(algebra, maps)


def _bilinear_lts(N: int = 2, lam: ScalarLike = 1, eta: Optional[Sequence[ScalarLike]] = (2, 3)) -> GeneratedExample:
    return _bilinear(forms.bilinear_lts, N, lam, eta)


def _bilinear_jts(N: int = 2, lam: ScalarLike = 1, eta: Optional[Sequence[ScalarLike]] = (2, 3)) -> GeneratedExample:
    return _bilinear(forms.bilinear_jts, N, lam, eta)


def _octonions() -> GeneratedExample:
    return GeneratedExample(
        octonions.octonions(),
        {
            "basic_triple": octonions.octonion_basic_triple_automorphism(),
            "conjugate": octonions.octonion_conjugate(),
        },
    )


def _exceptional_jordan() -> GeneratedExample:
    lifted = octonions.lift(octonions.octonion_basic_triple_automorphism())
    return GeneratedExample(octonions.exceptional_jordan(), {"basic_triple_lift": lifted})


def _matrix_algebra(p: int = 2) -> GeneratedExample:
    maps = {
        "transpose": matrices.transpose_map(p),
        "reversal_conjugation": matrices.matrix_conjugation(p, matrices.reversal_permutation(p)),
    }
    return GeneratedExample(matrices.matrix_algebra(p), maps)


def _matrix_ternary_ring(p: int = 2) -> GeneratedExample:
    conjugation = matrices.matrix_conjugation(p, matrices.reversal_permutation(p))
    return GeneratedExample(matrices.matrix_ternary_ring(p), {"reversal_conjugation": conjugation})


def _matrix_jts(p: int = 2, q: int = 2) -> GeneratedExample:
    return GeneratedExample(matrices.matrix_jts(p, q))


def _involution_jts(p: int = 2) -> GeneratedExample:
    algebra = matrices.involution_jts(matrices.matrix_algebra(p), matrices.transpose_map(p))
    conjugation = matrices.matrix_conjugation(p, matrices.reversal_permutation(p))
    return GeneratedExample(algebra, {"reversal_conjugation": conjugation})


def _hom_pair(
    p: int = 1,
    q: int = 2,
    beta: Sequence[Sequence[ScalarLike]] = ((2,),),
    gamma: Sequence[Sequence[ScalarLike]] = ((1, 0), (0, 3)),
) -> GeneratedExample:
    algebra, alpha = matrices.hom_pair_ternary_ring(p, q, LinearMap(beta), LinearMap(gamma))
    return GeneratedExample(algebra, {"alpha": alpha})


def _upper_triangular2(c: ScalarLike = 2) -> GeneratedExample:
    return GeneratedExample(matrices.upper_triangular2(), {"scaling": matrices.upper_triangular2_scaling(c)})


def _sl2(t: ScalarLike = 2) -> GeneratedExample:
    return GeneratedExample(lie.sl2(), {"scaling": lie.sl2_scaling_automorphism(t)})


def _affine2(c: ScalarLike = 2) -> GeneratedExample:
    return GeneratedExample(
        lie.affine2(),
        {"scalar": LinearMap.scalar(2, c)},
        {"trace": lie.affine2_trace()},
    )


def _cross_product(n: int = 3) -> GeneratedExample:
    return GeneratedExample(lie.cross_product_nlie(n))


def _quaternion_cross() -> GeneratedExample:
    return GeneratedExample(lie.quaternion_cross_3lie())


GENERATORS: Dict[str, Callable[..., GeneratedExample]] = {
    "fermionic": _fermionic,
    "bilinear_lts": _bilinear_lts,
    "bilinear_jts": _bilinear_jts,
    "octonions": _octonions,
    "exceptional_jordan": _exceptional_jordan,
    "matrix_algebra": _matrix_algebra,
    "matrix_ternary_ring": _matrix_ternary_ring,
    "matrix_jts": _matrix_jts,
    "involution_jts": _involution_jts,
    "hom_pair": _hom_pair,
    "upper_triangular2": _upper_triangular2,
    "sl2": _sl2,
    "affine2": _affine2,
    "cross_product": _cross_product,
    "quaternion_cross": _quaternion_cross,
}


def generate(name: str, **params: Any) -> GeneratedExample:
    """Build the named example.

    Raises:
        AlgebraError: unknown name or parameters.
    """
    builder = GENERATORS.get(name)
    if builder is None:
        raise AlgebraError(f"unknown example {name!r}; known: {', '.join(sorted(GENERATORS))}")
    logger.info(f"Generating example {name} with {params or 'default parameters'}")
    try:
        example = builder(**params)
    except TypeError as exc:
        raise AlgebraError(f"bad parameters for example {name!r}: {exc}") from exc
    if not example.algebra.name:
        example = GeneratedExample(example.algebra.relabeled(name), example.maps, example.functionals)
    return example
