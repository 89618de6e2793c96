import logging

import pytest

from algebra.constructions import twist
from algebra.core.hom_algebra import is_multiplicative, is_weak_morphism
from algebra.core.linalg import LinearMap, Vector
from algebra.errors import AlgebraError, HypothesisError, ScalarError, ShapeError, SingularMatrixError
from algebra.generators import (
    GENERATORS,
    OCTONION_TABLE,
    BilinearForm,
    bilinear_lts,
    cross_product_nlie,
    fermionic_alpha,
    fermionic_direct,
    fermionic_form,
    fermionic_system,
    generate,
    hom_pair_ternary_ring,
    involution_jts,
    lift,
    matrix_algebra,
    matrix_conjugation,
    octonion_basic_triple_automorphism,
    octonion_conjugate,
    quaternion_cross_3lie,
    reversal_permutation,
    sl2,
    sl2_scaling_automorphism,
    transpose_map,
    upper_triangular2,
    upper_triangular2_scaling,
)
from algebra.identities import check_hom_jordan_ts, check_hom_lie, check_nambu_lie
from algebra.tests.helpers import e


class TestOctonionTable:
    def test_basic_product(self):
        assert OCTONION_TABLE.product(1, 2) == (1, 4)

    def test_unit(self):
        for i in range(8):
            assert OCTONION_TABLE.product(0, i) == (1, i)
            assert OCTONION_TABLE.product(i, 0) == (1, i)

    @pytest.mark.parametrize("i", range(1, 8))
    def test_imaginary_units_square_to_minus_one(self, i):
        assert OCTONION_TABLE.product(i, i) == (-1, 0)

    def test_imaginary_units_anticommute(self):
        for i in range(1, 8):
            for j in range(1, 8):
                if i != j:
                    sign, k = OCTONION_TABLE.product(i, j)
                    assert OCTONION_TABLE.product(j, i) == (-sign, k)

    def test_algebra_matches_table(self, octonion_algebra):
        assert octonion_algebra.evaluate(e(8, 2), e(8, 3)) == e(8, 5)
        assert octonion_algebra.alpha.is_identity()

    def test_basic_triple_images(self):
        f = octonion_basic_triple_automorphism()
        assert [f.image(i) for i in (1, 2, 3)] == [Vector.basis(8, k) for k in (5, 6, 7)]

    def test_conjugate(self):
        conj = octonion_conjugate()
        assert conj(e(8, 1)) == e(8, 1)
        assert conj(e(8, 4)) == -e(8, 4)


class TestLift:
    def test_refuses_map_moving_the_unit(self):
        with pytest.raises(HypothesisError):
            lift(LinearMap.scalar(8, 2))

    def test_lifted_map_fixes_diagonal(self):
        lifted = lift(octonion_basic_triple_automorphism())
        assert lifted.dim == 27
        assert all(lifted.image(i) == Vector.basis(27, i) for i in range(3))
        # x-block coordinate e1 goes to e5
        assert lifted.image(3 + 1) == Vector.basis(27, 3 + 5)


class TestFermionic:
    def test_direct_table_matches_twist(self):
        twisted = twist(bilinear_lts(fermionic_form(3), 2), fermionic_alpha(3, (1, 2, 3)))
        assert fermionic_direct(3, 2, (1, 2, 3)) == twisted.bracket

    def test_direct_value(self):
        # [a+1, a-1, a+1] = eta_1 a+1
        table = fermionic_direct(2, 1, (2, 3))
        assert table([e(4, 3), e(4, 1), e(4, 3)]) == 2 * e(4, 3)

    def test_alpha_preserves_form(self):
        assert fermionic_form(2).is_invariant(fermionic_alpha(2, ("1/2", 5)))

    def test_zero_eta(self):
        with pytest.raises(ScalarError):
            fermionic_alpha(2, (1, 0))

    def test_eta_length(self):
        with pytest.raises(ShapeError):
            fermionic_alpha(2, (1, 2, 3))

    def test_needs_two_modes(self):
        with pytest.raises(ShapeError):
            fermionic_system(1, 1, (2,))

    def test_system_is_multiplicative(self, fermionic):
        V, alpha = fermionic
        assert V.twists == (alpha, alpha)
        assert is_multiplicative(V).passed


class TestBilinearForm:
    def test_rejects_non_symmetric(self):
        with pytest.raises(ShapeError):
            BilinearForm(((1, 2), (0, 1)))

    def test_pairing(self):
        form = fermionic_form(2)
        assert form(e(4, 1), e(4, 3)) == 1
        assert form(e(4, 1), e(4, 4)) == 0

    def test_scaling_breaks_invariance(self):
        assert not fermionic_form(2).is_invariant(LinearMap.scalar(4, 2))


class TestMatrices:
    def test_matrix_units(self):
        A = matrix_algebra(2)
        # E12 E21 = E11
        assert A.evaluate(e(4, 2), e(4, 3)) == e(4, 1)
        assert A.evaluate(e(4, 3), e(4, 3)).is_zero()

    def test_transpose_is_involutive(self):
        assert transpose_map(3).power(2).is_identity()
        assert transpose_map(2)(e(4, 2)) == e(4, 3)

    def test_conjugation_is_automorphism(self):
        A = matrix_algebra(2)
        assert is_weak_morphism(matrix_conjugation(2, reversal_permutation(2)), A, A).passed

    def test_singular_conjugation(self):
        with pytest.raises(SingularMatrixError):
            matrix_conjugation(2, LinearMap(((1, 1), (1, 1))))

    def test_conjugation_size(self):
        with pytest.raises(ShapeError):
            matrix_conjugation(3, reversal_permutation(2))

    def test_involution_triple_system(self):
        J = involution_jts(matrix_algebra(2), transpose_map(2))
        assert check_hom_jordan_ts(J).passed

    def test_involution_needs_anti_morphism(self):
        with pytest.raises(HypothesisError) as info:
            involution_jts(matrix_algebra(2), LinearMap.identity(4))
        assert info.value.hypothesis == "theta is an anti-morphism"

    def test_upper_triangular_scaling(self):
        A = upper_triangular2()
        assert is_weak_morphism(upper_triangular2_scaling(5), A, A).passed

    def test_hom_pair_alpha_is_automorphism(self):
        ring, alpha = hom_pair_ternary_ring(1, 2, LinearMap(((2,),)), LinearMap(((1, 0), (0, 3))))
        assert ring.dim == 4
        assert is_weak_morphism(alpha, ring, ring).passed

    def test_hom_pair_sizes(self):
        with pytest.raises(ShapeError):
            hom_pair_ternary_ring(1, 2, LinearMap.identity(2), LinearMap.identity(2))

    def test_hom_pair_singular(self):
        with pytest.raises(SingularMatrixError):
            hom_pair_ternary_ring(1, 1, LinearMap(((0,),)), LinearMap(((1,),)))


class TestLieAlgebras:
    def test_sl2_relations(self):
        L = sl2()
        h, x, y = e(3, 1), e(3, 2), e(3, 3)
        assert L.evaluate(h, x) == 2 * x
        assert L.evaluate(h, y) == -2 * y
        assert L.evaluate(x, y) == h

    def test_sl2_scaling_is_automorphism(self):
        assert is_weak_morphism(sl2_scaling_automorphism("3/2"), sl2(), sl2()).passed
        with pytest.raises(ScalarError):
            sl2_scaling_automorphism(0)

    def test_cross_product_signs(self):
        L = cross_product_nlie(2)
        assert L.evaluate(e(3, 1), e(3, 2)) == e(3, 3)
        assert L.evaluate(e(3, 2), e(3, 3)) == e(3, 1)
        assert L.evaluate(e(3, 1), e(3, 3)) == -e(3, 2)
        assert check_hom_lie(L).passed

    def test_quaternion_cross(self):
        L = quaternion_cross_3lie()
        assert L.evaluate(e(4, 1), e(4, 2), e(4, 3)) == e(4, 4)
        assert L == cross_product_nlie(3)

    def test_four_lie(self):
        assert check_nambu_lie(cross_product_nlie(4)).passed

    def test_cross_product_arity(self):
        with pytest.raises(ShapeError):
            cross_product_nlie(1)

    def test_cross_product_logs_table_size(self, caplog):
        with caplog.at_level(logging.DEBUG, logger="algebra.generators.lie"):
            cross_product_nlie(2)
        assert "cross_product_nlie: 6 structure constants on dimension 3" in caplog.messages


class TestRegistry:
    def test_unknown_name(self):
        with pytest.raises(AlgebraError, match="unknown example"):
            generate("no_such_algebra")

    def test_bad_parameters(self):
        with pytest.raises(AlgebraError, match="bad parameters"):
            generate("sl2", bogus=1)

    def test_parameters_reach_builder(self):
        example = generate("fermionic", N=3, eta=["1/2", 2, 5])
        assert example.algebra.dim == 6
        assert example.maps["alpha"] == fermionic_alpha(3, ("1/2", 2, 5))

    def test_affine2_carries_trace(self):
        example = generate("affine2", c=3)
        assert "trace" in example.functionals
        assert example.maps["scalar"] == LinearMap.scalar(2, 3)

    @pytest.mark.parametrize("name", sorted(set(GENERATORS) - {"exceptional_jordan"}))
    def test_every_example_is_named(self, name):
        assert generate(name).algebra.name
