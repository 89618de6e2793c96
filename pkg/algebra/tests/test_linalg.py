from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.core.linalg import LinearMap, MultilinearMap, Vector, format_scalar, to_scalar
from algebra.errors import BudgetExceededError, ScalarError, ShapeError, SingularMatrixError
from algebra.tests.helpers import e, naive_evaluate, random_bracket

coords = st.integers(min_value=-5, max_value=5)


def vectors(dim):
    return st.lists(coords, min_size=dim, max_size=dim).map(lambda c: Vector(tuple(c)))


class TestScalars:
    @pytest.mark.parametrize(
        "literal, expected",
        [("3", Fraction(3)), ("-2/4", Fraction(-1, 2)), (" 7/21 ", Fraction(1, 3)), (5, Fraction(5))],
    )
    def test_parses_rational_literals(self, literal, expected):
        assert to_scalar(literal) == expected

    @pytest.mark.parametrize("literal", ["1/0", "0.5", "1e3", "", "a/b", True, 0.5, None])
    def test_rejects_malformed(self, literal):
        with pytest.raises(ScalarError):
            to_scalar(literal)

    def test_canonical_text(self):
        assert format_scalar(to_scalar("6/3")) == "2"
        assert format_scalar(Fraction(-4, 6)) == "-2/3"


class TestVector:
    def test_render_uses_one_based_names(self):
        v = Vector.from_support(4, {0: 2, 3: Fraction(-1, 3)})
        assert v.render() == "2*e1 - 1/3*e4"
        assert Vector.zero(3).render() == "0"
        assert (-e(2, 2)).render() == "-e2"

    def test_arithmetic(self):
        v = Vector((1, 2, 3))
        w = Vector((0, -1, 1))
        assert v + w == Vector((1, 1, 4))
        assert v - w == Vector((1, 3, 2))
        assert 2 * v == v * 2 == Vector((2, 4, 6))
        assert -v == Vector((-1, -2, -3))

    def test_dimension_mismatch(self):
        with pytest.raises(ShapeError):
            Vector((1, 2)) + Vector((1, 2, 3))

    def test_support_skips_zeros(self):
        assert Vector((0, 3, 0)).support == ((1, Fraction(3)),)


class TestLinearMap:
    def test_columns_are_images(self):
        f = LinearMap(((1, 2), (3, 4)))
        assert f.image(0) == Vector((1, 3))
        assert f(Vector((1, 1))) == Vector((3, 7))

    def test_compose_and_power(self):
        f = LinearMap(((1, 1), (0, 1)))
        assert f.power(3) == LinearMap(((1, 3), (0, 1)))
        assert (f @ f) == f.compose(f) == f.power(2)
        assert f.power(0).is_identity()

    def test_inverse_is_exact(self):
        f = LinearMap(((2, 1), (1, 1)))
        assert f.compose(f.inverse()).is_identity()
        assert f.inverse() == LinearMap(((1, -1), (-1, 2)))

    def test_singular_inverse(self):
        with pytest.raises(SingularMatrixError):
            LinearMap(((1, 2), (2, 4))).inverse()

    def test_non_square(self):
        with pytest.raises(ShapeError):
            LinearMap(((1, 2),))

    def test_from_images_round_trip(self):
        images = [Vector((0, 1)), Vector((1, 0))]
        assert [LinearMap.from_images(images).image(j) for j in range(2)] == images


class TestMultilinearMap:
    def test_drops_zero_values(self):
        m = MultilinearMap(2, 2, {(0, 0): Vector.zero(2), (0, 1): e(2, 1)})
        assert m.nnz == 1

    def test_rejects_bad_keys(self):
        with pytest.raises(ShapeError):
            MultilinearMap(2, 2, {(0, 2): e(2, 1)})
        with pytest.raises(ShapeError):
            MultilinearMap(2, 2, {(0,): e(2, 1)})

    def test_basis_evaluation_reads_table(self):
        m = random_bracket(3, 3, 3)
        for key, value in m.items():
            assert m([e(3, i + 1) for i in key]) == value

    def test_permuted_reorders_arguments(self):
        m = random_bracket(5, 2, 3)
        swapped = m.permuted((2, 1, 0))
        x, y, z = Vector((1, 2)), Vector((-1, 3)), Vector((2, 0))
        assert swapped([x, y, z]) == m([z, y, x])

    def test_contract_first(self):
        m = random_bracket(7, 3, 3)
        a = Vector((1, -1, 2))
        x, y = Vector((0, 1, 1)), Vector((3, 0, -1))
        assert m.contract_first(a)([x, y]) == m([a, x, y])

    def test_contract_first_needs_arity_three(self):
        with pytest.raises(ShapeError):
            random_bracket(1, 2, 2).contract_first(e(2, 1))

    def test_from_function_budget(self):
        with pytest.raises(BudgetExceededError) as info:
            MultilinearMap.from_function(4, 3, lambda args: args[0], budget=10)
        assert info.value.required == 64

    def test_twist_product(self):
        m = random_bracket(9, 2, 2)
        beta = LinearMap(((0, 1), (1, 0)))
        x, y = Vector((1, 2)), Vector((3, -1))
        assert m.twist_product(beta)([x, y]) == beta(m([x, y]))

    def test_linear_combinations(self):
        m = random_bracket(11, 2, 2)
        n = random_bracket(12, 2, 2)
        x, y = Vector((1, 2)), Vector((3, -1))
        assert (m + 3 * n)([x, y]) == m([x, y]) + 3 * n([x, y])
        assert (m - m).is_zero()

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 10_000), x=vectors(3), y=vectors(3), z=vectors(3), w=vectors(3), c=coords)
    def test_multilinear_in_every_slot(self, seed, x, y, z, w, c):
        m = random_bracket(seed, 3, 3)
        assert m([x + c * w, y, z]) == m([x, y, z]) + c * m([w, y, z])
        assert m([x, y + c * w, z]) == m([x, y, z]) + c * m([x, w, z])
        assert m([x, y, z + c * w]) == m([x, y, z]) + c * m([x, y, w])

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 10_000), x=vectors(3), y=vectors(3), z=vectors(3))
    def test_prefix_tree_matches_dense_expansion(self, seed, x, y, z):
        m = random_bracket(seed, 3, 3, density=0.5)
        assert m([x, y, z]) == naive_evaluate(m, [x, y, z])

    def test_rational_arguments(self):
        m = random_bracket(2, 2, 2, density=1.0)
        x = Vector((Fraction(1, 2), Fraction(-2, 3)))
        y = Vector((Fraction(3, 4), 5))
        assert m([x, y]) == naive_evaluate(m, [x, y])
