import itertools
from fractions import Fraction

import pytest

from algebra.constructions import minus_algebra, plus_algebra, replace_twists
from algebra.core.enumeration import Condition, check_conditions, combine_reports
from algebra.core.hom_algebra import HomAlgebra, hom_associator
from algebra.core.linalg import LinearMap, MultilinearMap, Vector
from algebra.core.reports import CheckConfig, CheckMode, CheckReport, Witness
from algebra.errors import AlgebraError, ArityError, BudgetExceededError
from algebra.identities import (
    CHECKERS,
    check_alternative,
    check_antisymmetry,
    check_hom_associative,
    check_hom_jordan_ts,
    check_hom_lie,
    check_hom_lie_ts,
    check_hom_nambu,
    check_jordan,
    check_maltsev,
    check_nambu_lie,
    check_ternary_total_hom_assoc,
)
from algebra.generators import (
    bilinear_jts,
    bilinear_lts,
    fermionic_form,
    matrix_algebra,
    matrix_jts,
    matrix_ternary_ring,
    quaternion_cross_3lie,
    sl2,
)
from algebra.tests.helpers import antisymmetrized, e, naive_evaluate, naive_hom_jacobian, random_algebra

RANDOMIZED = CheckConfig.randomized(samples=500, seed=0)


class TestEnumeration:
    def test_lexicographic_first_witness(self):
        # fails only on (e2, e1)
        def sides(a):
            hit = a[0][1] == 1 and a[1][0] == 1
            return a[0], Vector.zero(2) if hit else a[0]

        report = check_conditions("probe", 2, [Condition("probe", 2, sides)], CheckConfig.exhaustive())
        assert report.witness.args == (1, 0)
        assert report.tuples_checked == 3

    def test_auto_switches_to_sampling_above_budget(self):
        condition = Condition("true", 3, lambda a: (a[0], a[0]))
        report = check_conditions("probe", 5, [condition], CheckConfig(budget=100, samples=7, seed=3))
        assert report.mode == CheckMode.RANDOMIZED
        assert report.tuples_checked == 7
        assert report.seed == 3

    def test_exhaustive_refuses_above_budget(self):
        condition = Condition("true", 3, lambda a: (a[0], a[0]))
        with pytest.raises(BudgetExceededError) as info:
            check_conditions("probe", 5, [condition], CheckConfig.exhaustive(budget=100))
        assert info.value.required == 125

    def test_zero_slot_condition_runs_once(self):
        report = check_conditions("fixed", 3, [Condition("c", 0, lambda _: (e(3, 1), e(3, 1)))])
        assert report.passed and report.tuples_checked == 1

    def test_sampling_is_seeded(self):
        L = random_algebra(1, 3, 2)
        first = check_hom_associative(L, CheckConfig.randomized(samples=20, seed=5))
        second = check_hom_associative(L, CheckConfig.randomized(samples=20, seed=5))
        assert first == second

    def test_combine_keeps_first_failure(self):
        passing = check_conditions("a", 2, [Condition("c", 1, lambda a: (a[0], a[0]))])
        failing = check_conditions("b", 2, [Condition("d", 1, lambda a: (a[0], -a[0]))])
        combined = combine_reports("both", [passing, failing])
        assert not combined.passed
        assert combined.witness.condition == "d"
        assert combined.tuples_checked == passing.tuples_checked + failing.tuples_checked


class TestReports:
    def test_witness_sides_must_differ(self):
        with pytest.raises(AlgebraError):
            Witness("x", "c", (0,), e(2, 1), e(2, 1))

    def test_failing_report_needs_witness(self):
        with pytest.raises(AlgebraError):
            CheckReport("x", CheckMode.EXHAUSTIVE, False, 3)

    def test_config_validation(self):
        with pytest.raises(AlgebraError):
            CheckConfig(samples=0)

    def test_summary_mentions_witness(self, fermionic):
        V, _ = fermionic
        report = check_antisymmetry(V)
        assert report.summary().startswith("FAIL antisymmetry (exhaustive")
        assert "witness: antisymmetry [swap_slots_" in report.summary()


class TestHomNambu:
    def test_fermionic_passes_exhaustively(self, fermionic):
        V, _ = fermionic
        report = check_hom_nambu(V, CheckConfig.exhaustive())
        assert report.passed
        assert report.tuples_checked == 4**5

    def test_identity_twists_fail(self, fermionic):
        V, _ = fermionic
        report = check_hom_nambu(replace_twists(V, LinearMap.identity(4)))
        assert not report.passed
        w = report.witness
        xs, ys = w.vectors(4)[:2], w.vectors(4)[2:]
        assert naive_hom_jacobian(replace_twists(V, LinearMap.identity(4)), xs, ys) == w.lhs
        assert w.args == (0, 1, 0, 2, 2)
        assert w.lhs == Fraction(5, 9) * e(4, 2)

    def test_zero_bracket(self):
        assert check_hom_nambu(HomAlgebra.untwisted(MultilinearMap.zero(2, 4))).passed

    def test_lie_algebra_is_binary_nambu(self):
        assert check_hom_nambu(sl2()).passed


class TestAntisymmetry:
    def test_quaternion_cross(self):
        assert check_antisymmetry(quaternion_cross_3lie()).passed
        assert check_nambu_lie(quaternion_cross_3lie()).passed

    def test_fermionic_fails(self, fermionic):
        V, _ = fermionic
        assert not check_antisymmetry(V).passed
        assert not check_nambu_lie(V).passed

    def test_zero_bracket(self):
        assert check_antisymmetry(HomAlgebra.untwisted(MultilinearMap.zero(3, 3))).passed

    @pytest.mark.parametrize("seed", range(10))
    def test_adjacent_swaps_agree_with_full_permutation_group(self, seed):
        L = random_algebra(seed, 2, 3, density=0.4)
        if seed % 2:
            L = HomAlgebra.untwisted(antisymmetrized(L.bracket))
        full = all(
            L.bracket.permuted(order) == (L.bracket if _even(order) else -L.bracket)
            for order in itertools.permutations(range(3))
        )
        assert check_antisymmetry(L).passed == full


def _even(order) -> bool:
    return sum(1 for i, j in itertools.combinations(range(len(order)), 2) if order[i] > order[j]) % 2 == 0


class TestTernaryIdentities:
    def test_matrix_ternary_ring(self):
        assert check_ternary_total_hom_assoc(matrix_ternary_ring(2)).passed

    def test_random_ternary_fails(self):
        assert not check_ternary_total_hom_assoc(random_algebra(3, 2, 3, density=0.6)).passed

    def test_arity_guard(self):
        with pytest.raises(ArityError):
            check_ternary_total_hom_assoc(sl2())
        with pytest.raises(ArityError):
            check_hom_jordan_ts(sl2())

    def test_bilinear_jordan_triple_system(self):
        assert check_hom_jordan_ts(bilinear_jts(fermionic_form(2), 1)).passed

    def test_matrix_jts(self):
        assert check_hom_jordan_ts(matrix_jts(2, 2)).passed

    def test_bilinear_lie_triple_system(self):
        assert check_hom_lie_ts(bilinear_lts(fermionic_form(2), 1)).passed

    def test_lie_triple_system_rejects_jordan_product(self):
        report = check_hom_lie_ts(bilinear_jts(fermionic_form(2), 1))
        assert not report.passed
        assert report.witness.condition == "left_antisymmetry"


class TestBinaryIdentities:
    def test_matrices_hom_associative(self):
        assert check_hom_associative(matrix_algebra(2)).passed

    def test_octonions_not_associative(self, octonion_algebra):
        report = check_hom_associative(octonion_algebra)
        assert not report.passed
        assert report.witness.args == (1, 2, 3)
        assert report.witness.lhs == -2 * e(8, 7)
        assert report.witness.rhs.is_zero()
        assert report.witness.lhs == hom_associator(octonion_algebra, *report.witness.vectors(8))

    def test_sl2_hom_lie(self):
        assert check_hom_lie(sl2()).passed

    def test_matrix_commutator_is_lie(self):
        assert check_hom_lie(minus_algebra(matrix_algebra(2))).passed

    def test_octonions_alternative(self, octonion_algebra):
        report = check_alternative(octonion_algebra)
        assert report.passed and report.mode == CheckMode.EXHAUSTIVE

    def test_octonion_minus_algebra_maltsev(self, octonion_algebra):
        assert check_maltsev(minus_algebra(octonion_algebra)).passed

    def test_octonion_minus_algebra_not_lie(self, octonion_algebra):
        report = check_hom_lie(minus_algebra(octonion_algebra))
        assert not report.passed
        assert report.witness.condition == "hom_jacobi"

    def test_octonion_plus_algebra_jordan(self, octonion_algebra):
        assert check_jordan(plus_algebra(octonion_algebra)).passed

    def test_matrix_plus_algebra_jordan(self):
        assert check_jordan(plus_algebra(matrix_algebra(2))).passed

    def test_non_commutative_not_jordan(self):
        report = check_jordan(matrix_algebra(2))
        assert report.witness.condition == "commutativity"

    def test_twisted_inputs_fail_untwisted_identities(self, octonion_algebra):
        twisted = replace_twists(octonion_algebra, LinearMap.diagonal([1] + [-1] * 7))
        report = check_alternative(twisted)
        assert not report.passed
        assert report.witness.condition == "identity_twist"


class TestRegistry:
    def test_names(self):
        assert set(CHECKERS) == {
            "hom_nambu", "nambu_lie", "antisymmetry", "ternary_total_hom_assoc", "hom_jordan_ts",
            "hom_lie_ts", "hom_associative", "hom_lie", "maltsev", "alternative", "jordan", "multiplicative",
        }


# ---------------------------------------------------------------------------
# Randomized checking agrees with exhaustive checking
# ---------------------------------------------------------------------------


def _soundness_corpus():
    cases = []
    for seed in range(50):
        dim = 2 + seed % 2
        arity = 2 + seed % 2
        L = random_algebra(seed, dim, arity, density=0.25)
        if seed % 5 == 0:
            L = HomAlgebra.untwisted(antisymmetrized(L.bracket))
        if seed % 7 == 0:
            L = HomAlgebra.untwisted(MultilinearMap.zero(dim, arity))
        cases.append(pytest.param(L, id=f"seed{seed}-dim{dim}-arity{arity}"))
    cases.append(pytest.param(sl2(), id="sl2"))
    cases.append(pytest.param(quaternion_cross_3lie(), id="quaternion_cross"))
    return cases


@pytest.mark.parametrize("L", _soundness_corpus())
def test_randomized_verdict_matches_exhaustive(L):
    checkers = [check_hom_nambu, check_antisymmetry]
    if L.arity == 2:
        checkers.append(check_hom_associative)
    for checker in checkers:
        exhaustive = checker(L, CheckConfig.exhaustive())
        randomized = checker(L, RANDOMIZED)
        assert exhaustive.passed == randomized.passed, checker.__name__
        for report in (exhaustive, randomized):
            if report.witness is not None and report.witness.condition == "hom_nambu_identity":
                args = report.witness.vectors(L.dim)
                n = L.arity
                assert naive_hom_jacobian(L, args[: n - 1], args[n - 1 :]) == report.witness.lhs
            elif report.witness is not None and report.witness.condition.startswith("swap_slots"):
                args = report.witness.vectors(L.dim)
                assert naive_evaluate(L.bracket, args) == report.witness.lhs
