"""
End-to-end reproduction of the worked examples and the closure theorems.

Every construction output in the corpus below is checked against the
identity its construction guarantees: exhaustively when the basis tuples
fit in a million, otherwise on 500 seeded samples.
"""

import itertools
from fractions import Fraction

import pytest

from algebra.constructions import (
    TraceFunctional,
    derived,
    iterate_raise,
    jts_from_jordan,
    jts_from_ternary_assoc,
    lower_arity,
    lts_from_hom_assoc,
    lts_from_hom_lie,
    lts_from_jts,
    lts_from_maltsev,
    lts_from_ternary_assoc,
    minus_algebra,
    plus_algebra,
    raise_arity,
    reduce_trace_bracket,
    replace_twists,
    ternary_assoc_from_hom_assoc,
    ternary_from_trace,
    ternary_twist,
    twist,
)
from algebra.core.hom_algebra import HomAlgebra, hom_jacobian, is_morphism, is_multiplicative
from algebra.core.linalg import LinearMap, Vector
from algebra.core.reports import CheckConfig, CheckMode
from algebra.generators import (
    affine2,
    affine2_trace,
    bilinear_lts,
    cross_product_nlie,
    exceptional_jordan,
    fermionic_alpha,
    fermionic_form,
    fermionic_system,
    hom_pair_ternary_ring,
    lift,
    matrix_algebra,
    matrix_conjugation,
    matrix_ternary_ring,
    octonion_basic_triple_automorphism,
    quaternion_cross_3lie,
    reversal_permutation,
    sl2,
    sl2_scaling_automorphism,
    upper_triangular2,
    upper_triangular2_scaling,
)
from algebra.identities import (
    CHECKERS,
    check_alternative,
    check_hom_associative,
    check_hom_jordan_ts,
    check_hom_lie,
    check_hom_nambu,
    check_jordan,
    check_maltsev,
)
from algebra.tests.helpers import dense_vectors, e

CLOSURE = CheckConfig(budget=1_000_000, samples=500, seed=0)

ETAS = [(2, 3), ("1/2", 5), (-1, 4)]
SCALINGS = [2, -1, "1/3"]
CONJUGATORS = [reversal_permutation(2), LinearMap(((1, 1), (0, 1))), LinearMap.diagonal([2, 1])]


def heisenberg_plus_line() -> HomAlgebra:
    table = {(1, 2): e(4, 4), (2, 1): -e(4, 4)}
    return HomAlgebra.from_table(4, 2, table, name="heisenberg_plus_line")


def hom_associative_inputs():
    inputs = [twist(upper_triangular2(), upper_triangular2_scaling(c)) for c in (2, 3, -1)]
    inputs += [twist(matrix_algebra(2), matrix_conjugation(2, P)) for P in CONJUGATORS]
    return inputs


def ternary_associative_inputs():
    rings = [
        hom_pair_ternary_ring(1, 2, LinearMap(((2,),)), LinearMap(((1, 0), (0, 3)))),
        hom_pair_ternary_ring(2, 1, LinearMap(((1, 1), (0, 1))), LinearMap(((5,),))),
    ]
    return [ternary_twist(ring, alpha) for ring, alpha in rings] + [matrix_ternary_ring(2)]


def hom_sl2(t) -> HomAlgebra:
    return twist(sl2(), sl2_scaling_automorphism(t))


def _closure_corpus():
    cases = []

    def add(label, checker, build):
        cases.append(pytest.param(build, checker, id=f"{label}-{len(cases)}"))

    for lam in (1, 2, "-1/3"):
        for eta in ETAS:
            add("twist_fermionic", "hom_nambu",
                lambda lam=lam, eta=eta: twist(bilinear_lts(fermionic_form(2), lam), fermionic_alpha(2, eta)))
    add("twist_fermionic3", "hom_nambu",
        lambda: twist(bilinear_lts(fermionic_form(3), 1), fermionic_alpha(3, (1, 2, 3))))
    for k in (1, 2):
        for eta in ETAS:
            add("derived", "hom_nambu", lambda k=k, eta=eta: derived(fermionic_system(2, 1, eta)[0], k))
    for t in SCALINGS:
        add("twist_sl2", "hom_lie", lambda t=t: hom_sl2(t))
        add("lts_of_hom_lie", "hom_lie_ts", lambda t=t: lts_from_hom_lie(hom_sl2(t)))
        add("raise_sl2", "hom_nambu", lambda t=t: raise_arity(hom_sl2(t)))
    for i in range(6):
        add("hom_associative", "hom_associative", lambda i=i: hom_associative_inputs()[i])
        add("ternary_of_binary", "ternary_total_hom_assoc",
            lambda i=i: ternary_assoc_from_hom_assoc(hom_associative_inputs()[i]))
        add("lts_of_hom_assoc", "hom_lie_ts", lambda i=i: lts_from_hom_assoc(hom_associative_inputs()[i]))
    for i in range(3, 6):
        add("commutator", "hom_lie", lambda i=i: minus_algebra(hom_associative_inputs()[i]))
    for i in range(3):
        add("jts_of_ternary", "hom_jordan_ts", lambda i=i: jts_from_ternary_assoc(ternary_associative_inputs()[i]))
        add("lts_of_jts", "hom_lie_ts",
            lambda i=i: lts_from_jts(jts_from_ternary_assoc(ternary_associative_inputs()[i])))
    add("iterate_raise_sl2", "hom_nambu", lambda: iterate_raise(sl2(), 2))
    add("lower_quaternion", "hom_lie", lambda: lower_arity(quaternion_cross_3lie(), e(4, 1)))
    add("lower_four_lie", "nambu_lie", lambda: lower_arity(cross_product_nlie(4), e(5, 1)))
    for c in (2, 3, -1):
        add("ternary_from_trace", "hom_nambu",
            lambda c=c: ternary_from_trace(heisenberg_plus_line(), TraceFunctional((1, 0, 0, 0)), LinearMap.scalar(4, c)))
    for c in (2, 3, "1/2"):
        add("reduce_trace", "hom_lie",
            lambda c=c: reduce_trace_bracket(affine2(), affine2_trace(), LinearMap.scalar(2, c), e(2, 1)))
    add("jts_of_jordan", "hom_jordan_ts", lambda: jts_from_jordan(plus_algebra(matrix_algebra(2))))
    add("lts_of_maltsev", "hom_lie_ts", lambda: lts_from_maltsev(sl2()))
    return cases


CLOSURE_CORPUS = _closure_corpus()


def test_closure_corpus_size():
    assert len(CLOSURE_CORPUS) >= 50


@pytest.mark.parametrize("build, checker", CLOSURE_CORPUS)
def test_construction_outputs_satisfy_their_identity(build, checker):
    report = CHECKERS[checker](build(), CLOSURE)
    assert report.passed, report.summary()


class TestFermionicExample:
    def test_counterexample_value(self, fermionic):
        V, _ = fermionic
        untwisted = replace_twists(V, LinearMap.identity(4))
        # (x1, x2) = (a+1, a+2), (y1, y2, y3) = (a-2, a+2, a-2)
        value = hom_jacobian(untwisted, [e(4, 3), e(4, 4)], [e(4, 2), e(4, 4), e(4, 2)])
        assert value == Fraction(-10, 3) * e(4, 3)

    def test_twisted_system_is_multiplicative_hom_nambu(self, fermionic):
        V, _ = fermionic
        report = check_hom_nambu(V, CheckConfig.exhaustive())
        assert report.passed and report.tuples_checked == 1024
        assert is_multiplicative(V).passed

    def test_identity_twists_fail(self, fermionic):
        V, _ = fermionic
        report = check_hom_nambu(replace_twists(V, LinearMap.identity(4)))
        assert not report.passed
        # first failing basis tuple: (a-1, a-2; a-1, a+1, a+1)
        assert report.mode == CheckMode.EXHAUSTIVE
        assert report.witness.args == (0, 1, 0, 2, 2)
        assert report.witness.lhs == Fraction(5, 9) * e(4, 2)
        assert report.witness.rhs == Vector.zero(4)
        assert report.tuples_checked == 75


def _twist_lemma_inputs():
    so3_cycle = LinearMap.from_images([e(3, 2), e(3, 3), e(3, 1)])
    quaternion_cycle = LinearMap.from_images([e(4, 2), e(4, 3), e(4, 1), e(4, 4)])
    return [
        *[(bilinear_lts(fermionic_form(2), 1), fermionic_alpha(2, eta)) for eta in ETAS],
        (bilinear_lts(fermionic_form(3), 2), fermionic_alpha(3, (1, "1/2", -4))),
        (sl2(), sl2_scaling_automorphism(3)),
        (sl2(), sl2_scaling_automorphism("-1/2")),
        (cross_product_nlie(2), so3_cycle),
        (quaternion_cross_3lie(), quaternion_cycle),
        (matrix_algebra(2), matrix_conjugation(2, LinearMap(((1, 1), (0, 1))))),
        (upper_triangular2(), upper_triangular2_scaling(5)),
    ]


@pytest.mark.parametrize("index", range(10))
def test_twisting_multiplies_jacobian_by_beta_squared(index):
    base, beta = _twist_lemma_inputs()[index]
    twisted = twist(base, beta)
    square = beta.power(2)
    n = base.arity
    for seed in range(10):
        args = dense_vectors(1000 * index + seed, base.dim, 2 * n - 1)
        xs, ys = args[: n - 1], args[n - 1 :]
        assert hom_jacobian(twisted, xs, ys) == square(hom_jacobian(base, xs, ys))


class TestPathIndependence:
    @pytest.mark.parametrize("index", range(3))
    def test_ternary_routes_agree(self, index):
        A = ternary_associative_inputs()[index]
        assert lts_from_ternary_assoc(A).bracket == lts_from_jts(jts_from_ternary_assoc(A)).bracket

    @pytest.mark.parametrize("index", range(6))
    def test_binary_routes_agree(self, index):
        A = hom_associative_inputs()[index]
        direct = lts_from_hom_assoc(A)
        composed = lts_from_ternary_assoc(ternary_assoc_from_hom_assoc(A))
        assert direct.bracket == composed.bracket
        assert direct.twists == composed.twists


class TestOctonionSuite:
    def test_alternative(self, octonion_algebra):
        report = check_alternative(octonion_algebra, CheckConfig.exhaustive())
        assert report.passed and report.mode == CheckMode.EXHAUSTIVE

    def test_basic_triple_automorphism(self, octonion_algebra):
        assert is_morphism(octonion_basic_triple_automorphism(), octonion_algebra, octonion_algebra).passed

    def test_not_associative(self, octonion_algebra):
        report = check_hom_associative(octonion_algebra)
        assert not report.passed
        assert report.witness.args == (1, 2, 3)

    def test_commutator_is_maltsev(self, octonion_algebra):
        assert check_maltsev(minus_algebra(octonion_algebra)).passed

    def test_anticommutator_is_jordan(self, octonion_algebra):
        assert check_jordan(plus_algebra(octonion_algebra)).passed


@pytest.mark.slow
class TestExceptionalJordan:
    def test_unit(self):
        J = exceptional_jordan()
        unit = Vector.from_support(27, {0: 1, 1: 1, 2: 1})
        for x in dense_vectors(0, 27, 3):
            assert J.evaluate(unit, x) == x

    def test_lifted_automorphism(self):
        J = exceptional_jordan()
        assert is_morphism(lift(octonion_basic_triple_automorphism()), J, J).passed

    def test_jordan_triple_system(self):
        triple = jts_from_jordan(exceptional_jordan(), checked=False)
        report = check_hom_jordan_ts(triple, CheckConfig.randomized(samples=500, seed=0))
        assert report.passed and report.mode == CheckMode.RANDOMIZED


class TestNesting:
    def test_sl2_raised_twice_matches_direct_nesting(self):
        R = iterate_raise(sl2(), 2)
        br = sl2().evaluate
        basis = [e(3, i) for i in range(1, 4)]
        for args in itertools.product(basis, repeat=5):
            assert R.evaluate(*args) == br(br(br(br(args[0], args[1]), args[2]), args[3]), args[4])

    @pytest.mark.slow
    def test_sl2_raised_twice_is_hom_nambu_exhaustively(self):
        report = check_hom_nambu(iterate_raise(sl2(), 2), CheckConfig.exhaustive())
        assert report.passed and report.tuples_checked == 3**9

    def test_nine_ary_bracket(self):
        T = lts_from_hom_lie(affine2())
        R = iterate_raise(T, 2)
        t = T.bracket
        assert R.arity == 9
        for seed in range(5):
            x = dense_vectors(seed, 2, 9)
            expected = t([t([t([t([x[0], x[1], x[2]]), x[3], x[4]]), x[5], x[6]]), x[7], x[8]])
            assert R.evaluate(*x) == expected


class TestReductions:
    def test_quaternion_cross_lowered(self):
        assert check_hom_lie(lower_arity(quaternion_cross_3lie(), e(4, 1))).passed

    def test_affine2_trace_reduction(self):
        beta = LinearMap.scalar(2, 2)
        reduced = reduce_trace_bracket(affine2(), affine2_trace(), beta, e(2, 1))
        assert reduced.twists == (beta,)
        assert check_hom_lie(reduced).passed
