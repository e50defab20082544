"""Generated-input checks for the algebraic building blocks."""

from hypothesis import given, settings
from hypothesis import strategies as st

from roofcalc import (
    LPolynomial,
    Weight,
    build_root_system,
    igr_class,
    igr_point_count,
    make_weight,
    reflect,
)

coeff_lists = st.lists(st.integers(min_value=-30, max_value=30), max_size=8)
coords3 = st.tuples(
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=-20, max_value=20),
)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_lpolynomial_is_a_commutative_ring(a, b, c):
    pa, pb, pc = LPolynomial(a), LPolynomial(b), LPolynomial(c)
    assert pa + pb == pb + pa
    assert pa * pb == pb * pa
    assert (pa * pb) * pc == pa * (pb * pc)
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert pa - pa == LPolynomial.zero()


@given(coeff_lists, coeff_lists, st.integers(min_value=-9, max_value=9))
def test_lpolynomial_evaluation_is_a_homomorphism(a, b, q):
    pa, pb = LPolynomial(a), LPolynomial(b)
    assert (pa + pb)(q) == pa(q) + pb(q)
    assert (pa * pb)(q) == pa(q) * pb(q)


@given(coeff_lists, coeff_lists)
def test_exact_division_inverts_multiplication(a, b):
    pa, pb = LPolynomial(a), LPolynomial(b)
    if pb.is_zero:
        return
    assert (pa * pb).exact_div(pb) == pa


@given(coords3, coords3, st.integers(min_value=-10, max_value=10))
def test_weight_arithmetic_laws(a, b, k):
    wa, wb = Weight(a), Weight(b)
    assert (wa + wb) - wb == wa
    assert wa + wb == wb + wa
    assert k * (wa + wb) == k * wa + k * wb
    assert -(-wa) == wa


@given(coords3, st.integers(min_value=1, max_value=3))
def test_reflection_is_an_involution_under_fuzzing(coords, node):
    c3 = build_root_system("C", 3)
    chi = make_weight(c3, coords)
    assert reflect(c3, reflect(c3, chi, node), node) == chi


@settings(max_examples=40)
@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=5),
    st.sampled_from((2, 3, 4, 5, 7, 8, 9, 11, 13)),
)
def test_igr_class_evaluates_to_point_count(d, n, q):
    if d > n:
        return
    assert igr_class(d, n)(q) == igr_point_count(d, n, q)
