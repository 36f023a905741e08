import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tdpoly.errors import InternalConsistencyError
from tdpoly.polynomial import IntPoly, coeffwise_le, ensure_valid_tdp, poly_arith

X2 = IntPoly.monomial(2)
P4 = IntPoly((0, 0, 1, 2, 1))  # x^4 + 2x^3 + x^2


def test_canonical_trailing_zeros_trimmed():
    assert IntPoly((0, 0, 1, 0, 0)).coeffs == (0, 0, 1)
    assert IntPoly((0,)).coeffs == ()
    assert IntPoly().coeffs == ()


def test_add_monomials():
    assert X2 + X2 == IntPoly((0, 0, 2))


def test_mul_shifts():
    assert IntPoly((0, 0, 2, 1)) * X2 == IntPoly((0, 0, 0, 0, 2, 1))


def test_sub_to_zero():
    p = IntPoly((0, 0, 2, 1))
    assert p - p == IntPoly.zero()
    assert not (p - p)


def test_poly_arith_dispatch():
    p, q = IntPoly((1, 2)), IntPoly((0, 1))
    assert poly_arith("add", p, q) == p + q
    assert poly_arith("sub", p, q) == p - q
    assert poly_arith("mul", p, q) == p * q
    with pytest.raises(ValueError):
        poly_arith("div", p, q)


def test_evaluate_paper_path_polynomial():
    assert P4.evaluate(1) == 4
    assert P4.evaluate(-1) == 0


def test_evaluate_zero_polynomial_anywhere():
    assert IntPoly.zero().evaluate(3) == 0
    assert IntPoly.zero().evaluate(-1.5) == 0


def test_evaluate_is_exact_for_ints():
    big = IntPoly((0, 0, 10**30, 7))
    assert big.evaluate(10**6) == 10**42 + 7 * 10**18


def test_evaluate_rejects_bool():
    with pytest.raises(TypeError):
        P4.evaluate(True)


def test_coeff_extraction():
    assert P4.coeff(3) == 2
    assert IntPoly((0, 0, 0, 0, 9, 6, 1)).coeff(4) == 9
    assert IntPoly((0, 0, 4, 4, 1)).coeff(3) == 4
    assert X2.coeff(5) == 0
    assert IntPoly((0, 0, 0, 5, 5, 1)).coeff(3) == 5


def test_min_degree():
    assert IntPoly((0, 0, 0, 0, 9, 6, 1)).min_degree() == 4
    assert X2.min_degree() == 2
    assert IntPoly.zero().min_degree() is None
    assert IntPoly.zero().degree() is None


def test_shift():
    assert X2.shift(3) == IntPoly.monomial(5)
    assert IntPoly((1, 1)).shift(0) == IntPoly((1, 1))


def test_str_rendering():
    assert str(P4) == "x^4 + 2x^3 + x^2"
    assert str(IntPoly.zero()) == "0"
    assert str(IntPoly.one()) == "1"


def test_coeff_strings_round_trip():
    strings = P4.to_coeff_strings()
    assert strings == ["0", "0", "1", "2", "1"]
    assert IntPoly.from_coeff_strings(strings) == P4


def test_coeffwise_le():
    assert coeffwise_le(P4, IntPoly((0, 0, 3, 3, 1)))
    assert not coeffwise_le(IntPoly((0, 0, 3, 3, 1)), P4)
    assert coeffwise_le(IntPoly.zero(), P4)
    assert coeffwise_le(P4, P4)
    # comparison must account for differing lengths in both directions
    assert coeffwise_le(X2, IntPoly((0, 0, 1, 1)))
    assert not coeffwise_le(IntPoly((0, 0, 1, 1)), X2)


def test_ensure_valid_tdp_accepts_real_values():
    assert ensure_valid_tdp(P4, 4) is P4
    assert ensure_valid_tdp(IntPoly.zero(), 1) == IntPoly.zero()


def test_ensure_valid_tdp_rejects_bad_shapes():
    with pytest.raises(InternalConsistencyError):
        ensure_valid_tdp(IntPoly((1,)))  # nonzero constant term
    with pytest.raises(InternalConsistencyError):
        ensure_valid_tdp(IntPoly((0, 1)))  # a set of size 1 cannot totally dominate
    with pytest.raises(InternalConsistencyError):
        ensure_valid_tdp(IntPoly((0, 0, -1)))  # counts cannot be negative
    with pytest.raises(InternalConsistencyError):
        ensure_valid_tdp(P4, 3)  # degree above the graph order


small_ints = st.integers(min_value=-50, max_value=50)
polys = st.lists(small_ints, max_size=8).map(IntPoly)


@settings(deadline=None, max_examples=150)
@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + IntPoly.zero() == p
    assert p * IntPoly.one() == p
    assert p - p == IntPoly.zero()


@settings(deadline=None, max_examples=150)
@given(polys, polys, st.integers(min_value=-9, max_value=9))
def test_evaluate_is_ring_homomorphism(p, q, point):
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)


@settings(deadline=None, max_examples=100)
@given(polys)
def test_coeff_strings_round_trip_property(p):
    assert IntPoly.from_coeff_strings(p.to_coeff_strings()) == p
