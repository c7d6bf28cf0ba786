from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cuspidal.errors import UsageError
from cuspidal.quadfield import OmegaKind, QuadElt, QuadField, QuadRat, parse_element

def _squarefree_values():
    out = []
    for m in range(-30, 31):
        if m in (0, 1):
            continue
        if all(m % (d * d) for d in range(2, 6)):
            out.append(m)
    return out


fields = st.sampled_from([QuadField(m) for m in _squarefree_values()])
coords = st.integers(-50, 50)


@given(fields, coords, coords, coords, coords, coords, coords)
def test_ring_axioms(field, a1, b1, a2, b2, a3, b3):
    x = QuadElt(field, a1, b1)
    y = QuadElt(field, a2, b2)
    z = QuadElt(field, a3, b3)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + field.zero == x
    assert x * field.one == x


@given(fields, coords, coords, coords, coords)
def test_conjugation_is_a_ring_map(field, a1, b1, a2, b2):
    x = QuadElt(field, a1, b1)
    y = QuadElt(field, a2, b2)
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert x.conjugate().conjugate() == x


@given(fields, coords, coords, coords, coords)
def test_norm_and_trace(field, a1, b1, a2, b2):
    x = QuadElt(field, a1, b1)
    y = QuadElt(field, a2, b2)
    assert (x * y).norm() == x.norm() * y.norm()
    assert (x + y).trace() == x.trace() + y.trace()
    prod = x * x.conjugate()
    assert prod == QuadElt(field, x.norm(), 0)
    assert x + x.conjugate() == QuadElt(field, x.trace(), 0)


@given(fields)
def test_omega_satisfies_its_quadratic(field):
    r, s = field.omega_sq
    w = field.omega
    assert w * w == QuadElt(field, r, s)
    if field.omega_kind is OmegaKind.HALF:
        assert field.m % 4 == 1
        assert (r, s) == ((field.m - 1) // 4, 1)
    else:
        assert (r, s) == (field.m, 0)


def test_disc_of_maximal_order():
    assert QuadField(-1).disc_max == -4
    assert QuadField(-3).disc_max == -3
    assert QuadField(5).disc_max == 5
    assert QuadField(2).disc_max == 8
    assert QuadField(-5).disc_max == -20


def test_field_constructor_rejects_bad_m():
    for bad in (0, 1, 4, 12, -9, 18):
        with pytest.raises(UsageError):
            QuadField(bad)


def test_sqrt_coords_and_imaginary_flag():
    k = QuadField(-7)
    assert k.is_imaginary
    x = QuadElt(k, 3, 2)  # 3 + 2*(1+sqrt(-7))/2 = 4 + sqrt(-7)
    assert x.sqrt_coords() == (Fraction(4), Fraction(1))
    assert not QuadField(7).is_imaginary


@given(fields, coords, coords)
def test_parse_round_trips_str(field, a, b):
    x = QuadElt(field, a, b)
    assert parse_element(field, str(x)) == x


def test_parse_accepts_sqrt_basis():
    k = QuadField(5)  # omega = (1 + sqrt 5)/2
    assert parse_element(k, "1/2+1/2*s") == k.omega
    assert parse_element(k, "2+s") == QuadElt(k, 1, 2)
    k2 = QuadField(2)
    assert parse_element(k2, "s") == k2.omega
    with pytest.raises(UsageError):
        parse_element(k, "1/3+s")  # not integral
    with pytest.raises(UsageError):
        parse_element(k, "")
    with pytest.raises(UsageError):
        parse_element(k, "2**w")


def test_rational_elements_and_powers():
    k = QuadField(3)
    x = QuadElt(k, 2, 1)
    assert x**0 == k.one
    assert x**3 == x * x * x
    assert (x - x) == k.zero
    assert (-x) + x == k.zero
    assert 1 + x == QuadElt(k, 3, 1)
    assert 2 - x == QuadElt(k, 0, -1)


def test_quadrat_integrality():
    k = QuadField(-3)
    half = QuadRat(QuadElt(k, 1, 1), 2)
    assert not half.is_integral()
    whole = QuadRat(QuadElt(k, 2, 4), 2)
    assert whole.is_integral()
    assert whole.as_elt() == QuadElt(k, 1, 2)
    prod = half * QuadElt(k, 2, 0)
    assert prod.is_integral()
