import pytest

from cuspidal.classnum import (
    brute_force_pic,
    class_number_maximal,
    picard_order,
    reduced_form_count,
)
from cuspidal.quadfield import QuadField
from cuspidal.quadideal import Order, enumerate_ideal_classes, multiplier_conductor


@pytest.mark.parametrize(
    "m,h",
    [(-1, 1), (-2, 1), (-3, 1), (-5, 2), (-6, 2), (-7, 1), (-10, 2), (-11, 1),
     (-13, 2), (-14, 4), (-15, 2), (-19, 1), (-23, 3), (-30, 4),
     (2, 1), (3, 1), (5, 1), (6, 1), (7, 1), (10, 2), (13, 1), (15, 2)],
)
def test_class_numbers_from_tables(m, h):
    assert class_number_maximal(QuadField(m)).h == h


def test_reduced_forms_agree_with_ideal_enumeration():
    # two fully independent routes to the class number of an imaginary order
    for m in (-1, -2, -3, -5, -6, -7, -10, -13, -15):
        field = QuadField(m)
        for f in (1, 2, 3):
            order = Order(field, f)
            forms = reduced_form_count(order.disc)
            invertible = [
                rep
                for rep in enumerate_ideal_classes(order)
                if multiplier_conductor(rep) == f
            ]
            assert forms == len(invertible), (m, f)


def test_reduced_form_count_examples():
    assert reduced_form_count(-4) == 1
    assert reduced_form_count(-20) == 2
    assert reduced_form_count(-23) == 3
    assert reduced_form_count(-56) == 4
    assert reduced_form_count(-47) == 5


@pytest.mark.parametrize("m", [-1, -2, -3, -5, -7, 2, 3, 5, 13])
@pytest.mark.parametrize("f", [1, 2, 3, 4, 5, 6])
def test_picard_formula_matches_enumeration(m, f):
    order = Order(QuadField(m), f)
    assert picard_order(order).h == brute_force_pic(order).h


def test_picard_frozen_values():
    assert picard_order(Order(QuadField(-1), 2)).h == 1
    assert picard_order(Order(QuadField(-1), 5)).h == 2
    assert picard_order(Order(QuadField(-3), 2)).h == 1
    assert picard_order(Order(QuadField(-3), 4)).h == 2
    assert picard_order(Order(QuadField(2), 3)).h == 1
    assert picard_order(Order(QuadField(5), 6)).h == 1


def test_picard_of_maximal_order_is_class_number():
    for m in (-5, -23, 10, 15):
        field = QuadField(m)
        assert picard_order(Order(field, 1)).h == class_number_maximal(field).h


def test_methods_are_reported():
    assert picard_order(Order(QuadField(-5), 2)).method == "conductor-formula"
    assert brute_force_pic(Order(QuadField(-5), 2)).method == "brute-force"
    assert class_number_maximal(QuadField(-5)).method == "reduced-forms"
    assert class_number_maximal(QuadField(10)).method == "class-enumeration"
