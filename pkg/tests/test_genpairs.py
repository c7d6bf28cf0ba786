import math
import random

import pytest

from cuspidal.arith import euler_phi
from cuspidal.errors import UsageError
from cuspidal.genpairs import (
    DetClass,
    GenPair,
    GenVec,
    UnimodularWitness,
    det_pair,
    epsilon_subgroup,
    is_sl2_equivalent,
    orbit_count_gl2,
    orbit_count_sl2_mod_units,
    realize_det_class,
    reduce_vector,
    sl2_witness,
)
from cuspidal.quadfield import QuadElt, QuadField
from cuspidal.quadideal import (
    Order,
    QIdeal,
    enumerate_ideal_classes,
    ideal_from_generators,
    multiplier_conductor,
)
from cuspidal.units import has_norm_minus_one

FIELDS = [QuadField(m) for m in (-1, -2, -3, -5, 2, 3, 5)]


def _random_order(rng):
    return Order(rng.choice(FIELDS), rng.randint(1, 6))


def _random_ideal(rng, order):
    while True:
        gens = [
            order.from_coords(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(2)
        ]
        if any(not g.is_zero() for g in gens):
            return ideal_from_generators(order, gens)


def _base_pair(ideal):
    return GenPair(ideal, ideal.gen1, ideal.gen2)


def _elementary(order, rng, size=2):
    """A random elementary SL_size matrix over the order, small coordinates."""
    one, zero = order.field.one, order.field.zero
    rows = [[one if i == j else zero for j in range(size)] for i in range(size)]
    i, j = rng.sample(range(size), 2)
    rows[i][j] = order.from_coords(rng.randint(-3, 3), rng.randint(-3, 3))
    return UnimodularWitness(tuple(tuple(row) for row in rows))


def _random_sl(order, rng, size=2, factors=6):
    out = _elementary(order, rng, size)
    for _ in range(rng.randint(0, factors - 1)):
        nxt = _elementary(order, rng, size)
        rows = tuple(
            tuple(nxt.apply_to(row)[k] for k in range(size)) for row in out.entries
        )
        out = UnimodularWitness(rows)
    return out


def test_det_class_normalization_and_product():
    c = DetClass(7, 5)
    assert c.value == 2
    assert not c.is_one
    assert DetClass(6, 5).is_one
    assert (DetClass(2, 5) * DetClass(3, 5)).is_one
    assert DetClass(0, 1).is_one  # trivial modulus


def test_swap_has_det_class_minus_one():
    rng = random.Random(201)
    for _ in range(60):
        order = _random_order(rng)
        ideal = _random_ideal(rng, order)
        n0 = order.f // multiplier_conductor(ideal)
        pair = _base_pair(ideal)
        swapped = GenPair(ideal, ideal.gen2, ideal.gen1)
        cls = det_pair(pair, swapped)
        assert cls == DetClass(-1, n0)


def test_det_cocycle():
    rng = random.Random(202)
    for _ in range(40):
        order = _random_order(rng)
        ideal = _random_ideal(rng, order)
        p1 = _base_pair(ideal)
        m2 = _random_sl(order, rng)
        m3 = _random_sl(order, rng)
        p2 = GenPair(ideal, *m2.apply_to(p1.elements))
        p3 = GenPair(ideal, *m3.apply_to(p2.elements))
        d12 = det_pair(p1, p2)
        d23 = det_pair(p2, p3)
        d13 = det_pair(p1, p3)
        assert d12 * d23 == d13


def test_unimodular_action_is_sl2_trivial():
    rng = random.Random(203)
    for _ in range(120):
        order = _random_order(rng)
        ideal = _random_ideal(rng, order)
        pair = _base_pair(ideal)
        mat = _random_sl(order, rng)
        moved = GenPair(ideal, *mat.apply_to(pair.elements))
        assert det_pair(pair, moved, check=True).is_one
        assert is_sl2_equivalent(pair, moved)
        witness = sl2_witness(pair, moved)
        assert witness.apply_to(pair.elements) == moved.elements
        assert witness.det() == order.field.one
        for row in witness.entries:
            for entry in row:
                assert order.contains(entry)


def test_witness_on_identical_pairs_is_identity_action():
    order = Order(QuadField(-3), 4)
    ideal = QIdeal(order, 2, 0, 1)
    pair = _base_pair(ideal)
    witness = sl2_witness(pair, pair)
    assert witness.apply_to(pair.elements) == pair.elements
    assert witness.det() == order.field.one


def test_witness_refused_when_classes_differ():
    order = Order(QuadField(-1), 5)
    ideal = QIdeal(order, 5, 0, 1)
    pair = _base_pair(ideal)
    other = GenPair(ideal, pair.g2, pair.g1)  # swap: class -1 = 4 mod 5
    cls = det_pair(pair, other)
    assert cls == DetClass(4, 5)
    assert not is_sl2_equivalent(pair, other)
    with pytest.raises(UsageError):
        sl2_witness(pair, other)


def test_scaling_one_generator_scales_the_class():
    order = Order(QuadField(-1), 5)
    ideal = QIdeal(order, 5, 0, 1)
    pair = _base_pair(ideal)
    for r in (1, 2, 3, 4):
        other = GenPair(ideal, pair.g1, pair.g2 * r)
        assert det_pair(pair, other) == DetClass(r, 5)


def test_realized_classes_cover_all_residues():
    rng = random.Random(204)
    cases = [(-1, 5), (-3, 4), (-3, 6), (2, 5), (5, 4), (-5, 3)]
    for m, f in cases:
        order = Order(QuadField(m), f)
        for ideal in enumerate_ideal_classes(order):
            n0 = order.f // multiplier_conductor(ideal)
            base = _base_pair(ideal)
            for residue in range(1, n0 + 1):
                if math.gcd(residue, n0) != 1:
                    continue
                pair = realize_det_class(ideal, residue)
                assert det_pair(base, pair) == DetClass(residue, n0)


def test_distinct_classes_partition_realized_pairs():
    order = Order(QuadField(-1), 5)
    ideal = QIdeal(order, 5, 0, 1)
    pairs = {r: realize_det_class(ideal, r) for r in (1, 2, 3, 4)}
    for r1, p1 in pairs.items():
        for r2, p2 in pairs.items():
            expected = r1 == r2  # epsilon subgroup is trivial here
            assert is_sl2_equivalent(p1, p2) == expected


def test_epsilon_subgroup_matches_unit_norms():
    rng = random.Random(205)
    for _ in range(150):
        order = _random_order(rng)
        ideal = _random_ideal(rng, order)
        f_prime = multiplier_conductor(ideal)
        n0 = order.f // f_prime
        eps = epsilon_subgroup(ideal)
        if has_norm_minus_one(order.field, f_prime):
            assert eps == tuple(sorted({1 % n0, -1 % n0}))
        else:
            assert eps == (1 % n0,)


def test_orbit_counts_multiply_back_to_phi():
    rng = random.Random(206)
    for _ in range(150):
        order = _random_order(rng)
        ideal = _random_ideal(rng, order)
        n0 = order.f // multiplier_conductor(ideal)
        sl2 = orbit_count_sl2_mod_units(ideal)
        assert sl2 * len(epsilon_subgroup(ideal)) == euler_phi(n0)
        gl2 = orbit_count_gl2(ideal)
        assert euler_phi(n0) % gl2 == 0
        assert gl2 <= sl2


def test_orbit_counts_frozen_examples():
    order = Order(QuadField(-1), 5)
    ideal = QIdeal(order, 5, 0, 1)
    assert orbit_count_sl2_mod_units(ideal) == 4
    assert orbit_count_gl2(ideal) == 2
    order2 = Order(QuadField(-3), 4)
    ideal2 = QIdeal(order2, 2, 0, 1)
    assert multiplier_conductor(ideal2) == 2
    assert orbit_count_sl2_mod_units(ideal2) == 1
    # real field with a norm -1 unit: epsilon halves the count
    order3 = Order(QuadField(2), 5)
    ideal3 = QIdeal(order3, 5, 0, 1)
    assert has_norm_minus_one(QuadField(2), 1)
    assert orbit_count_sl2_mod_units(ideal3) == 2


def test_vector_reduction_round_trip():
    rng = random.Random(207)
    for _ in range(80):
        order = _random_order(rng)
        ideal = _random_ideal(rng, order)
        size = rng.choice([3, 4, 5])
        elements = list(_base_pair(ideal).elements) + [order.field.zero] * (size - 2)
        mat = _random_sl(order, rng, size=size, factors=8)
        vec = GenVec(ideal, mat.apply_to(tuple(elements)))
        pair, witness = reduce_vector(vec)
        assert pair.ideal == ideal
        reduced = witness.apply_to(vec.elements)
        assert reduced[0] == pair.g1 and reduced[1] == pair.g2
        assert all(x.is_zero() for x in reduced[2:])
        assert witness.det() == order.field.one
        for row in witness.entries:
            for entry in row:
                assert order.contains(entry)


def test_vector_reduction_single_nonzero_entry():
    order = Order(QuadField(-3), 2)
    c = order.from_coords(3, 0)
    ideal = ideal_from_generators(order, [c])
    vec = GenVec(ideal, (c, order.field.zero, order.field.zero, order.field.zero))
    pair, witness = reduce_vector(vec)
    assert witness.det() == order.field.one
    reduced = witness.apply_to(vec.elements)
    assert reduced[:2] == pair.elements
    assert all(x.is_zero() for x in reduced[2:])


def test_generating_pair_validation():
    order = Order(QuadField(-1), 2)
    ideal = QIdeal(order, 2, 0, 1)
    with pytest.raises(UsageError):
        GenPair(ideal, order.from_coords(2, 0), order.from_coords(4, 0))
    with pytest.raises(UsageError):
        GenVec(ideal, (order.from_coords(2, 0),))
