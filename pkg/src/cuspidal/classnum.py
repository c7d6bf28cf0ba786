"""Class numbers: reduced-form counts, the conductor formula, brute force.

Imaginary maximal orders are counted through reduced primitive forms; real
ones through the ideal-class enumeration. Non-maximal Picard groups come
from the conductor formula with every unit count obtained by exhaustive
enumeration in the finite quotient rings, and can be cross-checked against
the brute-force enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalCheckError
from .quadfield import QuadField
from .quadideal import Order, enumerate_ideal_classes, multiplier_conductor
from .units import unit_index


@dataclass(frozen=True)
class PicSize:
    """Picard group size plus the route that produced it."""

    order: Order
    h: int
    method: str


def reduced_form_count(disc: int) -> int:
    """Number of reduced primitive forms (A, B, C) of discriminant disc < 0.

    Reduction: |B| <= A <= C with B >= 0 whenever |B| = A or A = C.
    """
    assert disc < 0 and disc % 4 in (0, 1)
    count = 0
    b = disc % 2
    while b * b <= -disc // 3:
        m4 = (b * b - disc) // 4
        a = max(b, 1)
        while a * a <= m4:
            if a and m4 % a == 0:
                c = m4 // a
                if math.gcd(math.gcd(a, b), c) == 1:
                    count += 1 if (b == 0 or a == b or a == c) else 2
            a += 1
        b += 2
    return count


def class_number_maximal(field: QuadField, bound: int | None = None) -> PicSize:
    """Class number of the maximal order."""
    order = Order(field, 1)
    if field.is_imaginary:
        return PicSize(order, reduced_form_count(field.disc_max), "reduced-forms")
    reps = enumerate_ideal_classes(order, bound=bound)
    return PicSize(order, len(reps), "class-enumeration")


def _quotient_unit_count_maximal(field: QuadField, f: int) -> int:
    """Units of O/fO, counted by exhausting residues and inverses."""
    if f == 1:
        return 1
    residues = [(x, y) for x in range(f) for y in range(f)]
    r, s = field.omega_sq
    count = 0
    for x, y in residues:
        for u, v in residues:
            prod_a = (x * u + y * v * r) % f
            prod_b = (x * v + y * u + y * v * s) % f
            if prod_a == 1 and prod_b == 0:
                count += 1
                break
    return count


def _quotient_unit_count_suborder(f: int) -> int:
    """Units of O_f/fO; the quotient is Z/f, counted exhaustively anyway."""
    if f == 1:
        return 1
    return sum(1 for x in range(f) if any(x * u % f == 1 for u in range(f)))


@lru_cache(maxsize=None)
def picard_order(order: Order, bound: int | None = None) -> PicSize:
    """|Pic(O_f)| by the conductor formula over the maximal class number."""
    field, f = order.field, order.f
    h_max = class_number_maximal(field, bound=bound).h
    u_top = _quotient_unit_count_maximal(field, f)
    u_sub = _quotient_unit_count_suborder(f)
    k = unit_index(field, f, 1)
    num = h_max * u_top
    den = k * u_sub
    if num % den:
        raise InternalCheckError(
            f"conductor formula is not integral for {order}: {num}/{den}"
        )
    return PicSize(order, num // den, "conductor-formula")


def brute_force_pic(order: Order, bound: int | None = None) -> PicSize:
    """|Pic(O_f)| by enumerating ideal classes and keeping the invertible ones."""
    reps = enumerate_ideal_classes(order, bound=bound)
    invertible = [r for r in reps if multiplier_conductor(r) == order.f]
    return PicSize(order, len(invertible), "brute-force")
