"""Cusp counts for the modular curve attached to a quadratic order.

Two routes that must agree. The divisor formula sums, over divisors f'
of the conductor f, the term phi(f/f') * |Pic(O_f')|, halved whenever
O_f' has a unit of norm -1 and f/f' exceeds 2. The direct route skips
class-number formulas entirely: it enumerates every ideal class of O_f,
computes each class's multiplier conductor and orbit count on generating
pairs, and adds them up.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import divisors, euler_phi
from .classnum import PicSize, picard_order
from .genpairs import orbit_count_sl2_mod_units
from .quadideal import Order, enumerate_ideal_classes
from .units import has_norm_minus_one


@dataclass(frozen=True)
class CuspTerm:
    """One divisor's share of the cusp count."""

    f_prime: int
    n0: int
    phi: int
    halved: bool
    pic: PicSize

    @property
    def contribution(self) -> int:
        return (self.phi // 2 if self.halved else self.phi) * self.pic.h


@dataclass(frozen=True)
class CuspBreakdown:
    """Cusp count of an order together with its per-divisor terms."""

    order: Order
    terms: tuple[CuspTerm, ...]

    @property
    def total(self) -> int:
        return sum(t.contribution for t in self.terms)


def cusp_count(order: Order, bound: int | None = None) -> CuspBreakdown:
    """Cusp count by the divisor formula, with the full breakdown."""
    field = order.field
    terms = []
    for f_prime in divisors(order.f):
        n0 = order.f // f_prime
        phi = euler_phi(n0)
        halved = has_norm_minus_one(field, f_prime) and n0 > 2
        pic = picard_order(Order(field, f_prime), bound=bound)
        terms.append(CuspTerm(f_prime, n0, phi, halved, pic))
    return CuspBreakdown(order, tuple(terms))


def cusp_count_direct(order: Order, bound: int | None = None) -> int:
    """Cusp count with no class-number formula: enumerate the ideal
    classes and add each class's orbit count on generating pairs."""
    reps = enumerate_ideal_classes(order, bound=bound)
    return sum(orbit_count_sl2_mod_units(rep) for rep in reps)
