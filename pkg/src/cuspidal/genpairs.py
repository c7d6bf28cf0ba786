"""Generating pairs of an ideal: determinant classes and unimodular witnesses.

A pair (g1, g2) generating an ideal I is compared to another pair of the
same ideal through any coefficient matrix A with (g1, g2) A = (h1, h2).
The determinant of A is well defined modulo the Fitting ideal, and its
residue in Z/(f/f') is a complete invariant for the SL2(O_f) action.
When the residue is 1 an explicit unimodular witness matrix is produced
and verified entry by entry. Longer generating vectors are compressed to
length two by an explicit SL_n(Z) witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import euler_phi, xgcd
from .errors import InternalCheckError, UsageError
from .quadfield import QuadElt
from .quadideal import (
    Order,
    QIdeal,
    _colon_lattice,
    fitt1,
    ideal_from_generators,
    multiplier_conductor,
)
from .units import fundamental_unit, has_norm_minus_one
from .zlinalg import det_int, identity, kernel_int, mat_mul, solve_int


@dataclass(frozen=True)
class GenPair:
    """An ordered pair of elements that generates the given ideal."""

    ideal: QIdeal
    g1: QuadElt
    g2: QuadElt

    def __post_init__(self) -> None:
        order = self.ideal.order
        generated = ideal_from_generators(order, [self.g1, self.g2])
        if generated != self.ideal:
            raise UsageError(f"({self.g1}, {self.g2}) does not generate {self.ideal}")

    @property
    def elements(self) -> tuple[QuadElt, QuadElt]:
        return (self.g1, self.g2)


@dataclass(frozen=True)
class GenVec:
    """A generating vector of arbitrary length n >= 2."""

    ideal: QIdeal
    elements: tuple[QuadElt, ...]

    def __post_init__(self) -> None:
        if len(self.elements) < 2:
            raise UsageError("a generating vector needs at least two entries")
        order = self.ideal.order
        generated = ideal_from_generators(order, list(self.elements))
        if generated != self.ideal:
            raise UsageError("the vector does not generate the stated ideal")


@dataclass(frozen=True)
class DetClass:
    """A residue in Z/modulus, the determinant class of a pair of pairs."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        assert self.modulus >= 1
        object.__setattr__(self, "value", self.value % self.modulus)

    @property
    def is_one(self) -> bool:
        return self.value == 1 % self.modulus

    def __mul__(self, other: "DetClass") -> "DetClass":
        assert self.modulus == other.modulus
        return DetClass(self.value * other.value, self.modulus)


@dataclass(frozen=True)
class UnimodularWitness:
    """A square matrix over the order, stored row-major."""

    entries: tuple[tuple[QuadElt, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        assert all(len(row) == n for row in self.entries)

    @property
    def size(self) -> int:
        return len(self.entries)

    def det(self) -> QuadElt:
        n = self.size
        field = self.entries[0][0].field
        if all(e.b == 0 for row in self.entries for e in row):
            return field.element(det_int([[e.a for e in row] for row in self.entries]))
        return self._det_laplace(tuple(range(n)), tuple(range(n)))

    def _det_laplace(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> QuadElt:
        field = self.entries[0][0].field
        if len(rows) == 1:
            return self.entries[rows[0]][cols[0]]
        total = field.zero
        r = rows[0]
        for k, c in enumerate(cols):
            sub = self._det_laplace(rows[1:], cols[:k] + cols[k + 1 :])
            term = self.entries[r][c] * sub
            total = total + term if k % 2 == 0 else total - term
        return total

    def apply_to(self, elements: tuple[QuadElt, ...]) -> tuple[QuadElt, ...]:
        """Row vector times matrix."""
        n = self.size
        assert len(elements) == n
        field = elements[0].field
        out = []
        for j in range(n):
            acc = field.zero
            for i in range(n):
                acc = acc + elements[i] * self.entries[i][j]
            out.append(acc)
        return tuple(out)


def _identity_witness(order: Order, n: int) -> UnimodularWitness:
    one, zero = order.field.one, order.field.zero
    return UnimodularWitness(
        tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
    )


def _int_witness(order: Order, rows: list[list[int]]) -> UnimodularWitness:
    return UnimodularWitness(
        tuple(tuple(order.field.element(x) for x in row) for row in rows)
    )


def _coeff_columns(pair: GenPair) -> list[list[int]]:
    """Coordinate columns of g1, gen*g1, g2, gen*g2 over (1, omega)."""
    order = pair.ideal.order
    cols = []
    for g in pair.elements:
        for mult in (order.field.one, order.gen):
            prod = g * mult
            cols.append([prod.a, prod.b])
    rows = [[cols[j][i] for j in range(4)] for i in range(2)]
    return rows


def _solve_in_pair(pair: GenPair, target: QuadElt) -> tuple[QuadElt, QuadElt]:
    """Coefficients (x, y) in the order with g1*x + g2*y = target."""
    order = pair.ideal.order
    rows = _coeff_columns(pair)
    sol = solve_int(rows, [target.a, target.b])
    if sol is None:
        raise InternalCheckError(f"{target} is not reachable from {pair.elements}")
    x = order.from_coords(sol[0], sol[1])
    y = order.from_coords(sol[2], sol[3])
    assert pair.g1 * x + pair.g2 * y == target
    return x, y


def _coefficient_matrix(pair: GenPair, other: GenPair) -> list[list[QuadElt]]:
    """A with pair.elements @ A = other.elements, entries in the order."""
    col1 = _solve_in_pair(pair, other.g1)
    col2 = _solve_in_pair(pair, other.g2)
    return [[col1[0], col2[0]], [col1[1], col2[1]]]


def _det2(mat: list[list[QuadElt]]) -> QuadElt:
    return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]


def det_pair(pair: GenPair, other: GenPair, check: bool = False) -> DetClass:
    """Determinant class of the transition from pair to other.

    Both pairs must generate the same ideal. The residue lives in
    Z/(f/f') via the first coordinate over (1, f*omega), and is a unit.
    """
    if pair.ideal != other.ideal:
        raise UsageError("pairs generate different ideals, no determinant class")
    order = pair.ideal.order
    f_prime = multiplier_conductor(pair.ideal)
    n0 = order.f // f_prime
    mat = _coefficient_matrix(pair, other)
    det = _det2(mat)
    u, v = order.coords(det)
    cls = DetClass(u, n0)
    if math.gcd(cls.value, n0) != 1:
        raise InternalCheckError(f"determinant residue {cls.value} mod {n0} not a unit")
    if check:
        rows = _coeff_columns(pair)
        for kern in kernel_int(rows):
            dx = order.from_coords(kern[0], kern[1])
            dy = order.from_coords(kern[2], kern[3])
            assert pair.g1 * dx + pair.g2 * dy == order.field.zero
            alt = [[mat[0][0] + dx, mat[0][1]], [mat[1][0] + dy, mat[1][1]]]
            u_alt, _ = order.coords(_det2(alt))
            assert u_alt % n0 == cls.value, "determinant class depends on the lift"
    return cls


def is_sl2_equivalent(pair: GenPair, other: GenPair) -> bool:
    """Whether some SL2 matrix over the order maps pair to other."""
    return det_pair(pair, other).is_one


def _divide_exact(elt: QuadElt, c: int) -> QuadElt:
    if elt.a % c or elt.b % c:
        raise InternalCheckError(f"{elt} is not divisible by {c}")
    return QuadElt(elt.field, elt.a // c, elt.b // c)


def sl2_witness(pair: GenPair, other: GenPair) -> UnimodularWitness:
    """Explicit B in SL2(O_f) with pair.elements @ B = other.elements.

    Exists exactly when the determinant class is 1; raises UsageError
    otherwise. The result is verified before being returned.
    """
    if pair.ideal != other.ideal:
        raise UsageError("pairs generate different ideals")
    order = pair.ideal.order
    field = order.field
    if pair.elements == other.elements:
        return _identity_witness(order, 2)
    cls = det_pair(pair, other)
    if not cls.is_one:
        raise UsageError(f"pairs are not SL2-equivalent, class {cls.value} mod {cls.modulus}")
    mat = _coefficient_matrix(pair, other)
    det = _det2(mat)
    t = field.one - det
    fitting = fitt1(pair.ideal)
    assert fitting.contains(t)

    conj = pair.ideal.conjugate()
    c = pair.ideal.norm()
    scaled_t = t * c
    basis = (conj.gen1, conj.gen2)
    cols = []
    for g in basis:
        prod = g * other.g2
        cols.append([prod.a, prod.b])
    for g in basis:
        prod = g * other.g1
        cols.append([-prod.a, -prod.b])
    rows = [[cols[j][i] for j in range(4)] for i in range(2)]
    sol = solve_int(rows, [scaled_t.a, scaled_t.b])
    if sol is None:
        raise InternalCheckError("correction equation has no solution over sigma(I)^2")
    rho = basis[0] * sol[0] + basis[1] * sol[1]
    sigma = basis[0] * sol[2] + basis[1] * sol[3]
    assert rho * other.g2 - sigma * other.g1 == scaled_t

    a, b = pair.elements
    n11 = _divide_exact(rho * b, c)
    n12 = _divide_exact(sigma * b, c)
    n21 = _divide_exact(rho * a, c) * (-1)
    n22 = _divide_exact(sigma * a, c) * (-1)
    entries = (
        (mat[0][0] + n11, mat[0][1] + n12),
        (mat[1][0] + n21, mat[1][1] + n22),
    )
    for row in entries:
        for e in row:
            if not order.contains(e):
                raise InternalCheckError(f"witness entry {e} escapes the order")
    witness = UnimodularWitness(entries)
    if witness.det() != field.one:
        raise InternalCheckError("witness determinant is not 1")
    if witness.apply_to(pair.elements) != other.elements:
        raise InternalCheckError("witness does not map the first pair to the second")
    return witness


def epsilon_subgroup(ideal: QIdeal) -> tuple[int, ...]:
    """Residues mod f/f' reachable as determinant classes of unit rescalings."""
    order = ideal.order
    f_prime = multiplier_conductor(ideal)
    n0 = order.f // f_prime
    residues = {1 % n0}
    if has_norm_minus_one(order.field, f_prime):
        residues.add(-1 % n0)
    return tuple(sorted(residues))


def orbit_count_sl2_mod_units(ideal: QIdeal) -> int:
    """Number of SL2 orbits on generating pairs, up to unit rescaling."""
    order = ideal.order
    f_prime = multiplier_conductor(ideal)
    n0 = order.f // f_prime
    halve = has_norm_minus_one(order.field, f_prime) and n0 > 2
    count = euler_phi(n0) // (2 if halve else 1)
    assert count * len(epsilon_subgroup(ideal)) == euler_phi(n0)
    return count


def _unit_residues(order: Order, n0: int) -> set[int]:
    """Image of the unit group of the order in (Z/n0)^*."""
    gens = {(-1) % n0}
    info = fundamental_unit(order.field, order.f)
    if info.fundamental is not None:
        u, _ = order.coords(info.fundamental)
        gens.add(u % n0)
    if order.f == 1:
        gens.add(order.coords(info.torsion_gen)[0] % n0)
    subgroup = {1 % n0}
    frontier = set(subgroup)
    while frontier:
        nxt = set()
        for x in frontier:
            for g in gens:
                y = x * g % n0
                if y not in subgroup:
                    subgroup.add(y)
                    nxt.add(y)
        frontier = nxt
    for x in subgroup:
        assert math.gcd(x, n0) == 1
    return subgroup


def orbit_count_gl2(ideal: QIdeal) -> int:
    """Number of GL2 orbits on generating pairs of the ideal."""
    order = ideal.order
    f_prime = multiplier_conductor(ideal)
    n0 = order.f // f_prime
    image = _unit_residues(order, n0)
    total = euler_phi(n0)
    assert total % len(image) == 0
    return total // len(image)


def _gcd_column_reduce(xs: list[int], target: int) -> tuple[list[int], list[list[int]]]:
    """SL_n(Z) gamma with xs @ gamma supported at index target only.

    Returns the new coordinate list and gamma as a full integer matrix.
    The entry left at the target index is the gcd of the inputs, with
    sign inherited from the construction.
    """
    n = len(xs)
    gamma = identity(n)
    cur = list(xs)
    for j in range(n):
        if j == target or cur[j] == 0:
            continue
        g, s, t = xgcd(cur[target], cur[j])
        p, q = cur[target] // g, cur[j] // g
        for row in gamma:
            ct, cj = row[target], row[j]
            row[target] = s * ct + t * cj
            row[j] = -q * ct + p * cj
        ct, cj = cur[target], cur[j]
        cur[target] = s * ct + t * cj
        cur[j] = -q * ct + p * cj
        assert cur[j] == 0
    return cur, gamma


def reduce_vector(vec: GenVec) -> tuple[GenPair, UnimodularWitness]:
    """Compress a generating vector of length n > 2 to a pair.

    Returns the pair together with an SL_n(Z) witness sigma satisfying
    vec.elements @ sigma = (h1, h2, 0, ..., 0) exactly.
    """
    n = len(vec.elements)
    if n <= 2:
        raise UsageError("reduction needs a vector of length at least 3")
    order = vec.ideal.order
    xs = [order.coords(v)[0] for v in vec.elements]
    ys = [order.coords(v)[1] for v in vec.elements]

    ys1, gamma1 = _gcd_column_reduce(ys, n - 1)
    xs1 = [sum(xs[i] * gamma1[i][j] for i in range(n)) for j in range(n)]
    assert all(y == 0 for y in ys1[: n - 1])

    head, delta_small = _gcd_column_reduce(xs1[: n - 1], 0)
    delta = identity(n)
    for i in range(n - 1):
        for j in range(n - 1):
            delta[i][j] = delta_small[i][j]
    assert all(h == 0 for h in head[1:])

    perm = identity(n)
    perm[1][1], perm[1][n - 1] = 0, -1
    perm[n - 1][n - 1], perm[n - 1][1] = 0, 1

    sigma = mat_mul(mat_mul(gamma1, delta), perm)
    if det_int(sigma) != 1:
        raise InternalCheckError("reduction witness is not in SL_n(Z)")
    witness = _int_witness(order, sigma)
    image = witness.apply_to(vec.elements)
    zero = order.field.zero
    if any(e != zero for e in image[2:]):
        raise InternalCheckError("reduction left nonzero trailing entries")
    pair = GenPair(vec.ideal, image[0], image[1])
    return pair, witness


def realize_det_class(ideal: QIdeal, residue: int) -> GenPair:
    """A generating pair whose class against the standard pair is residue.

    The standard pair is (gen1, gen2); the result is (gen1, r*gen2) with
    r chosen congruent to residue mod f/f' and coprime to the index of
    the colon ideal (gen1 : gen2), which forces generation.
    """
    order = ideal.order
    f_prime = multiplier_conductor(ideal)
    n0 = order.f // f_prime
    if math.gcd(residue, n0) != 1:
        raise UsageError(f"residue {residue} is not a unit mod {n0}")
    base = GenPair(ideal, ideal.gen1, ideal.gen2)
    colon = _colon_lattice(
        order,
        ideal_from_generators(order, [ideal.gen1]),
        [ideal.gen2],
    )
    index = colon.norm()
    r = residue if n0 > 1 else 1
    steps = 0
    while math.gcd(r, index) != 1:
        r += n0
        steps += 1
        if steps > index + 2:
            raise InternalCheckError("no coprime representative found")
    pair = GenPair(ideal, ideal.gen1, ideal.gen2 * r)
    cls = det_pair(base, pair)
    if cls.value != residue % n0:
        raise InternalCheckError(
            f"constructed pair realizes {cls.value}, wanted {residue % n0}"
        )
    return pair
