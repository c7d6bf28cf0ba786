"""Standard bases, Fitting ideals and multiplier rings of quadratic ideals.

Every nonzero ideal of O_f = Z + Z*f*omega has a unique presentation
Z*a + Z*(d + e*f*omega). From it the script reads off the norm, the
conductor f' of the ring of multipliers, the Fitting ideal I*I^(-1) and
the inverse, and verifies the lattice identities on the spot.
"""

from cuspidal import (
    Order,
    QIdeal,
    QuadField,
    fitt1,
    ideal_from_generators,
    ideal_inverse,
    ideal_mul,
    multiplier_conductor,
    parse_element,
)


def show(m: int, f: int, texts: list[str]) -> None:
    order = Order(QuadField(m), f)
    gens = [parse_element(order.field, t) for t in texts]
    ideal = ideal_from_generators(order, gens)
    print(f"I = <{', '.join(texts)}> in {order}")
    print(f"  standard basis: Z*{ideal.gen1} + Z*({ideal.gen2})")
    print(f"  norm {ideal.norm()}")
    f_prime = multiplier_conductor(ideal)
    print(f"  multiplier ring has conductor f' = {f_prime}  (n0 = {f // f_prime})")
    fitting = fitt1(ideal)
    print(f"  Fitt_1(I) = Z*{fitting.gen1} + Z*({fitting.gen2}), norm {fitting.norm()}")
    assert fitting == QIdeal(order, f // f_prime, 0, 1)
    inv = ideal_inverse(ideal)
    assert ideal_mul(ideal, inv.num) == fitting.scaled(inv.den)
    print(f"  I^(-1) = ({inv.num.gen1}, {inv.num.gen2}) / {inv.den}")
    verdict = "invertible" if f_prime == f else f"invertible only over O_{f_prime}"
    print(f"  I is {verdict}")
    print()


if __name__ == "__main__":
    show(-3, 2, ["2", "2*w"])        # the classical non-invertible example
    show(-3, 2, ["1+2*w"])           # principal, hence invertible
    show(-1, 5, ["5", "5*w"])        # conductor-type ideal, f' = 1
    show(5, 6, ["3", "6*w"])
    show(-5, 1, ["2", "1+w"])        # non-principal but invertible (maximal order)
