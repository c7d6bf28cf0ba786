"""Exact arithmetic in a quadratic field Q(sqrt(m)).

Elements are written over the integral basis (1, omega) of the maximal
order, where omega = sqrt(m) when m = 2, 3 mod 4 and omega = (1+sqrt(m))/2
when m = 1 mod 4. All arithmetic is integer arithmetic on the coordinate
pairs; nothing here ever touches floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .arith import is_squarefree
from .errors import UsageError


class OmegaKind(Enum):
    SQRT = "sqrt"  # omega = sqrt(m), omega^2 = m, trace 0
    HALF = "half"  # omega = (1+sqrt(m))/2, omega^2 = omega + (m-1)/4, trace 1


@dataclass(frozen=True)
class QuadField:
    """Descriptor of Q(sqrt(m)) for squarefree m not in {0, 1}."""

    m: int

    def __post_init__(self) -> None:
        if self.m in (0, 1) or not is_squarefree(self.m):
            raise UsageError(f"m must be squarefree and not 0 or 1, got {self.m}")

    @property
    def omega_kind(self) -> OmegaKind:
        return OmegaKind.HALF if self.m % 4 == 1 else OmegaKind.SQRT

    @property
    def disc_max(self) -> int:
        """Discriminant of the maximal order: m, or 4m."""
        return self.m if self.omega_kind is OmegaKind.HALF else 4 * self.m

    @property
    def is_imaginary(self) -> bool:
        return self.m < 0

    @property
    def omega_trace(self) -> int:
        return 1 if self.omega_kind is OmegaKind.HALF else 0

    @property
    def omega_sq(self) -> tuple[int, int]:
        """(r, s) with omega^2 = r + s*omega."""
        if self.omega_kind is OmegaKind.HALF:
            return (self.m - 1) // 4, 1
        return self.m, 0

    def element(self, a: int, b: int = 0) -> QuadElt:
        return QuadElt(self, a, b)

    @property
    def zero(self) -> QuadElt:
        return QuadElt(self, 0, 0)

    @property
    def one(self) -> QuadElt:
        return QuadElt(self, 1, 0)

    @property
    def omega(self) -> QuadElt:
        return QuadElt(self, 0, 1)

    def sqrt_m(self) -> QuadElt:
        """sqrt(m) itself as an element of the maximal order."""
        if self.omega_kind is OmegaKind.HALF:
            return QuadElt(self, -1, 2)
        return QuadElt(self, 0, 1)

    def __repr__(self) -> str:
        return f"QuadField({self.m})"


def _same_field(x: QuadElt, y: QuadElt) -> None:
    if x.field != y.field:
        raise UsageError(f"field mismatch: {x.field} vs {y.field}")


@dataclass(frozen=True)
class QuadElt:
    """Element a + b*omega of the maximal order of QuadField."""

    field: QuadField
    a: int
    b: int

    def __add__(self, other: QuadElt | int) -> QuadElt:
        other = self._coerce(other)
        _same_field(self, other)
        return QuadElt(self.field, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: QuadElt | int) -> QuadElt:
        other = self._coerce(other)
        _same_field(self, other)
        return QuadElt(self.field, self.a - other.a, self.b - other.b)

    def __rsub__(self, other: QuadElt | int) -> QuadElt:
        return self._coerce(other) - self

    def __neg__(self) -> QuadElt:
        return QuadElt(self.field, -self.a, -self.b)

    def __mul__(self, other: QuadElt | int) -> QuadElt:
        other = self._coerce(other)
        _same_field(self, other)
        r, s = self.field.omega_sq
        a, b, c, d = self.a, self.b, other.a, other.b
        return QuadElt(self.field, a * c + b * d * r, a * d + b * c + b * d * s)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QuadElt:
        assert k >= 0
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _coerce(self, other: QuadElt | int) -> QuadElt:
        if isinstance(other, int):
            return QuadElt(self.field, other, 0)
        return other

    def conjugate(self) -> QuadElt:
        t = self.field.omega_trace
        return QuadElt(self.field, self.a + self.b * t, -self.b)

    def trace(self) -> int:
        return 2 * self.a + self.b * self.field.omega_trace

    def norm(self) -> int:
        r, s = self.field.omega_sq
        t = self.field.omega_trace
        assert t == s
        return self.a * self.a + self.a * self.b * t - self.b * self.b * r

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def sqrt_coords(self) -> tuple[Fraction, Fraction]:
        """(p, q) with self = p + q*sqrt(m); half-integral when omega is HALF."""
        if self.field.omega_kind is OmegaKind.HALF:
            return Fraction(2 * self.a + self.b, 2), Fraction(self.b, 2)
        return Fraction(self.a), Fraction(self.b)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        w = "w"
        bpart = w if self.b == 1 else ("-" + w if self.b == -1 else f"{self.b}*{w}")
        if self.a == 0:
            return bpart
        sign = "+" if self.b > 0 else "-"
        babs = w if abs(self.b) == 1 else f"{abs(self.b)}*{w}"
        return f"{self.a}{sign}{babs}"


@dataclass(frozen=True)
class QuadRat:
    """Quotient num/den of an order element by a positive integer, in lowest terms."""

    num: QuadElt
    den: int

    def __post_init__(self) -> None:
        assert self.den != 0
        if self.den < 0:
            object.__setattr__(self, "num", -self.num)
            object.__setattr__(self, "den", -self.den)
        g = math.gcd(math.gcd(self.num.a, self.num.b), self.den)
        if g > 1:
            object.__setattr__(
                self, "num", QuadElt(self.num.field, self.num.a // g, self.num.b // g)
            )
            object.__setattr__(self, "den", self.den // g)

    @property
    def field(self) -> QuadField:
        return self.num.field

    def __add__(self, other: QuadRat) -> QuadRat:
        return QuadRat(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: QuadRat) -> QuadRat:
        return QuadRat(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> QuadRat:
        return QuadRat(-self.num, self.den)

    def __mul__(self, other: QuadRat | QuadElt | int) -> QuadRat:
        if isinstance(other, QuadRat):
            return QuadRat(self.num * other.num, self.den * other.den)
        return QuadRat(self.num * other, self.den)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return Fraction(self.num.norm(), self.den * self.den)

    def is_integral(self) -> bool:
        return self.den == 1

    def as_elt(self) -> QuadElt:
        if not self.is_integral():
            raise UsageError(f"{self} is not integral")
        return self.num

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/{self.den}"


_TERM_RE = re.compile(
    r"""^(?P<sign>[+-]?)
        (?:
            (?P<coeff>\d+(?:/\d+)?)(?:\*(?P<sym1>[ws]))?
          | (?P<sym2>[ws])
        )$""",
    re.VERBOSE,
)


def parse_element(field: QuadField, text: str) -> QuadElt:
    """Parse 'a', 'a+b*w', or 'a+b*s' (w = omega, s = sqrt(m)).

    Coefficients may be fractions such as 1/2, which is how e.g. omega is
    written in the s-basis for m = 1 mod 4; anything that does not land in
    the maximal order is rejected.
    """
    compact = text.replace(" ", "")
    if not compact:
        raise UsageError("empty element")
    pieces = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(pieces) != compact:
        raise UsageError(f"cannot parse element {text!r}")
    alpha = Fraction(0)  # coefficient of 1
    beta = Fraction(0)  # coefficient of omega
    for piece in pieces:
        mt = _TERM_RE.match(piece)
        if not mt:
            raise UsageError(f"cannot parse term {piece!r} in {text!r}")
        sign = -1 if mt.group("sign") == "-" else 1
        sym = mt.group("sym1") or mt.group("sym2")
        coeff = Fraction(mt.group("coeff")) if mt.group("coeff") else Fraction(1)
        coeff *= sign
        if sym is None:
            alpha += coeff
        elif sym == "w":
            beta += coeff
        else:  # s = sqrt(m)
            if field.omega_kind is OmegaKind.HALF:
                # sqrt(m) = 2*omega - 1
                alpha -= coeff
                beta += 2 * coeff
            else:
                beta += coeff
    if alpha.denominator != 1 or beta.denominator != 1:
        raise UsageError(f"{text!r} is not in the maximal order of {field}")
    return QuadElt(field, int(alpha), int(beta))
