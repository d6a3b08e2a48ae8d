"""Exact arithmetic in the ring Q(i, sqrt(3)).

Elements are stored in the basis (1, sqrt3, i, i*sqrt3) with rational
coordinates, so every element has exactly one representation and equality
is coordinate equality.  The multiplication table is

    sqrt3 * sqrt3 = 3          i * i = -1
    sqrt3 * i     = i*sqrt3    (i*sqrt3) * (i*sqrt3) = -3
    sqrt3 * (i*sqrt3) = 3*i    i * (i*sqrt3) = -sqrt3

This is just enough structure to evaluate n-th powers of the recurrence
roots 27 and +-3*sqrt(3)*i and the rational coefficients that multiply
them, with no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class NotRationalInteger(ValueError):
    """Raised when an element expected to be a plain integer is not one."""


RationalLike = int | Fraction


def _frac(value: RationalLike) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True, slots=True)
class AlgebraicQ3i:
    """An element a + b*sqrt3 + c*i + d*i*sqrt3 with Fraction coordinates."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        # Fractions normalise themselves (reduced, positive denominator);
        # coerce ints so callers can write AlgebraicQ3i(1, 0, 0, 3).
        for name in ("a", "b", "c", "d"):
            v = getattr(self, name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, name, Fraction(v))

    def __add__(self, other: AlgebraicQ3i | RationalLike) -> AlgebraicQ3i:
        o = _promote(other)
        if o is None:
            return NotImplemented
        return AlgebraicQ3i(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self) -> AlgebraicQ3i:
        return AlgebraicQ3i(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other: AlgebraicQ3i | RationalLike) -> AlgebraicQ3i:
        o = _promote(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: AlgebraicQ3i | RationalLike) -> AlgebraicQ3i:
        o = _promote(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: AlgebraicQ3i | RationalLike) -> AlgebraicQ3i:
        o = _promote(other)
        if o is None:
            return NotImplemented
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return AlgebraicQ3i(
            a1 * a2 + 3 * b1 * b2 - c1 * c2 - 3 * d1 * d2,
            a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
            a1 * c2 + c1 * a2 + 3 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> AlgebraicQ3i:
        """Binary exponentiation; exponent must be a nonnegative integer."""
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        result = ONE
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> AlgebraicQ3i:
        """Complex conjugate: i -> -i, i.e. (a, b, c, d) -> (a, b, -c, -d)."""
        return AlgebraicQ3i(self.a, self.b, -self.c, -self.d)

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def to_integer(self) -> int:
        """Convert to a plain int, or raise NotRationalInteger.

        Succeeds only when the sqrt3, i and i*sqrt3 coordinates all vanish
        and the remaining rational has denominator 1.  A failure here means
        some formula upstream was transcribed wrongly, so the error is loud
        on purpose.
        """
        if self.b or self.c or self.d:
            raise NotRationalInteger(f"{self} has irrational or imaginary parts")
        if self.a.denominator != 1:
            raise NotRationalInteger(f"{self} is not an integer")
        return self.a.numerator

    def __str__(self) -> str:
        parts = []
        for coord, symbol in ((self.a, ""), (self.b, "*sqrt3"), (self.c, "*i"), (self.d, "*i*sqrt3")):
            if coord:
                parts.append(f"{coord}{symbol}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _promote(value: AlgebraicQ3i | RationalLike) -> AlgebraicQ3i | None:
    if isinstance(value, AlgebraicQ3i):
        return value
    if isinstance(value, (int, Fraction)):
        return AlgebraicQ3i(_frac(value))
    return None


ZERO = AlgebraicQ3i()
ONE = AlgebraicQ3i(1)
SQRT3 = AlgebraicQ3i(0, 1)
I = AlgebraicQ3i(0, 0, 1)
I_SQRT3 = AlgebraicQ3i(0, 0, 0, 1)


def i_power(n: int) -> AlgebraicQ3i:
    """i**n for any integer n, via the period-4 cycle (1, i, -1, -i)."""
    return (ONE, I, -ONE, -I)[n % 4]


def sqrt3_power(e: int) -> AlgebraicQ3i:
    """3**(e/2) as a ring element: an integer for even e, 3**((e-1)/2)*sqrt3 for odd e."""
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    if e % 2 == 0:
        return AlgebraicQ3i(3 ** (e // 2))
    return AlgebraicQ3i(0, 3 ** ((e - 1) // 2))
