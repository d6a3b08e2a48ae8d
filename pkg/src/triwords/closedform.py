"""Closed-form class counts, evaluated three independent ways.

The shared third-order recurrence has characteristic polynomial
x^3 - 27(x^2 - x + 27) with roots

    x1 = 27,    x2 = 3*sqrt(3)*i,    x3 = -3*sqrt(3)*i,

so each of A, B, C is a fixed rational combination of x1^n, x2^n, x3^n,
and D (whose recurrence is simply x(n) = 27*x(n-1)) is (2/3)*27^n.  The
same counts can be written with an explicit oscillating term,

    A(n) = 3^(3n-2) + (1 + (-1)^n) * i^n * 3^((3n-2)/2)
    B(n) = 3^(3n-2) - ((1 + (-1)^n) + i*sqrt3*(1 - (-1)^n)) * i^n/2 * 3^((3n-2)/2)
    C(n) = 3^(3n-2) - ((1 + (-1)^n) - i*sqrt3*(1 - (-1)^n)) * i^n/2 * 3^((3n-2)/2)
    D(n) = 2 * 3^(3n-1),

and, after branching on n mod 4, with no radicals at all.  All three
routes are evaluated exactly (the first two inside Q(i, sqrt3)) and must
agree bit for bit; the radical-free route exists precisely to catch sign
slips in the ring arithmetic.

The formulas hold for n >= 1.  They are not extended to n = 0: there the
oscillating forms give 7/9, -2/9, -2/9 instead of the true 1, 0, 0, which
is also why the third-order recurrence only applies from n = 4 onward.
"""

from __future__ import annotations

from fractions import Fraction

from .counting import ClassLabel
from .ring import AlgebraicQ3i, I_SQRT3, i_power, sqrt3_power

# Roots of x^3 - 27(x^2 - x + 27); x2 and x3 are complex conjugates.
X1 = 27
X2 = AlgebraicQ3i(0, 0, 0, 3)
X3 = X2.conjugate()

_HALF = Fraction(1, 2)
_ROOT_BASIS_X1_COEFF = Fraction(1, 9)
# Coefficients of x2^n / x3^n in the root-basis forms of B and C; B takes
# (-(1+i*sqrt3)/6, -(1-i*sqrt3)/6) and C the same pair swapped.
_B_X2_COEFF = -(1 + I_SQRT3) * Fraction(1, 6)
_B_X3_COEFF = -(1 - I_SQRT3) * Fraction(1, 6)


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"closed forms hold for n >= 1, got {n}")


def closed_form(label: ClassLabel, n: int) -> int:
    """Evaluate the oscillating-term formula for C_label(n) in Q(i, sqrt3)."""
    _require_positive(n)
    if label is ClassLabel.D:
        return 2 * 3 ** (3 * n - 1)
    base = 3 ** (3 * n - 2)
    osc = i_power(n) * sqrt3_power(3 * n - 2)
    parity_plus = 1 + (-1) ** n
    parity_minus = 1 - (-1) ** n
    if label is ClassLabel.A:
        value = base + parity_plus * osc
    elif label is ClassLabel.B:
        value = base - (parity_plus + I_SQRT3 * parity_minus) * _HALF * osc
    else:
        value = base - (parity_plus - I_SQRT3 * parity_minus) * _HALF * osc
    return value.to_integer()


def root_basis(label: ClassLabel, n: int) -> int:
    """Evaluate C_label(n) as a rational combination of the root powers."""
    _require_positive(n)
    if label is ClassLabel.D:
        return (Fraction(2, 3) * AlgebraicQ3i(X1**n)).to_integer()
    x1n = AlgebraicQ3i(X1**n)
    x2n = X2**n
    x3n = X3**n
    if label is ClassLabel.A:
        value = _ROOT_BASIS_X1_COEFF * x1n + Fraction(1, 3) * (x2n + x3n)
    elif label is ClassLabel.B:
        value = _ROOT_BASIS_X1_COEFF * x1n + _B_X2_COEFF * x2n + _B_X3_COEFF * x3n
    else:
        value = _ROOT_BASIS_X1_COEFF * x1n + _B_X3_COEFF * x2n + _B_X2_COEFF * x3n
    return value.to_integer()


def case_mod4(label: ClassLabel, n: int) -> int:
    """Evaluate C_label(n) with integer arithmetic only, branching on n mod 4.

    For even n the oscillation collapses to (-1)^(n/2) * 3^((3n-2)/2); for
    odd n the half-integer power of 3 combines with the i*sqrt3 factor
    into 3^((3n-1)/2) with a sign that alternates with n mod 4.
    """
    _require_positive(n)
    if label is ClassLabel.D:
        return 2 * 3 ** (3 * n - 1)
    base = 3 ** (3 * n - 2)
    if n % 2 == 0:
        sign = -1 if (n // 2) % 2 else 1
        half = 3 ** ((3 * n - 2) // 2)
        if label is ClassLabel.A:
            return base + 2 * sign * half
        return base - sign * half  # B and C share the even branch
    if label is ClassLabel.A:
        return base
    s = 1 if n % 4 == 1 else -1
    odd = 3 ** ((3 * n - 1) // 2)
    return base + s * odd if label is ClassLabel.B else base - s * odd
