"""Rational generating functions for the class counts.

Each class count sequence has a rational generating function
g(x) = sum_n C(n) x^n:

    g_A(x) = (162x^3 - 9x^2 + 24x - 1) / ((27x - 1)(27x^2 + 1))
    g_B(x) = 6x(27x^2 + 12x - 1)      / ((27x - 1)(27x^2 + 1))
    g_C(x) = 18x^2(5 - 9x)            / ((1 - 27x)(1 + 27x^2))
    g_D(x) = 18x                      / (1 - 27x)

Polynomials are stored as ascending coefficient tuples with no trailing
zeros.  Both factorings of the shared denominator expand, after sign
normalisation, to 1 - 27x + 27x^2 - 729x^3, whose reversed coefficients
are exactly the shared third-order recurrence; coefficient extraction
from these functions is therefore a sixth independent compute engine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import ClassLabel

#: Polynomial with integer coefficients, ascending, index = degree.
IntPolynomial = tuple[int, ...]


class NonUnitConstantTerm(ValueError):
    """Coefficient extraction needs a denominator constant term of +-1 to stay integral."""


def poly_trim(coeffs) -> IntPolynomial:
    """Drop trailing zero coefficients so the degree is canonical."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_mul(p, q) -> IntPolynomial:
    """Exact product of two integer coefficient lists."""
    p, q = poly_trim(p), poly_trim(q)
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return tuple(out)


@dataclass(frozen=True, slots=True)
class RationalGF:
    """A rational generating function numerator/denominator pair."""

    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerator", poly_trim(self.numerator))
        object.__setattr__(self, "denominator", poly_trim(self.denominator))
        if not self.denominator or self.denominator[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")


def _normalized(numerator, denominator) -> RationalGF:
    # Flip both signs when the denominator's constant term is negative, so
    # the two factor orderings (27x - 1) vs (1 - 27x) store identically.
    num, den = poly_trim(numerator), poly_trim(denominator)
    if den and den[0] < 0:
        num = tuple(-c for c in num)
        den = tuple(-c for c in den)
    return RationalGF(num, den)


# Numerators and denominators kept in factored form; expansion and sign
# normalisation happen below.
_GF_FACTORS: dict[ClassLabel, tuple[IntPolynomial, tuple[IntPolynomial, ...]]] = {
    ClassLabel.A: ((-1, 24, -9, 162), ((-1, 27), (1, 0, 27))),
    ClassLabel.B: ((0, -6, 72, 162), ((-1, 27), (1, 0, 27))),
    ClassLabel.C: ((0, 0, 90, -162), ((1, -27), (1, 0, 27))),
    ClassLabel.D: ((0, 18), ((1, -27),)),
}


def gf_for_class(label: ClassLabel) -> RationalGF:
    """The generating function of a class, denominator expanded and normalised."""
    numerator, factors = _GF_FACTORS[label]
    denominator: IntPolynomial = (1,)
    for factor in factors:
        denominator = poly_mul(denominator, factor)
    return _normalized(numerator, denominator)


def gf_coefficients(gf: RationalGF, N: int) -> list[int]:
    """Taylor coefficients c_0..c_N of a rational generating function.

    Uses the linear recursion q_0*c_n = p_n - sum_{j>=1} q_j*c_{n-j}; with
    |q_0| = 1 every coefficient stays an exact integer.
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    q = gf.denominator
    p = gf.numerator
    q0 = q[0]
    if q0 not in (1, -1):
        raise NonUnitConstantTerm(f"denominator constant term is {q0}, need +-1")
    coeffs: list[int] = []
    for n in range(N + 1):
        acc = p[n] if n < len(p) else 0
        for j in range(1, min(n, len(q) - 1) + 1):
            acc -= q[j] * coeffs[n - j]
        coeffs.append(acc * q0)  # dividing by +-1
    return coeffs
