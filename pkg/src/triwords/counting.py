"""Ground-truth counting of 3n-letter words over a three-letter alphabet.

A word of length N = 3n with letter counts (n1, n2, n3) falls into one of
four residue classes:

    A: every ni = 0 (mod 3)      B: every ni = 1 (mod 3)
    C: every ni = 2 (mod 3)      D: the residues are 0, 1, 2 in some order

Because n1 + n2 + n3 = 0 (mod 3), these four patterns are the only ones
possible and exactly one applies to each word.  This module provides the
class counts straight from their definitions (sums of trinomial
coefficients over constrained compositions) plus two brute-force oracles:
full word enumeration, and a sweep over all letter-count compositions.
Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb


class ArityMismatch(ValueError):
    """Lower-index arguments of a trinomial coefficient do not sum to the upper index."""


class NotDivisibleBy3(ValueError):
    """Letter counts whose total is not a multiple of three cannot be classified."""


class TooLarge(ValueError):
    """Word enumeration was asked for more words than the guard allows."""


class ClassLabel(Enum):
    """Residue class of a letter-count triple (see module docstring)."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"


#: Composition of a word length into three letter counts.
Composition = tuple[int, int, int]

# Classes A, B, C in residue order; index r maps to the class with all counts = r (mod 3).
_SAME_RESIDUE_CLASS = (ClassLabel.A, ClassLabel.B, ClassLabel.C)

# Per-class k-sum offsets (added to 3*ki) and overall multiplier in the
# definitional sums; the k's run over compositions of n - shift.
_DIRECT_SUM_RULES: dict[ClassLabel, tuple[int, tuple[int, int, int], int]] = {
    ClassLabel.A: (0, (0, 0, 0), 1),
    ClassLabel.B: (1, (1, 1, 1), 1),
    ClassLabel.C: (2, (2, 2, 2), 1),
    ClassLabel.D: (1, (0, 1, 2), 6),
}

# 3^15 words is a few seconds of enumeration; anything beyond is runaway.
_BRUTE_FORCE_MAX_N = 5


@dataclass(frozen=True, slots=True)
class ClassVector:
    """The four class counts (C_A, C_B, C_C, C_D) at a given index n."""

    n: int
    a: int
    b: int
    c: int
    d: int

    @property
    def total(self) -> int:
        return self.a + self.b + self.c + self.d

    def component(self, label: ClassLabel) -> int:
        return {ClassLabel.A: self.a, ClassLabel.B: self.b, ClassLabel.C: self.c, ClassLabel.D: self.d}[label]

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


def trinomial(N: int, n1: int, n2: int, n3: int) -> int:
    """The trinomial coefficient N! / (n1! n2! n3!), exactly.

    Any negative argument yields 0; this matches the summation convention
    used throughout the recurrence derivations, where out-of-range terms
    simply drop out.  Nonnegative arguments must satisfy n1 + n2 + n3 = N.
    """
    if N < 0 or n1 < 0 or n2 < 0 or n3 < 0:
        return 0
    if n1 + n2 + n3 != N:
        raise ArityMismatch(f"trinomial({N}; {n1}, {n2}, {n3}): lower indices sum to {n1 + n2 + n3}")
    return comb(N, n1) * comb(N - n1, n2)


def classify(counts: Composition) -> ClassLabel:
    """Residue class of a letter-count triple whose total is a multiple of 3."""
    n1, n2, n3 = counts
    if n1 < 0 or n2 < 0 or n3 < 0:
        raise ValueError(f"letter counts must be nonnegative, got {counts}")
    if (n1 + n2 + n3) % 3:
        raise NotDivisibleBy3(f"total letter count {n1 + n2 + n3} is not divisible by 3")
    r1, r2, r3 = n1 % 3, n2 % 3, n3 % 3
    if r1 == r2 == r3:
        return _SAME_RESIDUE_CLASS[r1]
    return ClassLabel.D


def _compositions3(total: int):
    """All (k1, k2, k3) with ki >= 0 and k1 + k2 + k3 = total; empty for total < 0."""
    for k1 in range(total + 1):
        for k2 in range(total - k1 + 1):
            yield k1, k2, total - k1 - k2


def direct_sum(label: ClassLabel, n: int) -> int:
    """Class count at index n, straight from its definitional sum.

    C_A(n) sums trinomial(3n; 3k1, 3k2, 3k3) over k1+k2+k3 = n; classes B,
    C shift every lower index by +1 resp. +2 and the k-sum down by 1 resp.
    2; class D uses offsets (0, +1, +2) over k1+k2+k3 = n-1 and multiplies
    by 6 for the permutations of which letter gets which offset.  Empty
    k-ranges give 0, so C_B(0) = C_C(0) = C_D(0) = 0 and C_C(1) = 0.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    shift, offsets, multiplier = _DIRECT_SUM_RULES[label]
    N = 3 * n
    o1, o2, o3 = offsets
    total = 0
    for k1, k2, k3 in _compositions3(n - shift):
        total += trinomial(N, 3 * k1 + o1, 3 * k2 + o2, 3 * k3 + o3)
    return multiplier * total


def brute_force_words(n: int) -> ClassVector:
    """Class counts by enumerating every one of the 3^(3n) words.

    The word is a little-endian odometer over base-3 digits; each increment
    touches O(1) digits amortised and the letter counts are maintained
    incrementally, so the loop stays cheap enough for n = 5 (3^15 words).
    The class test is inlined: with the counts' residues r1, r2, r3, the
    word is in A/B/C when r1 = r2 = r3 and in D otherwise.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > _BRUTE_FORCE_MAX_N:
        raise TooLarge(f"n = {n} means 3^{3 * n} words; refusing beyond n = {_BRUTE_FORCE_MAX_N}")
    length = 3 * n
    digits = [0] * length
    c1, c2, c3 = length, 0, 0
    tally = [0, 0, 0, 0]
    while True:
        r1 = c1 % 3
        if r1 == c2 % 3 and r1 == c3 % 3:
            tally[r1] += 1
        else:
            tally[3] += 1
        pos = 0
        while pos < length and digits[pos] == 2:
            digits[pos] = 0
            c3 -= 1
            c1 += 1
            pos += 1
        if pos == length:
            break
        d = digits[pos]
        digits[pos] = d + 1
        if d == 0:
            c1 -= 1
            c2 += 1
        else:
            c2 -= 1
            c3 += 1
    return ClassVector(n, tally[0], tally[1], tally[2], tally[3])


def composition_sum(n: int) -> ClassVector:
    """Class counts by summing trinomial(3n; n1, n2, n3) over all compositions.

    O(n^2) compositions instead of 3^(3n) words, so this oracle reaches n in
    the hundreds.  The trinomial is carried across the sweep by one exact
    multiply/divide per step:

        T(n1, 0)      = C(N, n1)
        T(n1, n2 + 1) = T(n1, n2) * n3 / (n2 + 1)

    Classification shortcut: with N = 0 (mod 3) and r1 = n1 mod 3, the
    residues satisfy r3 = -(r1 + r2) mod 3, so all three are equal exactly
    when r2 = r1 (then r3 = -2*r1 = r1 mod 3).  Each row therefore feeds
    the single same-residue class given by r1, and every other column goes
    to D.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    N = 3 * n
    tally = [0, 0, 0, 0]
    row_start = 1  # C(N, 0)
    for n1 in range(N + 1):
        m = N - n1
        r1 = n1 % 3
        t = row_start
        same = 0
        rest = 0
        r2 = 0
        for n2 in range(m):
            if r2 == r1:
                same += t
            else:
                rest += t
            r2 += 1
            if r2 == 3:
                r2 = 0
            t = t * (m - n2) // (n2 + 1)
        if r2 == r1:  # last column, n2 = m
            same += t
        else:
            rest += t
        tally[r1] += same
        tally[3] += rest
        row_start = row_start * (N - n1) // (n1 + 1)
    return ClassVector(n, tally[0], tally[1], tally[2], tally[3])
