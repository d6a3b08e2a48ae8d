"""Generating functions and exact coefficient extraction."""

from __future__ import annotations

import pytest

from triwords.counting import ClassLabel, composition_sum
from triwords.genfun import NonUnitConstantTerm, RationalGF, gf_coefficients, gf_for_class, poly_mul, poly_trim
from truth_table import TRUTH


class TestPolyHelpers:
    def test_trim(self):
        assert poly_trim([1, 2, 0, 0]) == (1, 2)
        assert poly_trim([0, 0]) == ()

    def test_mul(self):
        assert poly_mul((1, 1), (-729, 27, -27, 1)) == (-729, -702, 0, -26, 1)
        assert poly_mul((), (1, 2)) == ()

    def test_mul_matches_known_expansion(self):
        # (27x - 1)(27x^2 + 1) = 729x^3 - 27x^2 + 27x - 1
        assert poly_mul((-1, 27), (1, 0, 27)) == (-1, 27, -27, 729)


class TestGfForClass:
    def test_class_a_normalised(self):
        gf = gf_for_class(ClassLabel.A)
        assert gf.numerator == (1, -24, 9, -162)
        assert gf.denominator == (1, -27, 27, -729)

    def test_class_d(self):
        gf = gf_for_class(ClassLabel.D)
        assert gf.numerator == (0, 18)
        assert gf.denominator == (1, -27)

    def test_constant_coefficient_of_a_is_one(self):
        assert gf_coefficients(gf_for_class(ClassLabel.A), 0) == [1]

    def test_shared_denominator_encodes_recurrence(self):
        denominators = {gf_for_class(label).denominator for label in (ClassLabel.A, ClassLabel.B, ClassLabel.C)}
        assert denominators == {(1, -27, 27, -729)}
        # q(x) = 1 - 27x + 27x^2 - 729x^3 <=> x(n) = 27x(n-1) - 27x(n-2) + 729x(n-3)
        q = (1, -27, 27, -729)
        assert [-coef for coef in q[1:]] == [27, -27, 729]


class TestCoefficients:
    def test_class_d_stream(self):
        assert gf_coefficients(gf_for_class(ClassLabel.D), 3) == [0, 18, 486, 13122]

    def test_class_a_stream(self):
        assert gf_coefficients(gf_for_class(ClassLabel.A), 2) == [1, 3, 63]

    def test_class_b_constant(self):
        assert gf_coefficients(gf_for_class(ClassLabel.B), 0) == [0]

    @pytest.mark.parametrize("label", list(ClassLabel))
    def test_streams_match_truth_table(self, label):
        stream = gf_coefficients(gf_for_class(label), 10)
        want = [TRUTH[n][list(ClassLabel).index(label)] for n in range(11)]
        assert stream == want

    def test_streams_match_composition_oracle_to_50(self):
        streams = {label: gf_coefficients(gf_for_class(label), 50) for label in ClassLabel}
        for n in range(51):
            v = composition_sum(n)
            assert (streams[ClassLabel.A][n], streams[ClassLabel.B][n], streams[ClassLabel.C][n],
                    streams[ClassLabel.D][n]) == v.as_tuple()

    def test_streams_sum_to_powers_of_27(self):
        streams = [gf_coefficients(gf_for_class(label), 40) for label in ClassLabel]
        for n in range(41):
            assert sum(s[n] for s in streams) == 27**n

    def test_negative_count_rejected(self):
        with pytest.raises(ValueError):
            gf_coefficients(gf_for_class(ClassLabel.A), -1)


class TestRationalGF:
    def test_trailing_zeros_trimmed(self):
        gf = RationalGF((1, 2, 0), (1, 0, 0))
        assert gf.numerator == (1, 2)
        assert gf.denominator == (1,)

    def test_zero_constant_denominator_rejected(self):
        with pytest.raises(ValueError):
            RationalGF((1,), (0, 1))

    def test_non_unit_constant_term(self):
        with pytest.raises(NonUnitConstantTerm):
            gf_coefficients(RationalGF((1,), (2, 1)), 3)

    def test_minus_one_constant_term_allowed(self):
        # extraction from the un-normalised orientation must give the same stream
        gf = RationalGF((-1, 24, -9, 162), (-1, 27, -27, 729))
        assert gf_coefficients(gf, 4) == [1, 3, 63, 2187, 59535]
