"""Engine registry, domains, series construction and the validation report."""

from __future__ import annotations

import pytest

from triwords.counting import ClassLabel
from triwords.engines import (
    ENGINE_IDS,
    EngineDomainError,
    bench_engine,
    compute_series,
    compute_value,
    decimal_digits,
    run_validation,
)
from truth_table import TRUTH


class TestDomains:
    def test_engine_ids(self):
        assert set(ENGINE_IDS) == {
            "brute", "compsum", "coupled", "decoupled", "quartic-c",
            "closed", "rootbasis", "mod4", "genfun",
        }

    def test_brute_cap(self):
        with pytest.raises(EngineDomainError):
            compute_value("brute", ClassLabel.A, 6)

    def test_closed_needs_positive_n(self):
        for engine in ("closed", "rootbasis", "mod4"):
            with pytest.raises(EngineDomainError):
                compute_value(engine, ClassLabel.A, 0)

    def test_quartic_only_class_c(self):
        assert compute_value("quartic-c", ClassLabel.C, 4) == 58806
        with pytest.raises(EngineDomainError):
            compute_value("quartic-c", ClassLabel.A, 4)

    def test_unknown_engine(self):
        with pytest.raises(EngineDomainError):
            compute_value("magic", ClassLabel.A, 1)

    def test_series_needs_full_coverage_from_zero(self):
        for engine in ("closed", "rootbasis", "mod4", "quartic-c"):
            with pytest.raises(EngineDomainError):
                compute_series(engine, 5)


class TestValues:
    @pytest.mark.parametrize("engine", ENGINE_IDS)
    def test_engine_against_truth_table(self, engine):
        hi = 4 if engine == "brute" else 8
        labels = (ClassLabel.C,) if engine == "quartic-c" else tuple(ClassLabel)
        lo = 1 if engine in ("closed", "rootbasis", "mod4") else 0
        for n in range(lo, hi + 1):
            for label in labels:
                assert compute_value(engine, label, n) == TRUTH[n][list(ClassLabel).index(label)]

    @pytest.mark.parametrize("engine", ["compsum", "coupled", "decoupled", "genfun"])
    def test_series_match_truth_table(self, engine):
        series = compute_series(engine, 10)
        assert [v.as_tuple() for v in series] == [TRUTH[n] for n in range(11)]
        assert [v.n for v in series] == list(range(11))

    def test_brute_series(self):
        series = compute_series("brute", 3)
        assert [v.as_tuple() for v in series] == [TRUTH[n] for n in range(4)]


class TestValidation:
    def test_all_checks_pass(self):
        results = run_validation(10)
        assert results
        failed = [r for r in results if not r.passed]
        assert failed == []
        names = [r.name for r in results]
        assert "sum-identity" in names
        assert "char-poly-factorization" in names
        assert sum(name.startswith("engine/") for name in names) == 8
        assert sum(name.startswith("identity/") for name in names) == 9

    def test_minimum_max_n(self):
        with pytest.raises(ValueError):
            run_validation(3)


class TestBench:
    def test_values_deterministic_across_engines(self):
        _, coupled = bench_engine("coupled", 40)
        _, decoupled = bench_engine("decoupled", 40)
        assert coupled == decoupled

    def test_quartic_only_covers_c(self):
        _, values = bench_engine("quartic-c", 12)
        assert list(values) == [ClassLabel.C]
        assert values[ClassLabel.C] == compute_value("coupled", ClassLabel.C, 12)


class TestDecimalDigits:
    @pytest.mark.parametrize(
        "value,expect",
        [(0, 1), (1, 1), (9, 1), (10, 2), (999, 3), (1000, 4), (-1234, 4), (10**100, 101), (10**100 - 1, 100)],
    )
    def test_small(self, value, expect):
        assert decimal_digits(value) == expect

    def test_huge(self):
        assert decimal_digits(10**20000) == 20001
        assert decimal_digits(10**20000 - 1) == 20000
        assert decimal_digits(7 * 10**14312) == 14313
