"""Uniform access to the compute engines, plus the cross-validation checks.

Every engine computes the same four integer sequences by a different
route, so any disagreement, down to a single bit, is a bug in one of
them.  The registry below records each engine's domain (minimum n, an
upper bound for the brute-force enumerator, and which classes it covers)
and the validation report runs every pairwise agreement check the domains
allow, the 27^n total identity, the characteristic-polynomial
factorisation and the elimination-identity suite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .closedform import case_mod4, closed_form, root_basis
from .counting import ClassLabel, ClassVector, brute_force_words, composition_sum
from .genfun import gf_coefficients, gf_for_class
from .recurrence import (
    QUARTIC_SEEDS,
    THIRD_ORDER_SEEDS,
    char_poly_check,
    coupled_sequence,
    decoupled_d,
    decoupled_third_order,
    identity_suite,
    quartic_c,
)

ALL_LABELS = (ClassLabel.A, ClassLabel.B, ClassLabel.C, ClassLabel.D)


def decimal_digits(n: int) -> int:
    """Decimal digit count of |n| without str(), which CPython caps by default.

    The bit length bounds floor(log10 n) within one, and a single big-power
    comparison settles which side we are on.
    """
    n = abs(n)
    if n == 0:
        return 1
    candidate = max(1, (n.bit_length() * 30103) // 100000)
    return candidate if n < 10**candidate else candidate + 1


class EngineDomainError(ValueError):
    """The engine does not cover the requested class or index."""


@dataclass(frozen=True, slots=True)
class EngineInfo:
    name: str
    min_n: int
    max_n: int | None
    labels: tuple[ClassLabel, ...]
    description: str


ENGINES: dict[str, EngineInfo] = {
    e.name: e
    for e in (
        EngineInfo("brute", 0, 5, ALL_LABELS, "enumerate all 3^(3n) words"),
        EngineInfo("compsum", 0, None, ALL_LABELS, "sum trinomials over all letter-count compositions"),
        EngineInfo("coupled", 0, None, ALL_LABELS, "iterate the coupled 4x4 recurrence"),
        EngineInfo("decoupled", 0, None, ALL_LABELS, "per-class decoupled recurrences (default)"),
        EngineInfo("quartic-c", 0, None, (ClassLabel.C,), "fourth-order recurrence, class C only"),
        EngineInfo("closed", 1, None, ALL_LABELS, "closed form with oscillating term, exact ring arithmetic"),
        EngineInfo("rootbasis", 1, None, ALL_LABELS, "rational combination of characteristic-root powers"),
        EngineInfo("mod4", 1, None, ALL_LABELS, "radical-free closed form branched on n mod 4"),
        EngineInfo("genfun", 0, None, ALL_LABELS, "coefficient extraction from the generating functions"),
    )
}

ENGINE_IDS = tuple(ENGINES)


def _check_domain(engine: str, label: ClassLabel, n: int) -> EngineInfo:
    try:
        info = ENGINES[engine]
    except KeyError:
        raise EngineDomainError(f"unknown engine {engine!r}; known: {', '.join(ENGINE_IDS)}") from None
    if label not in info.labels:
        raise EngineDomainError(f"engine {engine!r} only covers classes {[l.value for l in info.labels]}")
    if n < info.min_n:
        raise EngineDomainError(f"engine {engine!r} needs n >= {info.min_n}, got {n}")
    if info.max_n is not None and n > info.max_n:
        raise EngineDomainError(f"engine {engine!r} is capped at n = {info.max_n}, got {n}")
    return info


def compute_value(engine: str, label: ClassLabel, n: int) -> int:
    """One class count by one engine; raises EngineDomainError when out of range."""
    _check_domain(engine, label, n)
    if engine == "brute":
        return brute_force_words(n).component(label)
    if engine == "compsum":
        return composition_sum(n).component(label)
    if engine == "coupled":
        return coupled_sequence(n)[n].component(label)
    if engine == "decoupled":
        return decoupled_d(n) if label is ClassLabel.D else decoupled_third_order(label, n)
    if engine == "quartic-c":
        return quartic_c(n)
    if engine == "closed":
        return closed_form(label, n)
    if engine == "rootbasis":
        return root_basis(label, n)
    if engine == "mod4":
        return case_mod4(label, n)
    return gf_coefficients(gf_for_class(label), n)[n]


def _third_order_series(label: ClassLabel, N: int) -> list[int]:
    out = list(THIRD_ORDER_SEEDS[label][: N + 1])
    while len(out) <= N:
        out.append(27 * (out[-1] - out[-2] + 27 * out[-3]))
    return out


def _quartic_series(N: int) -> list[int]:
    out = list(QUARTIC_SEEDS[: N + 1])
    while len(out) <= N:
        out.append(26 * out[-1] + 702 * out[-3] + 729 * out[-4])
    return out


def _d_series(N: int) -> list[int]:
    out = [0]
    if N >= 1:
        out.append(18)
    while len(out) <= N:
        out.append(27 * out[-1])
    return out


def compute_series(engine: str, max_n: int) -> list[ClassVector]:
    """Class vectors for n = 0..max_n; only engines defined from n = 0 qualify."""
    if max_n < 0:
        raise EngineDomainError(f"max_n must be nonnegative, got {max_n}")
    info = _check_domain(engine, ALL_LABELS[0] if engine != "quartic-c" else ClassLabel.C, max_n)
    if info.min_n > 0 or info.labels != ALL_LABELS:
        raise EngineDomainError(f"engine {engine!r} cannot produce the full table from n = 0")
    if engine == "brute":
        return [brute_force_words(n) for n in range(max_n + 1)]
    if engine == "compsum":
        return [composition_sum(n) for n in range(max_n + 1)]
    if engine == "coupled":
        return coupled_sequence(max_n)
    if engine == "decoupled":
        series = [_third_order_series(lab, max_n) for lab in ALL_LABELS[:3]]
        series.append(_d_series(max_n))
        return [ClassVector(n, *(s[n] for s in series)) for n in range(max_n + 1)]
    # genfun
    streams = [gf_coefficients(gf_for_class(lab), max_n) for lab in ALL_LABELS]
    return [ClassVector(n, *(s[n] for s in streams)) for n in range(max_n + 1)]


@dataclass(frozen=True, slots=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _agreement(name: str, reference: list[ClassVector], candidate, lo: int, hi: int,
               labels: tuple[ClassLabel, ...] = ALL_LABELS) -> CheckResult:
    """Compare candidate(label, n) against a reference sequence on [lo, hi]."""
    for n in range(lo, hi + 1):
        for label in labels:
            got = candidate(label, n)
            want = reference[n].component(label)
            if got != want:
                if decimal_digits(got) <= 40 and decimal_digits(want) <= 40:
                    return CheckResult(name, False, f"mismatch at n={n} class {label.value}: {got} != {want}")
                return CheckResult(name, False, f"mismatch at n={n} class {label.value}")
    return CheckResult(name, True, f"n = {lo}..{hi}")


def run_validation(max_n: int) -> list[CheckResult]:
    """All cross-engine, identity and structural checks up to max_n."""
    if max_n < 4:
        raise ValueError(f"validation needs max_n >= 4, got {max_n}")
    reference = coupled_sequence(max_n)
    results = []

    brute_hi = min(max_n, ENGINES["brute"].max_n)
    brute = compute_series("brute", brute_hi)
    results.append(
        _agreement("engine/brute-vs-coupled", reference, lambda lab, n: brute[n].component(lab), 0, brute_hi)
    )

    compsum_hi = min(max_n, 300)
    compsum = compute_series("compsum", compsum_hi)
    results.append(
        _agreement("engine/compsum-vs-coupled", reference, lambda lab, n: compsum[n].component(lab), 0, compsum_hi)
    )

    decoupled = compute_series("decoupled", max_n)
    results.append(
        _agreement("engine/decoupled-vs-coupled", reference, lambda lab, n: decoupled[n].component(lab), 0, max_n)
    )

    quartic = _quartic_series(max_n)
    results.append(
        _agreement(
            "engine/quartic-c-vs-coupled", reference, lambda lab, n: quartic[n], 0, max_n, labels=(ClassLabel.C,)
        )
    )

    for engine in ("closed", "rootbasis", "mod4"):
        results.append(
            _agreement(
                f"engine/{engine}-vs-coupled",
                reference,
                lambda lab, n, e=engine: compute_value(e, lab, n),
                1,
                max_n,
            )
        )

    genfun = compute_series("genfun", max_n)
    results.append(
        _agreement("engine/genfun-vs-coupled", reference, lambda lab, n: genfun[n].component(lab), 0, max_n)
    )

    power = 1
    v4 = reference[4]
    sum_result = CheckResult(
        "sum-identity",
        True,
        f"A+B+C+D = 27^n for n = 0..{max_n}; n=4: {v4.a}+{v4.b}+{v4.c}+{v4.d} = {v4.total} = 3^12",
    )
    for n in range(max_n + 1):
        if reference[n].total != power:
            sum_result = CheckResult("sum-identity", False, f"total at n={n} is not 27^{n}")
            break
        power *= 27
    results.append(sum_result)

    results.append(
        CheckResult(
            "char-poly-factorization",
            char_poly_check(),
            "x^4 - 26x^3 - 702x - 729 = (x+1)(x^3 - 27(x^2 - x + 27))",
        )
    )

    report = identity_suite(max_n, sequence=reference, strict=False)
    for r in report.results:
        detail = f"{r.relation} ({r.checked} indices)" if r.passed else f"{r.relation}; fails at n={r.first_failure}"
        results.append(CheckResult(f"identity/{r.name}", r.passed, detail))

    return results


def bench_engine(engine: str, n: int) -> tuple[float, dict[ClassLabel, int]]:
    """Wall-clock time and values for computing every supported class at n."""
    info = _check_domain(engine, ENGINES[engine].labels[0], n)
    start = time.perf_counter()
    values = {label: compute_value(engine, label, n) for label in info.labels}
    elapsed = time.perf_counter() - start
    return elapsed, values
