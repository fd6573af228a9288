"""Exact cross-checks of the Bernoulli formulas and polylog closed forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .bernoulli import (
    bernoulli_eq1,
    bernoulli_eq2,
    bernoulli_eq3,
    bernoulli_eq4,
    bernoulli_oracle,
    faulhaber_check,
    hurwitz_zeta_neg_int,
    von_staudt_clausen_sum,
    zeta_neg_int,
)
from .polylog import forms_equal, polylog_stirling_form, theta_form
from .rational_core import format_rational
from .tables import build_eulerian, build_stirling

__all__ = ["CheckResult", "iter_exact_checks", "run_exact_checks", "THETA_MAX_R", "FAULHABER_MAX_R"]

THETA_MAX_R = 12
FAULHABER_MAX_R = 20
FAULHABER_MAX_N = 100


@dataclass(frozen=True)
class CheckResult:
    name: str
    r: int
    passed: bool
    detail: str = ""


def _sides_agree(r: int, n: int) -> bool:
    lhs, rhs = faulhaber_check(r, n)
    return lhs == rhs


def iter_exact_checks(max_r: int) -> Iterator[CheckResult]:
    """Yield one result per (identity, r) in a fixed order."""
    if max_r < 1:
        raise ValueError(f"max_r must be >= 1, got {max_r}")
    stirling = build_stirling(max_r)
    eulerian = build_eulerian(max_r)
    for r in range(1, max_r + 1):
        up = bernoulli_oracle(r + 1).value
        here = bernoulli_oracle(r).value
        for name, got, want in (
            ("eq1", bernoulli_eq1(r, stirling).value, up),
            ("eq2", bernoulli_eq2(r, eulerian).value, up),
            ("eq3", bernoulli_eq3(r, stirling).value, here),
            ("eq4", bernoulli_eq4(r, eulerian).value, here),
        ):
            yield CheckResult(name, r, got == want,
                              f"got {format_rational(got)}, oracle {format_rational(want)}")
        yield CheckResult("forms_equal", r, forms_equal(r))
        if r <= THETA_MAX_R:
            yield CheckResult("theta_form", r, theta_form(r) == polylog_stirling_form(r))
        if r % 2 == 0:
            total = bernoulli_oracle(r).value + von_staudt_clausen_sum(r)
            yield CheckResult("von_staudt_clausen", r, total.denominator == 1,
                              f"B_{r} + sum 1/p = {format_rational(total)}")
        if r <= FAULHABER_MAX_R:
            bad = next((n for n in range(1, FAULHABER_MAX_N + 1) if not _sides_agree(r, n)), None)
            yield CheckResult("faulhaber", r, bad is None, "" if bad is None else f"first mismatch n={bad}")
        yield CheckResult("hurwitz_at_1", r, hurwitz_zeta_neg_int(r, 1) == zeta_neg_int(r))


def run_exact_checks(max_r: int) -> list[CheckResult]:
    return list(iter_exact_checks(max_r))
