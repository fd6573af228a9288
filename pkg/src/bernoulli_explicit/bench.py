"""Wall-clock comparison of the four explicit formulas and the recurrence."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, field
from typing import Callable

from .bernoulli import (
    Method,
    bernoulli_eq1,
    bernoulli_eq2,
    bernoulli_eq3,
    bernoulli_eq4,
    bernoulli_oracle,
    oracle_sequence,
)
from .tables import build_eulerian, build_stirling

__all__ = ["BenchReport", "run_bench"]


@dataclass
class BenchReport:
    """Median seconds per method for the whole range; table builds timed separately."""

    max_r: int
    repetitions: int
    method_seconds: dict[str, float] = field(default_factory=dict)
    table_seconds: dict[str, float] = field(default_factory=dict)


def _median_time(fn: Callable[[], object], reps: int) -> float:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def run_bench(max_r: int, repetitions: int = 3) -> BenchReport:
    """Time B_2..B_{R+1} (eq1, eq2) and B_1..B_R (eq3, eq4, oracle).

    Every method's output is checked against the oracle before any timing.
    """
    if max_r < 1:
        raise ValueError(f"max_r must be >= 1, got {max_r}")
    if repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {repetitions}")
    rs = range(1, max_r + 1)
    stirling = build_stirling(max_r)
    eulerian = build_eulerian(max_r)

    runs: dict[Method, Callable[[], list]] = {
        Method.EQ1: lambda: [bernoulli_eq1(r, stirling).value for r in rs],
        Method.EQ2: lambda: [bernoulli_eq2(r, eulerian).value for r in rs],
        Method.EQ3: lambda: [bernoulli_eq3(r, stirling).value for r in rs],
        Method.EQ4: lambda: [bernoulli_eq4(r, eulerian).value for r in rs],
        Method.ORACLE: lambda: oracle_sequence(max_r)[1:],
    }
    shifted = [bernoulli_oracle(r + 1).value for r in rs]
    plain = [bernoulli_oracle(r).value for r in rs]
    for method, run in runs.items():
        want = shifted if method in (Method.EQ1, Method.EQ2) else plain
        if run() != want:
            raise AssertionError(f"{method} disagrees with the oracle below r={max_r}")

    report = BenchReport(max_r, repetitions)
    report.table_seconds["stirling"] = _median_time(lambda: build_stirling(max_r), repetitions)
    report.table_seconds["eulerian"] = _median_time(lambda: build_eulerian(max_r), repetitions)
    for method, run in runs.items():
        report.method_seconds[method.value] = _median_time(run, repetitions)
    return report
