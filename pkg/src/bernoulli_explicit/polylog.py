"""Closed forms of Li_{-r}(-x) as rational functions N(x) / (1+x)^e."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rational_core import binomial, factorial, format_rational
from .tables import EulerianTable, StirlingTable, eulerian_table_for, stirling_table_for

__all__ = [
    "RationalFunction",
    "GeneralizedHarmonic",
    "polylog_stirling_form",
    "polylog_eulerian_form",
    "theta_form",
    "forms_equal",
    "polylog_eval_exact",
    "harmonic_partial_sum",
    "generalized_harmonic",
]


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(Fraction(c) for c in coeffs)


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _one_plus_x_pow(e: int) -> list[Fraction]:
    return [Fraction(binomial(e, i)) for i in range(e + 1)]


@dataclass(frozen=True)
class RationalFunction:
    """``numerator[i]`` is the coefficient of x**i; the denominator is (1+x)**``denominator_exponent``."""

    numerator: tuple[Fraction, ...]
    denominator_exponent: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerator", _trim(self.numerator))

    @property
    def degree(self) -> int:
        return len(self.numerator) - 1

    def raised_to(self, e: int) -> "RationalFunction":
        """Same function rewritten over (1+x)**e, e >= current exponent."""
        d = e - self.denominator_exponent
        if d < 0:
            raise ValueError("cannot lower the denominator exponent")
        return RationalFunction(tuple(_poly_mul(self.numerator, _one_plus_x_pow(d))), e)

    def __call__(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        if x == -1:
            raise ZeroDivisionError("pole at x = -1")
        acc = Fraction(0)
        for c in reversed(self.numerator):
            acc = acc * x + c
        return acc / (1 + x) ** self.denominator_exponent

    def evaluate_float(self, x: float) -> float:
        """Float evaluation by Horner on the exact coefficients."""
        acc = 0.0
        for c in reversed(self.numerator):
            acc = acc * x + float(c)
        return acc / (1.0 + x) ** self.denominator_exponent

    def evaluate_reciprocal_float(self, t: float) -> float:
        """Value at x = 1/t, computed stably for small t via the reversed numerator."""
        n = len(self.numerator)
        acc = 0.0
        for c in self.numerator:
            acc = acc * t + float(c)
        # N(1/t) = t^-(n-1) * acc ;  (1 + 1/t)^-e = t^e (1+t)^-e
        return acc * t ** (self.denominator_exponent - (n - 1)) / (1.0 + t) ** self.denominator_exponent

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.numerator):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                body = mono
            elif mono and c == -1:
                body = "-" + mono
            else:
                body = format_rational(c) + (" " + mono if mono else "")
            terms.append(body)
        num = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"({num})/(1+x)^{self.denominator_exponent}"


def polylog_stirling_form(r: int, table: StirlingTable | None = None) -> RationalFunction:
    """Li_{-r}(-x) = sum_k k! S(r,k) (-x)^k / (1+x)^{k+1}, over the common (1+x)^{r+1}."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if r == 0:
        # the Stirling sum is empty here; Li_0(-x) = -x/(1+x)
        return RationalFunction((Fraction(0), Fraction(-1)), 1)
    srow = stirling_table_for(r, table).row(r)
    num: list[Fraction] = []
    for k in range(1, r + 1):
        mono = [Fraction(0)] * k + [Fraction((-1) ** k * factorial(k) * srow[k - 1])]
        num = _poly_add(num, _poly_mul(mono, _one_plus_x_pow(r - k)))
    return RationalFunction(tuple(num), r + 1)


def polylog_eulerian_form(r: int, table: EulerianTable | None = None) -> RationalFunction:
    """Li_{-r}(-x) = sum_j <r,j> (-x)^{r-j} / (1+x)^{r+1}."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    erow = eulerian_table_for(r, table).row(r)
    num = [Fraction(0)] * (r + 1)
    for j in range(r):
        num[r - j] = Fraction((-1) ** (r - j) * erow[j])
    return RationalFunction(tuple(num), r + 1)


def theta_form(r: int) -> RationalFunction:
    """Li_{-r}(-x) from Li_0(-x) = -x/(1+x) by applying x d/dx r times.

    Uses only polynomial differentiation, so it is independent of both
    table-based forms.
    """
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    num = [Fraction(0), Fraction(-1)]
    e = 1
    for _ in range(r):
        # x d/dx [N/(1+x)^e] = x [N'(1+x) - e N] / (1+x)^{e+1}
        dn = [i * c for i, c in enumerate(num)][1:]
        inner = _poly_add(_poly_mul(dn, [Fraction(1), Fraction(1)]), [-e * c for c in num])
        num = [Fraction(0)] + inner
        e += 1
    return RationalFunction(tuple(num), e)


def forms_equal(r: int) -> bool:
    """True iff the Stirling and Eulerian numerators over (1+x)^{r+1} coincide."""
    s = polylog_stirling_form(r)
    e = polylog_eulerian_form(r)
    return s.denominator_exponent == e.denominator_exponent and s.numerator == e.numerator


def polylog_eval_exact(r: int, x: Fraction | int) -> Fraction:
    """Exact Li_{-r}(-x) through the Stirling form."""
    x = Fraction(x)
    if x == -1:
        raise ValueError("Li_{-r}(-x) has a pole at x = -1")
    return polylog_stirling_form(r)(x)


@dataclass(frozen=True)
class GeneralizedHarmonic:
    n: int
    s: int
    value: Fraction


def generalized_harmonic(n: int, s: int) -> GeneralizedHarmonic:
    """H_n^(s) = sum_{k=1}^n k^(-s)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if s <= 0:
        value = Fraction(sum(k ** (-s) for k in range(1, n + 1)))
    else:
        value = sum((Fraction(1, k**s) for k in range(1, n + 1)), Fraction(0))
    return GeneralizedHarmonic(n, s, value)


def harmonic_partial_sum(r: int, x: Fraction | int, N: int) -> Fraction:
    """sum_{n=1}^N H_n^(-r) (-x)^n, a truncation of Li_{-r}(-x)/(1+x)."""
    x = Fraction(x)
    if abs(x) >= 1:
        raise ValueError(f"need |x| < 1, got {x}")
    if r < 1 or N < 1:
        raise ValueError(f"need r >= 1 and N >= 1, got r={r}, N={N}")
    total = Fraction(0)
    h = 0
    p = Fraction(1)
    for n in range(1, N + 1):
        h += n**r
        p *= -x
        total += h * p
    return total
