"""Bernoulli numbers from four explicit Stirling/Eulerian sums, plus an oracle.

Convention throughout: ``B_1 = -1/2``.  The Stirling sum for ``B_r`` at
``r = 1`` evaluates to ``-1/2`` directly, so every route agrees on it.

``bernoulli_eq1``/``bernoulli_eq2`` return ``B_{r+1}`` and
``bernoulli_eq3``/``bernoulli_eq4`` return ``B_r``; all four need ``r >= 1``.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction

from .rational_core import binomial, factorial, pow2, sign_pow
from .tables import EulerianTable, StirlingTable, eulerian_table_for, stirling_table_for

__all__ = [
    "Method",
    "BernoulliValue",
    "BernoulliPolynomial",
    "bernoulli_oracle",
    "oracle_sequence",
    "bernoulli_eq1",
    "bernoulli_eq2",
    "bernoulli_eq3",
    "bernoulli_eq4",
    "bernoulli",
    "zeta_neg_int",
    "bernoulli_poly",
    "hurwitz_zeta_neg_int",
    "faulhaber_check",
    "primes_up_to",
    "von_staudt_clausen_sum",
]


class Method(str, enum.Enum):
    EQ1 = "eq1"
    EQ2 = "eq2"
    EQ3 = "eq3"
    EQ4 = "eq4"
    ORACLE = "oracle"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BernoulliValue:
    index: int
    value: Fraction
    method: Method


def _require_r(r: int) -> None:
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")


# -- oracle ----------------------------------------------------------------

_ORACLE: list[Fraction] = [Fraction(1)]
_ORACLE_LOCK = threading.Lock()


def _recurrence_step(seq: list[Fraction]) -> None:
    n = len(seq)
    # sum_{j=0}^{n} C(n+1, j) B_j = 0
    acc = sum((binomial(n + 1, j) * seq[j] for j in range(n)), Fraction(0))
    seq.append(-acc / (n + 1))


def oracle_sequence(m: int) -> list[Fraction]:
    """B_0..B_m computed from scratch, bypassing the memo (used for timing)."""
    seq = [Fraction(1)]
    while len(seq) <= m:
        _recurrence_step(seq)
    return seq


def _extend_oracle(m: int) -> None:
    # Append-only under the lock; readers only index already-written slots.
    with _ORACLE_LOCK:
        while len(_ORACLE) <= m:
            _recurrence_step(_ORACLE)


def bernoulli_oracle(m: int) -> BernoulliValue:
    """B_m from the classical binomial recurrence (memoized)."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m >= len(_ORACLE):
        _extend_oracle(m)
    return BernoulliValue(m, _ORACLE[m], Method.ORACLE)


# -- the four explicit sums ------------------------------------------------


def bernoulli_eq1(r: int, table: StirlingTable | None = None) -> BernoulliValue:
    """B_{r+1} from the Stirling sum with the 2^{-2k} (2k-1)!/(k-1)! weights."""
    _require_r(r)
    srow = stirling_table_for(r, table).row(r)
    total = Fraction(0)
    for k in range(1, r + 1):
        # (2k-1)!/(k-1)! is the rising product k (k+1) ... (2k-1)
        weight = factorial(2 * k - 1) // factorial(k - 1)
        total += Fraction(sign_pow(k) * srow[k - 1] * weight, (k + 1) << (2 * k))
    prefactor = Fraction(sign_pow(r) * (r + 1) << r, (1 << (r + 1)) - 1)
    return BernoulliValue(r + 1, prefactor * total, Method.EQ1)


def bernoulli_eq2(r: int, table: EulerianTable | None = None) -> BernoulliValue:
    """B_{r+1} from the Eulerian sum with binomial ratio weights."""
    _require_r(r)
    erow = eulerian_table_for(r, table).row(r)
    total = Fraction(0)
    for l in range(1, r + 1):
        total += Fraction(
            sign_pow(l) * erow[r - l] * binomial(r - 1, l - 1),
            binomial(2 * r, 2 * l - 1),
        )
    prefactor = Fraction(sign_pow(r) * (r + 1), ((1 << (r + 1)) - 1) << r)
    return BernoulliValue(r + 1, prefactor * binomial(2 * r, r - 1) * total, Method.EQ2)


def bernoulli_eq3(r: int, table: StirlingTable | None = None) -> BernoulliValue:
    """B_r from sum_k (-1)^k S(r,k) (k-1)!/(k+1)."""
    _require_r(r)
    srow = stirling_table_for(r, table).row(r)
    total = Fraction(0)
    for k in range(1, r + 1):
        total += Fraction(sign_pow(k) * srow[k - 1] * factorial(k - 1), k + 1)
    return BernoulliValue(r, sign_pow(r - 1) * total, Method.EQ3)


def bernoulli_eq4(r: int, table: EulerianTable | None = None) -> BernoulliValue:
    """B_r from sum_l (-1)^l <r, r-l> / (l C(r+1, l))."""
    _require_r(r)
    erow = eulerian_table_for(r, table).row(r)
    total = Fraction(0)
    for l in range(1, r + 1):
        total += Fraction(sign_pow(l) * erow[r - l], l * binomial(r + 1, l))
    return BernoulliValue(r, sign_pow(r - 1) * total, Method.EQ4)


_BY_METHOD = {
    Method.EQ1: (bernoulli_eq1, 1),
    Method.EQ2: (bernoulli_eq2, 1),
    Method.EQ3: (bernoulli_eq3, 0),
    Method.EQ4: (bernoulli_eq4, 0),
}


def bernoulli(index: int, method: Method | str = Method.ORACLE) -> BernoulliValue:
    """B_index by the named method; ``eq1``/``eq2`` need index >= 2, ``eq3``/``eq4`` index >= 1."""
    method = Method(method)
    if method is Method.ORACLE:
        return bernoulli_oracle(index)
    fn, shift = _BY_METHOD[method]
    return fn(index - shift)


# -- zeta, Bernoulli polynomials, Hurwitz zeta -----------------------------


def zeta_neg_int(r: int) -> Fraction:
    """zeta(-r) = (-1)^r B_{r+1} / (r+1)."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    return sign_pow(r) * bernoulli_oracle(r + 1).value / (r + 1)


@dataclass(frozen=True)
class BernoulliPolynomial:
    """B_m(a) with ``coefficients[i]`` the coefficient of ``a**i``."""

    degree: int
    coefficients: tuple[Fraction, ...]

    def __call__(self, a: Fraction | int) -> Fraction:
        a = Fraction(a)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * a + c
        return acc


def bernoulli_poly(m: int) -> BernoulliPolynomial:
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    # coefficient of a^(m-i) is C(m, i) B_i
    coeffs = [binomial(m, m - p) * bernoulli_oracle(m - p).value for p in range(m + 1)]
    return BernoulliPolynomial(m, tuple(coeffs))


def hurwitz_zeta_neg_int(r: int, a: Fraction | int) -> Fraction:
    """zeta(-r, a) = -B_{r+1}(a) / (r+1) for a > 0."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    a = Fraction(a)
    if a <= 0:
        raise ValueError(f"Hurwitz parameter must be positive, got {a}")
    return -bernoulli_poly(r + 1)(a) / (r + 1)


def faulhaber_check(r: int, n: int) -> tuple[Fraction, Fraction]:
    """Return (sum_{k<=n} k^r, zeta(-r) - zeta(-r, n+1)); they should be equal."""
    if r < 1 or n < 1:
        raise ValueError(f"need r >= 1 and n >= 1, got r={r}, n={n}")
    lhs = Fraction(sum(k**r for k in range(1, n + 1)))
    rhs = zeta_neg_int(r) - hurwitz_zeta_neg_int(r, n + 1)
    return lhs, rhs


# -- von Staudt-Clausen ----------------------------------------------------


def primes_up_to(n: int) -> list[int]:
    """Primes <= n by trial division."""
    out: list[int] = []
    for c in range(2, n + 1):
        if all(c % p for p in out if p * p <= c):
            out.append(c)
    return out


def von_staudt_clausen_sum(n: int) -> Fraction:
    """Sum of 1/p over primes p with (p - 1) | n; B_n plus this is an integer for even n >= 2."""
    if n < 2 or n % 2:
        raise ValueError(f"need an even index >= 2, got {n}")
    return sum((Fraction(1, p) for p in primes_up_to(n + 1) if n % (p - 1) == 0), Fraction(0))
