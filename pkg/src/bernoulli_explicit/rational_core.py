"""Exact integer/rational helpers shared by every formula.

Python ``int`` is already arbitrary precision and :class:`fractions.Fraction`
is kept in lowest terms with a positive denominator, so those two types are
the big-integer and big-rational value types of this package.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "Fraction",
    "factorial",
    "binomial",
    "pow2",
    "sign_pow",
    "format_rational",
    "parse_rational",
]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pow2(e: int) -> Fraction:
    """2**e as an exact rational; ``e`` may be negative."""
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)


def sign_pow(e: int) -> int:
    """(-1)**e for integer e."""
    return -1 if e & 1 else 1


def format_rational(q: Fraction | int) -> str:
    """Serialize as ``num/den`` (reduced); integers drop the ``/1``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`. Accepts ``a/b`` or ``a``."""
    text = text.strip().replace("−", "-")
    if not text:
        raise ValueError("empty rational")
    num, _, den = text.partition("/")
    try:
        value = Fraction(int(num), int(den)) if den else Fraction(int(num))
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    return value
