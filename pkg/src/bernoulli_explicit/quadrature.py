"""Numerical checks of the zeta integral representations at s = -r.

Every integral here runs over (0, inf).  It is split at x = 1; the head is
mapped by x = u**p and the tail by x = t**(-q), then each piece is
integrated on (0, 1] with a globally adaptive 7/15-point Gauss-Kronrod
rule.  Picking p and q from the algebraic endpoint behaviour of the
integrand makes both pieces analytic, so the Kronrod error estimate is
reliable.
"""

from __future__ import annotations

import enum
import heapq
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .bernoulli import hurwitz_zeta_neg_int, zeta_neg_int
from .polylog import RationalFunction, polylog_stirling_form
from .rational_core import format_rational

__all__ = [
    "QuadratureError",
    "QuadratureResult",
    "Identity",
    "VerificationReport",
    "integrate_unit",
    "integrate_zero_to_inf",
    "verify_eq5",
    "verify_eq6",
    "verify_eq10",
    "verify_eq11",
    "run_suite",
    "DEFAULT_TOL",
    "MAX_QUAD_ORDER",
]

DEFAULT_TOL = 1e-8
DEFAULT_MAX_EVALS = 10**6
# Horner in double precision on numerators whose coefficients grow like r!
MAX_QUAD_ORDER = 10

# Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK qk15).
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KWEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
# Gauss nodes are the odd-indexed Kronrod nodes (1, 3, 5, 7 from the edge)
_GWEIGHTS = np.zeros(15)
_GWEIGHTS[[1, 3, 5]] = _WG[:3]
_GWEIGHTS[[9, 11, 13]] = _WG[2::-1]
_GWEIGHTS[7] = _WG[3]


class QuadratureError(RuntimeError):
    """Raised when the error estimate is still above tolerance after the budget."""

    def __init__(self, message: str, result: "QuadratureResult") -> None:
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class QuadratureResult:
    estimate: float
    est_error: float
    evaluations: int

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(
            self.estimate + other.estimate,
            self.est_error + other.est_error,
            self.evaluations + other.evaluations,
        )


def _gk15(g: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    vals = np.fromiter((g(mid + half * z) for z in _NODES), dtype=float, count=15)
    kron = half * float(_KWEIGHTS @ vals)
    gauss = half * float(_GWEIGHTS @ vals)
    return kron, abs(kron - gauss)


def integrate_unit(
    g: Callable[[float], float], tol: float, max_evals: int = DEFAULT_MAX_EVALS
) -> QuadratureResult:
    """Adaptive Gauss-Kronrod on [0, 1]; ``g`` is never evaluated at the endpoints."""
    est, err = _gk15(g, 0.0, 1.0)
    evals = 15
    heap = [(-err, 0.0, 1.0, est)]
    total_est, total_err = est, err
    while total_err > tol and evals + 30 <= max_evals:
        neg_err, a, b, est = heapq.heappop(heap)
        m = 0.5 * (a + b)
        if not a < m < b:
            # interval exhausted at double resolution; keep its estimate as is
            heapq.heappush(heap, (neg_err, a, b, est))
            break
        left, lerr = _gk15(g, a, m)
        right, rerr = _gk15(g, m, b)
        evals += 30
        heapq.heappush(heap, (-lerr, a, m, left))
        heapq.heappush(heap, (-rerr, m, b, right))
        total_est += left + right - est
        total_err += lerr + rerr + neg_err
    # re-sum to shed accumulated drift from the running totals
    total_est = math.fsum(item[3] for item in heap)
    total_err = math.fsum(-item[0] for item in heap)
    result = QuadratureResult(total_est, total_err, evals)
    if total_err > tol:
        raise QuadratureError(
            f"no convergence: error estimate {total_err:.3e} > tol {tol:.3e} after {evals} evaluations",
            result,
        )
    return result


def integrate_zero_to_inf(
    f: Callable[[float], float],
    tol: float = 1e-10,
    *,
    head_power: int = 2,
    tail_power: int = 1,
    max_evals: int = DEFAULT_MAX_EVALS,
) -> QuadratureResult:
    """Integral of ``f`` over (0, inf).

    ``[0, 1]`` is mapped with x = u**head_power and ``[1, inf)`` with
    x = t**(-tail_power).  The defaults suit integrands with an x**(-1/2)
    singularity at 0 and x**(-2) decay.  For f ~ x**(c-1) near 0 use a
    head_power that makes head_power*c an integer; likewise for the tail.
    """
    p, q = head_power, tail_power
    if p < 1 or q < 1:
        raise ValueError("substitution powers must be >= 1")

    def head(u: float) -> float:
        return p * u ** (p - 1) * f(u**p)

    def tail(t: float) -> float:
        return q * t ** (-q - 1) * f(t ** (-q))

    budget = max_evals // 2
    return integrate_unit(head, tol / 2, budget) + integrate_unit(tail, tol / 2, budget)


# -- verification reports --------------------------------------------------


class Identity(str, enum.Enum):
    EQ5 = "EQ5"
    EQ6 = "EQ6"
    EQ10 = "EQ10"
    EQ11 = "EQ11"


@dataclass(frozen=True)
class VerificationReport:
    """Quadrature estimate against ``factor * exact_target``.

    ``factor`` is 1.0 except for EQ11, where it carries pi/sin(n pi).
    ``error`` holds the quadrature failure message, if any.
    """

    identity: Identity
    r: int
    n: Fraction | None
    exact_target: Fraction
    factor: float
    estimate: float
    abs_err: float
    tolerance: float
    passed: bool
    evaluations: int = 0
    error: str | None = None

    @property
    def target(self) -> float:
        return self.factor * float(self.exact_target)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["identity"] = self.identity.value
        d["n"] = None if self.n is None else format_rational(self.n)
        d["exact_target"] = format_rational(self.exact_target)
        for key in ("factor", "estimate", "abs_err", "tolerance"):
            d[key] = float(format(d[key], ".17g"))
        d["target"] = float(format(self.target, ".17g"))
        return d


def _li_float(rf: RationalFunction, x: float) -> float:
    return rf.evaluate_float(x) if x <= 1.0 else rf.evaluate_reciprocal_float(1.0 / x)


def _check_order(r: int, lo: int) -> None:
    if not lo <= r <= MAX_QUAD_ORDER:
        raise ValueError(f"r must lie in {lo}..{MAX_QUAD_ORDER}, got {r}")


def _report(identity, r, n, exact, factor, scale, tol, integrand, p, q) -> VerificationReport:
    target = factor * float(exact)
    try:
        res = integrate_zero_to_inf(integrand, tol * scale / 10, head_power=p, tail_power=q)
    except QuadratureError as exc:
        est = exc.result.estimate / scale
        return VerificationReport(identity, r, n, exact, factor, est, abs(est - target), tol,
                                  False, exc.result.evaluations, str(exc))
    est = res.estimate / scale
    abs_err = abs(est - target)
    return VerificationReport(identity, r, n, exact, factor, est, abs_err, tol,
                              abs_err <= tol, res.evaluations)


def verify_eq5(r: int, tol: float = DEFAULT_TOL, *, _identity: Identity = Identity.EQ5) -> VerificationReport:
    """zeta(-r) against (1/(pi (2 - 2^-r))) * int x^{-1/2} Li_{-r}(-x)/(1+x) dx."""
    _check_order(r, 0)
    rf = polylog_stirling_form(r)
    scale = math.pi * (2.0 - 2.0**-r)

    def integrand(x: float) -> float:
        return _li_float(rf, x) / (math.sqrt(x) * (1.0 + x))

    return _report(_identity, r, None, zeta_neg_int(r), 1.0, scale, tol, integrand, 2, 2)


def verify_eq6(tol: float = DEFAULT_TOL) -> VerificationReport:
    """zeta(0) = -1/2 from (1/pi) int x^{-1/2} Li_0(-x)/(1+x) dx."""
    return verify_eq5(0, tol, _identity=Identity.EQ6)


def verify_eq10(r: int, tol: float = DEFAULT_TOL) -> VerificationReport:
    """zeta(1-r) against (1/r) int Li_{-r}(-x)/(x (1+x)) dx."""
    _check_order(r, 1)
    rf = polylog_stirling_form(r)

    def integrand(x: float) -> float:
        return _li_float(rf, x) / (x * (1.0 + x))

    return _report(Identity.EQ10, r, None, zeta_neg_int(r - 1), 1.0, float(r), tol, integrand, 1, 1)


def verify_eq11(r: int, n: Fraction | str, tol: float = DEFAULT_TOL) -> VerificationReport:
    """int x^{n-1} Li_{-r}(-x)/(1+x) dx against (pi/sin(n pi)) (zeta(-r) - zeta(-r, 1-n))."""
    if not 0 <= r <= 6:
        raise ValueError(f"r must lie in 0..6, got {r}")
    n = Fraction(n)
    if not 0 < n < 1:
        raise ValueError(f"n must lie in (0, 1), got {n}")
    rf = polylog_stirling_form(r)
    exact = zeta_neg_int(r) - hurwitz_zeta_neg_int(r, 1 - n)
    factor = math.pi / math.sin(math.pi * float(n))
    nf = float(n)

    def integrand(x: float) -> float:
        return x ** (nf - 1.0) * _li_float(rf, x) / (1.0 + x)

    # x^(n-1) near 0 and x^(n-2) (r=0) or x^(n-3) near inf both become
    # analytic once the substitution power is the denominator of n
    p = n.denominator
    return _report(Identity.EQ11, r, n, exact, factor, 1.0, tol, integrand, p, p)


EQ11_GRID = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))


def run_suite(max_r: int = 8, tol: float = DEFAULT_TOL) -> list[VerificationReport]:
    """EQ5 for r = 0..max_r, EQ10 for r = 1..max_r, EQ11 on r = 0..min(max_r, 6) x {1/2, 1/3, 1/4}."""
    if max_r < 0:
        raise ValueError(f"max_r must be >= 0, got {max_r}")
    reports = [verify_eq5(r, tol) for r in range(max_r + 1)]
    reports += [verify_eq10(r, tol) for r in range(1, max_r + 1)]
    reports += [verify_eq11(r, n, tol) for r in range(min(max_r, 6) + 1) for n in EQ11_GRID]
    return reports
