"""Exact Bernoulli numbers from Stirling and Eulerian sums, with zeta-integral checks."""

from .bernoulli import (
    BernoulliPolynomial,
    BernoulliValue,
    Method,
    bernoulli,
    bernoulli_eq1,
    bernoulli_eq2,
    bernoulli_eq3,
    bernoulli_eq4,
    bernoulli_oracle,
    bernoulli_poly,
    faulhaber_check,
    hurwitz_zeta_neg_int,
    von_staudt_clausen_sum,
    zeta_neg_int,
)
from .polylog import (
    GeneralizedHarmonic,
    RationalFunction,
    forms_equal,
    generalized_harmonic,
    harmonic_partial_sum,
    polylog_eulerian_form,
    polylog_eval_exact,
    polylog_stirling_form,
    theta_form,
)
from .quadrature import (
    QuadratureError,
    QuadratureResult,
    VerificationReport,
    integrate_zero_to_inf,
    run_suite,
    verify_eq5,
    verify_eq6,
    verify_eq10,
    verify_eq11,
)
from .rational_core import binomial, factorial, format_rational, parse_rational, pow2
from .tables import (
    EulerianTable,
    StirlingTable,
    build_eulerian,
    build_stirling,
    eulerian,
    stirling2,
)

__version__ = "0.1.0"
