# %% [markdown]
# # Li_{-r}(-x) as a rational function
#
# The Stirling and Eulerian expansions give the same numerator over
# (1+x)^{r+1}; both agree with repeated application of x d/dx to
# Li_0(-x) = -x/(1+x).

# %%
from fractions import Fraction

from bernoulli_explicit import (
    harmonic_partial_sum,
    polylog_eulerian_form,
    polylog_eval_exact,
    polylog_stirling_form,
    theta_form,
)

for r in range(0, 6):
    s = polylog_stirling_form(r)
    same = r == 0 or s == polylog_eulerian_form(r)
    print(f"r={r}: {s}   eulerian agrees: {same}   theta agrees: {s == theta_form(r)}")

# %% [markdown]
# Partial sums of sum_n H_n^(-r) (-x)^n approach Li_{-r}(-x)/(1+x).
# The tail shrinks like n^(r+1) 2^-n at x = 1/2, so larger r needs more terms.

# %%
x = Fraction(1, 2)
for r in range(1, 6):
    target = polylog_eval_exact(r, x) / (1 + x)
    errs = [float(abs(harmonic_partial_sum(r, x, N) - target)) for N in (16, 32, 64, 128)]
    print(f"r={r}: " + "  ".join(f"N={N}:{e:.1e}" for N, e in zip((16, 32, 64, 128), errs)))
