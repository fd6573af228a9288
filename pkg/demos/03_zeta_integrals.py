# %% [markdown]
# # Zeta values from integrals of Li_{-r}(-x)
#
# Each integral over (0, inf) is evaluated by adaptive Gauss-Kronrod and
# compared with the exact rational value of zeta(-r) (times pi/sin(n pi)
# for the Hurwitz identity).

# %%
import numpy as np

from bernoulli_explicit import run_suite, verify_eq6

rep = verify_eq6(1e-10)
print("zeta(0) by quadrature:", rep.estimate, "exact:", rep.exact_target)

# %%
reports = run_suite(max_r=8, tol=1e-8)
errs = np.array([r.abs_err for r in reports])
for r in reports:
    n = "" if r.n is None else f" n={r.n}"
    print(f"{r.identity.value:<5} r={r.r}{n:<7} target={r.target:+.15f} err={r.abs_err:.1e} evals={r.evaluations}")
print(f"all passed: {all(r.passed for r in reports)}; worst error {errs.max():.2e}")
