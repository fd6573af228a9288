# %% [markdown]
# # Bernoulli numbers four ways
#
# Two sums over Stirling numbers of the second kind and two over Eulerian
# numbers, all in exact rational arithmetic, compared with the classical
# recurrence.

# %%
from bernoulli_explicit import (
    bernoulli_eq1,
    bernoulli_eq2,
    bernoulli_eq3,
    bernoulli_eq4,
    bernoulli_oracle,
    build_eulerian,
    build_stirling,
    format_rational,
    von_staudt_clausen_sum,
)

R = 16
S = build_stirling(R)
E = build_eulerian(R)

# %%
# eq1/eq2 return B_{r+1}; eq3/eq4 return B_r
print(f"{'index':>5}  {'eq1':>14} {'eq2':>14} {'eq3':>14} {'eq4':>14} {'oracle':>14}")
for r in range(1, R + 1):
    row = [
        bernoulli_eq1(r - 1, S).value if r >= 2 else None,
        bernoulli_eq2(r - 1, E).value if r >= 2 else None,
        bernoulli_eq3(r, S).value,
        bernoulli_eq4(r, E).value,
        bernoulli_oracle(r).value,
    ]
    cells = ["-" if v is None else format_rational(v) for v in row]
    print(f"{r:>5}  " + " ".join(f"{c:>14}" for c in cells))

# %% [markdown]
# Denominator fingerprint: B_2m plus the sum of 1/p over primes with
# (p - 1) | 2m is always an integer.

# %%
for n in range(2, 31, 2):
    b = bernoulli_oracle(n).value
    print(n, format_rational(b), "->", format_rational(b + von_staudt_clausen_sum(n)))
