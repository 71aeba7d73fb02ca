# %% [markdown]
# # The Grey-Rankin value is the exact LP optimum at large distance
#
# For even n, d with (n - sqrt n)/2 + 1 <= d <= n/2 a quadratic dual and a
# two-point primal are optimal.  Both are built in closed form and checked by
# direct evaluation, then compared against the simplex.

# %%
from delsarte_lp import b_lp, build_certificate, check_kraw_growth_bounds, grey_rankin_value, verify_all
from delsarte_lp.delsarte import in_grey_rankin_domain

cert = build_certificate(36, 16)
print("beta:", {k: str(b) for k, b in enumerate(cert.beta.beta) if b})
print("alpha:", {k: str(a) for k, a in enumerate(cert.alpha.a) if a})
for rep in verify_all(cert).reports:
    print(f"{rep.name:26s} passed={rep.passed}  tightest={rep.tightest.label} ({rep.tightest.slack})")

# %%
print(" n  d  closed-form  simplex")
for n in range(4, 41, 2):
    for d in range(2, n // 2 + 1, 2):
        if in_grey_rankin_domain(n, d):
            print(f"{n:2d} {d:2d}  {str(grey_rankin_value(n, d)):>11}  {str(b_lp(n, d)):>7}")

# %% [markdown]
# The proof bounds every |K_s(d)| by C * C(n, s) with C = |K_2(d)| / C(n, 2);
# the smallest margin over the range is printed here.

# %%
for n, d in [(16, 8), (36, 16), (60, 28)]:
    rep = check_kraw_growth_bounds(n, d)
    print(n, d, "C =", rep.c, "tightest:", rep.tightest.label, float(rep.tightest.slack))
