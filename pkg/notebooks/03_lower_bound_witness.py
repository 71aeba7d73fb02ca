# %% [markdown]
# # A feasible primal point and the lower bound it certifies
#
# The point spreads mass eps * C(n, k) over distances d..n-d (with extra
# weight at the ends).  eps depends on the smallest root of K_d.

# %%
from delsarte_lp import b_lp, build_witness
from delsarte_lp.numeric import log2_rational
from delsarte_lp.samorodnitsky import WitnessInfeasibleError, feasible_scale_limit

w = build_witness(20, 6)
print("root bracket of K_6:", w.x_d_bracket.low, w.x_d_bracket.high, "floor", w.x_floor)
print("eps lower", float(w.epsilon_lower))
print("witness", float(w.objective), "<= B_LP", b_lp(20, 6))

# %% [markdown]
# For odd d the last MacWilliams row evaluates to
# 1 - 2 eps (C(n-1, d-1) + d C(n, d)), which turns negative once n is
# moderately large.  The unclipped witness is then rejected; `clip=True`
# shrinks the scale to the largest feasible value.

# %%
for n, d in [(20, 7), (22, 7), (30, 9)]:
    try:
        build_witness(n, d)
        print(n, d, "feasible")
    except WitnessInfeasibleError as exc:
        clipped = build_witness(n, d, clip=True)
        print(n, d, "infeasible;", "scale limit", float(feasible_scale_limit(n, d)),
              "clipped bound", float(clipped.objective), "B_LP", float(b_lp(n, d)))

# %%
for n in (10, 20, 30):
    d = n // 5
    print(n, d, "rate of witness", log2_rational(build_witness(n, d, clip=True).objective) / n)
