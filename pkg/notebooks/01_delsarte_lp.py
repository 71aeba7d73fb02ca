# %% [markdown]
# # Delsarte's LP for binary codes, solved exactly
#
# Krawtchouk values form the constraint matrix.  Both the min-distance LP
# and its almost-balanced variant are solved with the exact rational simplex,
# and the primal and dual optima agree to the last digit.

# %%
from delsarte_lp import a_lp, b_lp, build_table
from delsarte_lp.delsarte import ALMOST_BALANCED, build_dual, build_primal
from delsarte_lp.lp import check_dual, dual_objective, solve_exact

t = build_table(8)
for s in range(9):
    print(f"K_{s}:", t.row(s))

# %% [markdown]
# A(n, d) versus B(n, d) bounds for n = 16.  Restricting distances to
# [d, n-d] can only shrink the LP optimum.

# %%
n = 16
for d in range(1, n // 2 + 1):
    print(f"d={d:2d}  A_LP={str(a_lp(n, d)):>14}  B_LP={str(b_lp(n, d)):>14}")

# %% [markdown]
# The solver returns dual multipliers with every optimum; they certify the
# value independently of the pivoting path.

# %%
prob = build_primal(20, 8, ALMOST_BALANCED)
sol = solve_exact(prob)
print("value", sol.objective_value)
print("dual objective", dual_objective(prob, sol.dual))
print("dual feasible", check_dual(prob, sol.dual).feasible)
print("minimization form", solve_exact(build_dual(20, 8, ALMOST_BALANCED)).objective_value)
