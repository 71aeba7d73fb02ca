# %% [markdown]
# # Asymptotic rate curves
#
# Gilbert-Varshamov, the first MRRW bound and their average, which bounds
# the LP rate of almost-balanced codes from below.

# %%
import numpy as np

from delsarte_lp.asymptotics import rate_table, rates_to_csv, x_d_asymptotic
from delsarte_lp.krawtchouk import first_root

print(rates_to_csv(rate_table(np.linspace(0.05, 0.45, 9))))

# %% [markdown]
# Leading-order location of the first Krawtchouk root against the exact one.

# %%
for n in (32, 64, 128):
    d = n // 4
    b = first_root(n, d, 1 << 12)
    print(n, d, "exact ~", float(b.low), "leading term", x_d_asymptotic(d / n, n))
