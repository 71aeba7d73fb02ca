"""Explicit feasible point of the almost-balanced primal LP, giving a lower bound on B_LP.

With ``x_d`` the smallest root of ``K_d`` the scale is

    eps = (1 / 4n) * sqrt( C(n, floor x_d) / (2^n C(n, d)) )

and the point puts ``eps (d+1) C(n,d)`` on distances ``d`` and ``n-d`` and
``eps C(n,k)`` strictly between them.  ``eps`` is irrational in general, so
a rational ``r`` with ``eps/2 <= r <= eps`` is used instead.  Every
MacWilliams row is affine in the scale and nonnegative at 0, so shrinking
the scale cannot break feasibility; it is still checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .delsarte import ALMOST_BALANCED, DistanceDistribution, build_primal
from .krawtchouk import RootBracket, first_root, first_root_floor
from .lp import FeasibilityReport, check_point
from .numeric import binomial, isqrt_floor

# scale r is accurate to eps * 2**-PRECISION_BITS (spec only needs r >= eps/2)
PRECISION_BITS = 16


class WitnessInfeasibleError(RuntimeError):
    pass


def _check_range(n: int, d: int) -> None:
    if not 1 <= d or 2 * d >= n:
        raise ValueError(f"witness needs 1 <= d < n/2, got n={n}, d={d}")


def epsilon_squared(n: int, d: int, x_floor: int | None = None) -> Fraction:
    """The exact rational eps^2."""
    _check_range(n, d)
    if x_floor is None:
        x_floor = first_root_floor(n, d)
    return Fraction(binomial(n, x_floor), 16 * n * n * 2**n * binomial(n, d))


def epsilon_lower(n: int, d: int, x_floor: int | None = None) -> Fraction:
    """Rational r with r^2 <= eps^2 and r >= eps/2."""
    e2 = epsilon_squared(n, d, x_floor)
    num, den = e2.numerator, e2.denominator
    # r = isqrt(floor(e2 * S^2)) / S satisfies eps - 1/S < r <= eps, so any
    # S >= 2**PRECISION_BITS / eps works; pick S a power of two
    k = 0
    while (1 << (2 * k)) * num < den * (1 << (2 * PRECISION_BITS)):
        k += 1
    scale = 1 << k
    r = Fraction(isqrt_floor(num * scale * scale // den), scale)
    assert r * r <= e2 and 4 * r * r >= e2 and r > 0
    return r


def witness_vector(n: int, d: int, eps: Fraction) -> tuple[Fraction, ...]:
    a = [Fraction(0)] * (n + 1)
    a[0] = Fraction(1)
    a[d] = a[n - d] = eps * (d + 1) * binomial(n, d)
    for k in range(d + 1, n - d):
        a[k] = eps * binomial(n, k)
    return tuple(a)


@dataclass(frozen=True)
class SamorodnitskyWitness:
    n: int
    d: int
    x_d_bracket: RootBracket
    x_floor: int
    epsilon_lower: Fraction
    a: DistanceDistribution
    objective: Fraction
    feasibility: FeasibilityReport

    @property
    def feasible(self) -> bool:
        return self.feasibility.feasible


def feasible_scale_limit(n: int, d: int) -> Fraction | None:
    """Largest scale t keeping ``witness_vector(n, d, t)`` feasible (None: any t).

    Row s reads ``C(n,s) + t * g_s``, so the limit is the smallest
    ``C(n,s) / -g_s`` over rows with ``g_s < 0``.
    """
    _check_range(n, d)
    slopes = DistanceDistribution(n, (Fraction(0),) + witness_vector(n, d, Fraction(1))[1:]).macwilliams()
    limits = [Fraction(binomial(n, s)) / -g for s, g in enumerate(slopes) if g < 0]
    return min(limits) if limits else None


def build_witness(
    n: int, d: int, epsilon: Fraction | None = None, *, clip: bool = False
) -> SamorodnitskyWitness:
    """Build and exactly verify the feasible point.

    ``epsilon`` overrides the certified scale (e.g. 0 or a smaller value);
    it must not exceed the certified one.  With ``clip=True`` the scale is
    additionally capped at :func:`feasible_scale_limit`; for odd ``d`` the
    uncapped point can violate the rows with s close to n.
    """
    _check_range(n, d)
    bracket = first_root(n, d, 1)
    x_floor = first_root_floor(n, d)
    r = epsilon_lower(n, d, x_floor)
    if epsilon is not None:
        epsilon = Fraction(epsilon)
        if not 0 <= epsilon <= r:
            raise ValueError(f"override scale must lie in [0, {r}]")
        r = epsilon
    if clip:
        limit = feasible_scale_limit(n, d)
        if limit is not None and limit < r:
            r = limit
    a = witness_vector(n, d, r)
    report = check_point(build_primal(n, d, ALMOST_BALANCED), a)
    if not report.feasible:
        v = report.violations[0]
        raise WitnessInfeasibleError(f"witness infeasible at (n={n}, d={d}): {v.kind} {v.label} slack {v.slack}")
    return SamorodnitskyWitness(n, d, bracket, x_floor, r, DistanceDistribution(n, a), sum(a, Fraction(0)), report)


def lp_lower_bound(n: int, d: int, *, clip: bool = False) -> Fraction:
    """A certified lower bound on B_LP(n, d) for 1 <= d < n/2."""
    return build_witness(n, d, clip=clip).objective
