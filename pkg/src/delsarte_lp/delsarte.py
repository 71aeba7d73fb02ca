"""Delsarte's linear programs for binary codes.

Two families are built from ``(n, d)``:

* ``min_distance``: pairwise distances at least ``d`` (value ``A_LP(n, d)``);
* ``almost_balanced``: pairwise distances in ``[d, n - d]`` (value ``B_LP(n, d)``).

Primal variables are the distance distribution ``a_0..a_n``; dual variables
are the Krawtchouk coefficients ``beta_0..beta_n`` of a polynomial
``beta(x) = sum_k beta_k K_k(x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .krawtchouk import build_table
from .lp import GE, LE, Constraint, LpProblem, solve_exact
from .numeric import binomial, isqrt_floor

MIN_DISTANCE = "min_distance"
ALMOST_BALANCED = "almost_balanced"
_ALIASES = {
    "min": MIN_DISTANCE,
    MIN_DISTANCE: MIN_DISTANCE,
    "balanced": ALMOST_BALANCED,
    ALMOST_BALANCED: ALMOST_BALANCED,
}


class LpSolveError(RuntimeError):
    """The solver disagreed with itself (primal vs dual) or failed outright."""


def normalize_mode(mode: str) -> str:
    try:
        return _ALIASES[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}") from None


def _check_nd(n: int, d: int) -> None:
    if n < 1:
        raise ValueError(f"block length must be positive, got n={n}")
    if not 1 <= d <= n:
        raise ValueError(f"distance must satisfy 1 <= d <= n, got n={n}, d={d}")


def zero_indices(n: int, d: int, mode: str) -> list[int]:
    """Distances that cannot occur in a code of the given kind."""
    mode = normalize_mode(mode)
    idx = list(range(1, d))
    if mode == ALMOST_BALANCED:
        idx += [k for k in range(max(d, n - d + 1), n + 1)]
    return idx


def dual_range(n: int, d: int, mode: str) -> range:
    """Points u where the dual polynomial must be non-positive."""
    mode = normalize_mode(mode)
    return range(d, n + 1) if mode == MIN_DISTANCE else range(d, n - d + 1)


def in_grey_rankin_domain(n: int, d: int) -> bool:
    """Even n, even d, d <= n/2 and d >= (n - sqrt(n))/2 + 1, decided in integers."""
    if n < 2 or d < 1 or n % 2 or d % 2 or 2 * d > n:
        return False
    gap = n - 2 * d + 2
    return gap < 0 or gap * gap <= n


@dataclass(frozen=True)
class DistanceDistribution:
    n: int
    a: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.a) != self.n + 1:
            raise ValueError("distance distribution needs n + 1 entries")

    @property
    def size(self) -> Fraction:
        return sum(self.a, Fraction(0))

    def macwilliams(self) -> tuple[Fraction, ...]:
        """sum_k a_k K_s(k) for s = 0..n."""
        t = build_table(self.n)
        return tuple(
            sum((ak * t(s, k) for k, ak in enumerate(self.a) if ak), Fraction(0))
            for s in range(self.n + 1)
        )


@dataclass(frozen=True)
class DualPolynomial:
    n: int
    beta: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.beta) != self.n + 1:
            raise ValueError("dual polynomial needs n + 1 coefficients")

    def __call__(self, u: int) -> Fraction:
        t = build_table(self.n)
        return sum((b * t(k, u) for k, b in enumerate(self.beta) if b), Fraction(0))

    @property
    def value_at_zero(self) -> Fraction:
        return sum(
            (b * binomial(self.n, k) for k, b in enumerate(self.beta) if b), Fraction(0)
        )


def build_primal(n: int, d: int, mode: str) -> LpProblem:
    """Maximize sum a_k subject to the MacWilliams rows and the mode's zero fixings."""
    _check_nd(n, d)
    mode = normalize_mode(mode)
    t = build_table(n)
    rows = tuple(
        Constraint(tuple(Fraction(t(s, k)) for k in range(n + 1)), GE, Fraction(0), f"s={s}")
        for s in range(n + 1)
    )
    fixed = ((0, Fraction(1)),) + tuple((k, Fraction(0)) for k in zero_indices(n, d, mode))
    return LpProblem(n + 1, (Fraction(1),) * (n + 1), "max", rows, fixed, True)


def build_dual(n: int, d: int, mode: str) -> LpProblem:
    """Minimize beta(0) over beta >= 0, beta_0 = 1, beta(u) <= 0 on the mode's range.

    For ``almost_balanced`` with d > n/2 the range is empty and the LP has
    no rows.
    """
    _check_nd(n, d)
    mode = normalize_mode(mode)
    t = build_table(n)
    rows = tuple(
        Constraint(tuple(Fraction(t(k, u)) for k in range(n + 1)), LE, Fraction(0), f"u={u}")
        for u in dual_range(n, d, mode)
    )
    obj = tuple(Fraction(binomial(n, k)) for k in range(n + 1))
    return LpProblem(n + 1, obj, "min", rows, ((0, Fraction(1)),), True)


def solve_pair(n: int, d: int, mode: str):
    """Solve primal and dual; raise if their optima differ."""
    p = solve_exact(build_primal(n, d, mode))
    q = solve_exact(build_dual(n, d, mode))
    if not (p.optimal and q.optimal):
        raise LpSolveError(f"non-optimal status for (n={n}, d={d}, {mode}): {p.status}/{q.status}")
    if p.objective_value != q.objective_value:
        raise LpSolveError(
            f"primal {p.objective_value} != dual {q.objective_value} at (n={n}, d={d}, {mode})"
        )
    return p, q


def a_lp(n: int, d: int) -> Fraction:
    """Delsarte LP bound on codes of length n and minimum distance d."""
    return solve_pair(n, d, MIN_DISTANCE)[0].objective_value


def b_lp(n: int, d: int) -> Fraction:
    """Delsarte LP bound on almost-balanced codes (distances in [d, n-d])."""
    return solve_pair(n, d, ALMOST_BALANCED)[0].objective_value


VERIFIED = "verified"
NOT_APPLICABLE = "not_applicable"
FAILED = "failed"


@dataclass(frozen=True)
class BoundReport:
    n: int
    d: int
    mode: str
    lp_value: Fraction | None
    closed_form: Fraction | None
    certificate_status: str
    lower_bound_witness: Fraction | None
    notes: tuple[str, ...] = ()


def bound_report(n: int, d: int, mode: str, *, solve_lp: bool = True) -> BoundReport:
    """Everything known about (n, d): LP optimum, Grey-Rankin value, witness.

    ``solve_lp=False`` skips the simplex and leaves ``lp_value`` unset; the
    certificate is then checked on its own.
    """
    from .certificates import build_certificate, grey_rankin_value, verify_all
    from .samorodnitsky import WitnessInfeasibleError, lp_lower_bound

    _check_nd(n, d)
    mode = normalize_mode(mode)
    notes = []
    lp_value = None
    if solve_lp:
        lp_value = solve_pair(n, d, mode)[0].objective_value

    closed = None
    status = NOT_APPLICABLE
    witness = None
    if mode == ALMOST_BALANCED:
        if 2 * d > n:
            notes.append("d > n/2: no distance in [d, n-d]; only the zero codeword pair survives")
        if in_grey_rankin_domain(n, d):
            closed = grey_rankin_value(n, d)
            ok = verify_all(build_certificate(n, d)).passed
            if lp_value is not None and lp_value != closed:
                ok = False
            status = VERIFIED if ok else FAILED
        if 2 * d < n:
            try:
                witness = lp_lower_bound(n, d)
            except WitnessInfeasibleError as exc:
                notes.append(str(exc))
            if witness is not None and lp_value is not None and witness > lp_value:
                status = FAILED
                notes.append("lower-bound witness exceeds the LP optimum")
    return BoundReport(n, d, mode, lp_value, closed, status, witness, tuple(notes))
