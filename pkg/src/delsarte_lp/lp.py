"""Exact rational linear programming.

A small dense two-phase simplex over :class:`fractions.Fraction` with Bland's
anti-cycling rule.  Dual multipliers are read off the final tableau, so every
optimal solve comes with a certificate that :func:`check_dual` can audit
without trusting the solver.

Dual sign convention: a multiplier is the shadow price of its row's right
hand side.  For a maximization, ``<=`` rows get multipliers >= 0 and ``>=``
rows multipliers <= 0; a minimization flips both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

LE = "<="
GE = ">="

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction = Fraction(0)
    label: str = ""

    def lhs(self, point: Sequence[Fraction]) -> Fraction:
        return sum((c * x for c, x in zip(self.coeffs, point) if c), Fraction(0))

    def slack(self, point: Sequence[Fraction]) -> Fraction:
        """Nonnegative iff the row holds at ``point``."""
        v = self.lhs(point)
        return v - self.rhs if self.relation == GE else self.rhs - v


@dataclass(frozen=True)
class LpProblem:
    """Optimize ``objective . x`` over rows, variable fixings and (optionally) x >= 0."""

    num_vars: int
    objective: tuple[Fraction, ...]
    sense: str = "max"
    rows: tuple[Constraint, ...] = ()
    fixed: tuple[tuple[int, Fraction], ...] = ()
    nonneg: bool = True

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("an LP needs at least one variable")
        if self.sense not in ("max", "min"):
            raise ValueError(f"sense must be 'max' or 'min', got {self.sense!r}")
        if len(self.objective) != self.num_vars:
            raise ValueError("objective length does not match num_vars")
        for row in self.rows:
            if len(row.coeffs) != self.num_vars:
                raise ValueError(f"row {row.label or row} has the wrong length")
            if row.relation not in (LE, GE):
                raise ValueError(f"unknown relation {row.relation!r}")
        idx = [i for i, _ in self.fixed]
        if len(set(idx)) != len(idx):
            raise ValueError("fixed variable indices must be distinct")
        if any(not 0 <= i < self.num_vars for i in idx):
            raise ValueError("fixed variable index out of range")

    @classmethod
    def build(cls, objective, rows=(), *, sense="max", fixed=(), nonneg=True):
        """Convenience constructor accepting plain numbers.

        ``rows`` holds ``(coeffs, relation)`` or ``(coeffs, relation, rhs)``
        or ``(coeffs, relation, rhs, label)`` tuples.
        """
        obj = tuple(Fraction(c) for c in objective)
        cons = []
        for r in rows:
            coeffs, rel, *rest = r
            rhs = Fraction(rest[0]) if rest else Fraction(0)
            label = rest[1] if len(rest) > 1 else ""
            cons.append(Constraint(tuple(Fraction(c) for c in coeffs), rel, rhs, label))
        fx = tuple((int(i), Fraction(v)) for i, v in fixed)
        return cls(len(obj), obj, sense, tuple(cons), fx, nonneg)

    def objective_value(self, point: Sequence[Fraction]) -> Fraction:
        return sum((c * x for c, x in zip(self.objective, point) if c), Fraction(0))

    def fixed_map(self) -> dict[int, Fraction]:
        return dict(self.fixed)


@dataclass(frozen=True)
class LpSolution:
    status: str
    objective_value: Fraction | None = None
    primal: tuple[Fraction, ...] | None = None
    dual: tuple[Fraction, ...] | None = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


@dataclass(frozen=True)
class Violation:
    kind: str  # "row", "fixed", "nonneg" or "sign"/"reduced_cost" for duals
    index: int
    label: str
    slack: Fraction


@dataclass(frozen=True)
class FeasibilityReport:
    violations: tuple[Violation, ...]
    row_slacks: tuple[Fraction, ...] = field(default=())

    @property
    def feasible(self) -> bool:
        return not self.violations

    @property
    def min_row_slack(self) -> Fraction | None:
        return min(self.row_slacks) if self.row_slacks else None


def check_point(problem: LpProblem, point: Sequence) -> FeasibilityReport:
    """Evaluate every constraint of ``problem`` at ``point`` exactly."""
    if len(point) != problem.num_vars:
        raise ValueError(
            f"point has {len(point)} coordinates, problem has {problem.num_vars}"
        )
    x = [Fraction(v) for v in point]
    bad = []
    slacks = []
    for i, row in enumerate(problem.rows):
        s = row.slack(x)
        slacks.append(s)
        if s < 0:
            bad.append(Violation("row", i, row.label, s))
    for j, v in problem.fixed:
        if x[j] != v:
            bad.append(Violation("fixed", j, f"x{j}={v}", -abs(x[j] - v)))
    if problem.nonneg:
        for j, v in enumerate(x):
            if v < 0:
                bad.append(Violation("nonneg", j, f"x{j}>=0", v))
    return FeasibilityReport(tuple(bad), tuple(slacks))


def reduced_costs(problem: LpProblem, dual: Sequence[Fraction]) -> list[Fraction]:
    """c_j - sum_i y_i A_ij for every variable."""
    out = list(problem.objective)
    for y, row in zip(dual, problem.rows):
        if y:
            for j, a in enumerate(row.coeffs):
                if a:
                    out[j] -= y * a
    return out


def dual_objective(problem: LpProblem, dual: Sequence[Fraction]) -> Fraction:
    """Value of the Lagrangian dual at ``dual`` (fixed variables included)."""
    total = sum((y * row.rhs for y, row in zip(dual, problem.rows)), Fraction(0))
    rc = reduced_costs(problem, dual)
    for j, v in problem.fixed:
        total += rc[j] * v
    return total


def check_dual(problem: LpProblem, dual: Sequence) -> FeasibilityReport:
    """Audit dual feasibility: multiplier signs and reduced-cost signs."""
    if len(dual) != len(problem.rows):
        raise ValueError("one multiplier per row is required")
    y = [Fraction(v) for v in dual]
    flip = 1 if problem.sense == "max" else -1
    bad = []
    for i, (yi, row) in enumerate(zip(y, problem.rows)):
        # shadow price sign, expressed as a quantity that must be >= 0
        s = flip * yi if row.relation == LE else -flip * yi
        if s < 0:
            bad.append(Violation("sign", i, row.label, s))
    fixed = problem.fixed_map()
    for j, r in enumerate(reduced_costs(problem, y)):
        if j in fixed:
            continue
        s = -flip * r if problem.nonneg else -abs(r)
        if s < 0:
            bad.append(Violation("reduced_cost", j, f"x{j}", s))
    return FeasibilityReport(tuple(bad))


class _Tableau:
    """Dense simplex tableau; the last entry of every row is the rhs."""

    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows
        self.basis = basis
        self.obj: list[Fraction] = []

    def set_objective(self, cost: Sequence[Fraction]) -> None:
        obj = list(cost) + [Fraction(0)]
        for i, b in enumerate(self.basis):
            cb = obj[b]
            if cb:
                row = self.rows[i]
                obj = [o - cb * r for o, r in zip(obj, row)]
        self.obj = obj

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        p = prow[c]
        if p != 1:
            prow = [v / p for v in prow]
            self.rows[r] = prow
        nz = [(k, v) for k, v in enumerate(prow) if v]
        for i, row in enumerate(self.rows):
            f = row[c]
            if i != r and f:
                for k, v in nz:
                    row[k] -= f * v
        f = self.obj[c]
        if f:
            for k, v in nz:
                self.obj[k] -= f * v
        self.basis[r] = c

    def run(self, allowed: Sequence[bool]) -> str:
        """Maximize the current objective row with Bland's rule."""
        while True:
            col = next(
                (j for j, v in enumerate(self.obj[:-1]) if v > 0 and allowed[j]), None
            )
            if col is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row[col]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], col)

    @property
    def value(self) -> Fraction:
        return -self.obj[-1]


def solve_exact(problem: LpProblem) -> LpSolution:
    """Solve ``problem`` exactly; returns primal and dual optima when they exist."""
    fixed = problem.fixed_map()
    free = [j for j in range(problem.num_vars) if j not in fixed]
    # structural columns: (original index, sign)
    cols = [(j, 1) for j in free]
    if not problem.nonneg:
        cols += [(j, -1) for j in free]
    ns = len(cols)
    m = len(problem.rows)
    flip = 1 if problem.sense == "max" else -1

    offset = flip * sum((problem.objective[j] * v for j, v in fixed.items()), Fraction(0))
    cost = [flip * problem.objective[j] * s for j, s in cols]

    # every row in "<=" form: A x + slack = b
    body, rhs, neg = [], [], []
    for row in problem.rows:
        sgn = 1 if row.relation == LE else -1
        b = row.rhs - sum((row.coeffs[j] * v for j, v in fixed.items()), Fraction(0))
        body.append([sgn * row.coeffs[j] * s for j, s in cols])
        rhs.append(sgn * b)
        neg.append(sgn * b < 0)

    art_of = {}
    for i in range(m):
        if neg[i]:
            art_of[i] = ns + m + len(art_of)
    width = ns + m + len(art_of)

    rows, basis = [], []
    for i in range(m):
        t = [Fraction(0)] * (width + 1)
        t[:ns] = body[i]
        t[ns + i] = Fraction(1)
        t[-1] = rhs[i]
        if neg[i]:
            t = [-v for v in t]
            t[art_of[i]] = Fraction(1)
            basis.append(art_of[i])
        else:
            basis.append(ns + i)
        rows.append(t)
    tab = _Tableau(rows, basis)

    if art_of:
        phase1 = [Fraction(0)] * width
        for a in art_of.values():
            phase1[a] = Fraction(-1)
        tab.set_objective(phase1)
        tab.run([True] * width)
        if tab.value < 0:
            return LpSolution(INFEASIBLE)
        # push zero-level artificials out of the basis; [A | I] has full row
        # rank so a non-artificial pivot always exists
        for i, b in enumerate(tab.basis):
            if b >= ns + m:
                c = next(j for j in range(ns + m) if tab.rows[i][j])
                tab.pivot(i, c)

    allowed = [True] * (ns + m) + [False] * len(art_of)
    tab.set_objective(cost + [Fraction(0)] * (m + len(art_of)))
    if tab.run(allowed) == UNBOUNDED:
        return LpSolution(UNBOUNDED)

    vals = [Fraction(0)] * width
    for i, b in enumerate(tab.basis):
        vals[b] = tab.rows[i][-1]
    x = [Fraction(0)] * problem.num_vars
    for j, v in fixed.items():
        x[j] = v
    for k, (j, s) in enumerate(cols):
        x[j] += s * vals[k]

    dual = []
    for i, row in enumerate(problem.rows):
        y = -tab.obj[ns + i]  # multiplier of the "<=" form row
        if row.relation == GE:
            y = -y
        dual.append(flip * y)

    value = flip * (tab.value + offset)
    return LpSolution(OPTIMAL, value, tuple(x), tuple(dual))
