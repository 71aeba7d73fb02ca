"""Closed-form optimal pair for the almost-balanced LP at large distance.

For even ``n, d`` with ``(n - sqrt n)/2 + 1 <= d <= n/2`` the dual optimum
is the quadratic ``beta(x) = 1 - K_2(x)/K_2(d)`` and the primal optimum puts
mass ``-C(n,2) / (2 K_2(d))`` on each of the distances ``d`` and ``n - d``.
Both sides are built here and checked by direct exact evaluation, with no
simplex involved, so they serve as an independent oracle for the solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .delsarte import (
    ALMOST_BALANCED,
    DistanceDistribution,
    DualPolynomial,
    dual_range,
    in_grey_rankin_domain,
)
from .krawtchouk import build_table, k2_closed_form
from .numeric import binomial, parse_rational, render_rational


class DomainError(ValueError):
    """(n, d) lies outside the range where the closed form is proved optimal."""


class InfeasibleDualError(ValueError):
    pass


@dataclass(frozen=True)
class GreyRankinDomain:
    n: int
    d: int

    def __post_init__(self):
        if not in_grey_rankin_domain(self.n, self.d):
            raise DomainError(
                f"(n={self.n}, d={self.d}) needs even n, d with "
                "(n - sqrt(n))/2 + 1 <= d <= n/2"
            )
        assert k2_closed_form(self.n, self.d) < 0

    @property
    def k2(self) -> Fraction:
        return k2_closed_form(self.n, self.d)


def grey_rankin_value(n: int, d: int) -> Fraction:
    """4d(n-d) / (n - (n-2d)^2)."""
    GreyRankinDomain(n, d)
    den = n - (n - 2 * d) ** 2
    assert den > 0
    return Fraction(4 * d * (n - d), den)


@dataclass(frozen=True)
class Certificate:
    domain: GreyRankinDomain
    beta: DualPolynomial
    alpha: DistanceDistribution
    value: Fraction

    @property
    def n(self) -> int:
        return self.domain.n

    @property
    def d(self) -> int:
        return self.domain.d


def build_certificate(n: int, d: int) -> Certificate:
    dom = GreyRankinDomain(n, d)
    k2 = dom.k2
    beta = [Fraction(0)] * (n + 1)
    beta[0] = Fraction(1)
    beta[2] = -1 / k2
    alpha = [Fraction(0)] * (n + 1)
    alpha[0] = Fraction(1)
    mass = -binomial(n, 2) / (2 * k2)
    # d == n/2 merges the two coordinates
    alpha[d] += mass
    alpha[n - d] += mass
    value = 1 - binomial(n, 2) / k2
    assert value == grey_rankin_value(n, d)
    return Certificate(dom, DualPolynomial(n, tuple(beta)), DistanceDistribution(n, tuple(alpha)), value)


@dataclass(frozen=True)
class CheckEntry:
    label: str
    slack: Fraction  # >= 0 means satisfied; equality checks use -|deviation|

    @property
    def ok(self) -> bool:
        return self.slack >= 0


@dataclass(frozen=True)
class CheckReport:
    name: str
    entries: tuple[CheckEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> tuple[CheckEntry, ...]:
        return tuple(e for e in self.entries if not e.ok)

    @property
    def tightest(self) -> CheckEntry | None:
        return min(self.entries, key=lambda e: e.slack) if self.entries else None


def _eq(label: str, got: Fraction, want: Fraction) -> CheckEntry:
    return CheckEntry(label, -abs(Fraction(got) - want))


def verify_dual_feasible(cert: Certificate) -> CheckReport:
    """beta(u) <= 0 on d..n-d, beta >= 0, beta_0 = 1, and beta vanishes at d, n-d."""
    n, d, beta = cert.n, cert.d, cert.beta
    entries = [_eq("beta_0=1", beta.beta[0], Fraction(1))]
    entries += [CheckEntry(f"beta_{k}>=0", b) for k, b in enumerate(beta.beta)]
    for u in dual_range(n, d, ALMOST_BALANCED):
        entries.append(CheckEntry(f"beta({u})<=0", -beta(u)))
    entries.append(_eq(f"beta({d})=0", beta(d), Fraction(0)))
    if n - d != d:
        entries.append(_eq(f"beta({n - d})=0", beta(n - d), Fraction(0)))
    return CheckReport("dual_feasible", tuple(entries))


def verify_primal_feasible(cert: Certificate) -> CheckReport:
    """All n+1 MacWilliams inequalities plus the support/normalization of alpha."""
    n, d, alpha = cert.n, cert.d, cert.alpha
    entries = [_eq("alpha_0=1", alpha.a[0], Fraction(1))]
    for k, a in enumerate(alpha.a):
        entries.append(CheckEntry(f"alpha_{k}>=0", a))
        if k and not d <= k <= n - d:
            entries.append(_eq(f"alpha_{k}=0", a, Fraction(0)))
    mcw = alpha.macwilliams()
    for s, v in enumerate(mcw):
        parity = "odd" if s % 2 else "even"
        entries.append(CheckEntry(f"mcw s={s} ({parity})", v))
    entries.append(_eq("mcw s=2 tight", mcw[2], Fraction(0)))
    return CheckReport("primal_feasible", tuple(entries))


def verify_complementary_slackness(cert: Certificate) -> CheckReport:
    """beta(u) alpha_u = 0 on the range and beta_s (sum_k alpha_k K_s(k)) = 0 for s >= 1."""
    n, d = cert.n, cert.d
    mcw = cert.alpha.macwilliams()
    entries = []
    for u in dual_range(n, d, ALMOST_BALANCED):
        entries.append(_eq(f"beta({u})*alpha_{u}", cert.beta(u) * cert.alpha.a[u], Fraction(0)))
    for s in range(1, n + 1):
        entries.append(_eq(f"beta_{s}*mcw_{s}", cert.beta.beta[s] * mcw[s], Fraction(0)))
    return CheckReport("complementary_slackness", tuple(entries))


def verify_objectives(cert: Certificate) -> CheckReport:
    return CheckReport(
        "objective_match",
        (
            _eq("beta(0)=value", cert.beta.value_at_zero, cert.value),
            _eq("sum alpha=value", cert.alpha.size, cert.value),
        ),
    )


@dataclass(frozen=True)
class VerificationSummary:
    reports: tuple[CheckReport, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def __getitem__(self, name: str) -> CheckReport:
        return next(r for r in self.reports if r.name == name)


def verify_all(cert: Certificate) -> VerificationSummary:
    return VerificationSummary(
        (
            verify_dual_feasible(cert),
            verify_primal_feasible(cert),
            verify_complementary_slackness(cert),
            verify_objectives(cert),
        )
    )


def dual_feasibility(theta: DualPolynomial, d: int) -> CheckReport:
    """Feasibility of an arbitrary beta for the almost-balanced dual LP."""
    entries = [_eq("beta_0=1", theta.beta[0], Fraction(1))]
    entries += [CheckEntry(f"beta_{k}>=0", b) for k, b in enumerate(theta.beta)]
    entries += [CheckEntry(f"beta({u})<=0", -theta(u)) for u in dual_range(theta.n, d, ALMOST_BALANCED)]
    return CheckReport("dual_feasible", tuple(entries))


def symmetrize_even(theta: DualPolynomial, n: int, d: int) -> DualPolynomial:
    """Zero every odd coefficient of a feasible dual; stays feasible, beta(0) cannot grow."""
    if theta.n != n:
        raise ValueError(f"polynomial has n={theta.n}, expected {n}")
    rep = dual_feasibility(theta, d)
    if not rep.passed:
        raise InfeasibleDualError(f"input is not dual feasible: {rep.failures[0].label}")
    out = DualPolynomial(n, tuple(b if k % 2 == 0 else Fraction(0) for k, b in enumerate(theta.beta)))
    assert dual_feasibility(out, d).passed
    assert out.value_at_zero <= theta.value_at_zero
    return out


@dataclass(frozen=True)
class GrowthReport:
    n: int
    d: int
    c: Fraction
    stronger: CheckReport
    k3_bound: CheckEntry
    steps: tuple[CheckEntry, ...]

    @property
    def passed(self) -> bool:
        return self.stronger.passed and self.k3_bound.ok and all(e.ok for e in self.steps)

    @property
    def tightest(self) -> CheckEntry:
        return min((*self.stronger.entries, self.k3_bound, *self.steps), key=lambda e: e.slack)


def growth_step(n: int, d: int, q: int, delta: Fraction) -> tuple[bool, Fraction]:
    """One application of the three-term growth bound at K_{q+1}(d).

    Returns ``(hypotheses_hold, slack)`` where slack is
    ``delta C(n,q+1) (n-2d+q)/(n-q) - |K_{q+1}(d)|``.
    """
    t = build_table(n)
    hyp = abs(t(q - 1, d)) <= delta * binomial(n, q - 1) and abs(t(q, d)) <= delta * binomial(n, q)
    bound = delta * binomial(n, q + 1) * Fraction(n - 2 * d + q, n - q)
    return hyp, bound - abs(t(q + 1, d))


def check_kraw_growth_bounds(n: int, d: int) -> GrowthReport:
    """Check |K_s(d)| <= C C(n,s) for 2 <= s <= n-2 with C = |K_2(d)|/C(n,2),
    the |K_3(d)| <= |K_2(d)| (n-2)/3 bound, and the growth step at q = 2, 3.

    The step at q = 2 is an implication whose hypothesis on K_1 usually
    fails on this domain, so it only counts when the hypothesis holds.
    q = 3 with delta = C is the first step the induction really takes and
    its hypotheses must hold here.
    """
    GreyRankinDomain(n, d)
    t = build_table(n)
    c = Fraction(abs(t(2, d)), binomial(n, 2))
    stronger = CheckReport(
        "stronger",
        tuple(CheckEntry(f"|K_{s}({d})|<=C*C(n,{s})", c * binomial(n, s) - abs(t(s, d))) for s in range(2, n - 1)),
    )
    k3 = CheckEntry("|K_3(d)|<=|K_2(d)|(n-2)/3", Fraction(abs(t(2, d)) * (n - 2), 3) - abs(t(3, d)))
    steps = []
    for q in (2, 3):
        if q + 1 > n:
            continue
        hyp, slack = growth_step(n, d, q, c)
        if q == 2 and not hyp:
            steps.append(CheckEntry("step q=2 (hypothesis fails, vacuous)", Fraction(0)))
        elif not hyp:
            steps.append(CheckEntry(f"step q={q} hypotheses", Fraction(-1)))
        else:
            steps.append(CheckEntry(f"step q={q}", slack))
    return GrowthReport(n, d, c, stronger, k3, tuple(steps))


def certificate_to_record(cert: Certificate) -> dict:
    return {
        "n": cert.n,
        "d": cert.d,
        "beta": [render_rational(b) for b in cert.beta.beta],
        "alpha": [render_rational(a) for a in cert.alpha.a],
        "value": render_rational(cert.value),
    }


def certificate_from_record(record: dict) -> Certificate:
    """Rebuild a certificate from its flat record (values are not re-derived)."""
    try:
        n, d = int(record["n"]), int(record["d"])
        beta = tuple(parse_rational(v) for v in record["beta"])
        alpha = tuple(parse_rational(v) for v in record["alpha"])
        value = parse_rational(record["value"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed certificate record: {exc}") from exc
    return Certificate(GreyRankinDomain(n, d), DualPolynomial(n, beta), DistanceDistribution(n, alpha), value)
