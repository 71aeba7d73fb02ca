import random
from dataclasses import replace
from fractions import Fraction

import pytest

from delsarte_lp.certificates import (
    DomainError,
    InfeasibleDualError,
    build_certificate,
    certificate_from_record,
    certificate_to_record,
    check_kraw_growth_bounds,
    dual_feasibility,
    grey_rankin_value,
    symmetrize_even,
    verify_all,
    verify_complementary_slackness,
    verify_dual_feasible,
    verify_primal_feasible,
)
from delsarte_lp.delsarte import (
    ALMOST_BALANCED,
    DistanceDistribution,
    DualPolynomial,
    build_dual,
    build_primal,
    in_grey_rankin_domain,
)
from delsarte_lp.krawtchouk import kraw_eval_recurrence
from delsarte_lp.lp import check_point
from delsarte_lp.numeric import binomial

DOMAIN = [(n, d) for n in range(4, 41, 2) for d in range(2, n // 2 + 1, 2) if in_grey_rankin_domain(n, d)]


def with_beta(cert, k, value):
    beta = list(cert.beta.beta)
    beta[k] = Fraction(value)
    return replace(cert, beta=DualPolynomial(cert.n, tuple(beta)))


def with_alpha(cert, k, value):
    alpha = list(cert.alpha.a)
    alpha[k] = Fraction(value)
    return replace(cert, alpha=DistanceDistribution(cert.n, tuple(alpha)))


@pytest.mark.parametrize("n, d, value", [(16, 8, 16), (36, 16, 64), (36, 18, 36), (40, 18, 66)])
def test_grey_rankin_value(n, d, value):
    assert grey_rankin_value(n, d) == value


@pytest.mark.parametrize("n, d", [(16, 6), (15, 8), (16, 7), (16, 10)])
def test_domain_errors(n, d):
    with pytest.raises(DomainError):
        grey_rankin_value(n, d)
    with pytest.raises(DomainError):
        build_certificate(n, d)


def test_certificate_shapes():
    c = build_certificate(16, 8)
    assert c.beta.beta[2] == Fraction(1, 8) and c.alpha.a[8] == 15 and c.value == 16
    c = build_certificate(36, 16)
    assert c.beta.beta[2] == Fraction(1, 10)
    assert c.alpha.a[16] == c.alpha.a[20] == Fraction(63, 2) and c.value == 64
    c = build_certificate(36, 18)
    assert c.beta.beta[2] == Fraction(1, 18) and c.alpha.a[18] == 35 and c.value == 36


def test_dual_feasible_examples():
    rep = verify_dual_feasible(build_certificate(16, 8))
    assert rep.passed
    c = build_certificate(36, 16)
    assert verify_dual_feasible(c).passed
    assert c.beta(18) == Fraction(-4, 5)
    assert c.beta(16) == c.beta(20) == 0


def test_tampered_beta_rejected():
    c = with_beta(build_certificate(36, 16), 2, Fraction(1, 20))
    rep = verify_dual_feasible(c)
    assert not rep.passed
    assert c.beta(16) == Fraction(1, 2)
    assert "beta(16)<=0" in [f.label for f in rep.failures]


def test_primal_feasible_rows():
    c = build_certificate(36, 16)
    rep = verify_primal_feasible(c)
    assert rep.passed
    mcw = c.alpha.macwilliams()
    assert len(mcw) == 37 and mcw[2] == 0
    for n, d in DOMAIN:
        mcw = build_certificate(n, d).alpha.macwilliams()
        for s in range(1, n + 1, 2):
            assert mcw[s] == binomial(n, s)
    # K_n(8) = K_0(8) = 1 so the last row of (16, 8) is 1 + 15
    assert build_certificate(16, 8).alpha.macwilliams()[16] == 16


def test_tampered_alpha_rejected():
    c = build_certificate(36, 16)
    assert not verify_primal_feasible(with_alpha(c, 16, 40)).passed
    assert not verify_primal_feasible(with_alpha(c, 5, 1)).passed


def test_complementary_slackness():
    assert verify_complementary_slackness(build_certificate(36, 16)).passed
    assert verify_complementary_slackness(build_certificate(16, 8)).passed
    bad = with_alpha(build_certificate(36, 16), 18, 1)
    rep = verify_complementary_slackness(bad)
    # the extra mass also breaks the tight s = 2 row
    assert not rep.passed and [f.label for f in rep.failures] == ["beta(18)*alpha_18", "beta_2*mcw_2"]


def test_all_domain_certificates_verify():
    for n, d in DOMAIN:
        c = build_certificate(n, d)
        assert verify_all(c).passed
        assert c.beta.value_at_zero == c.alpha.size == c.value
        assert check_point(build_dual(n, d, ALMOST_BALANCED), c.beta.beta).feasible
        assert check_point(build_primal(n, d, ALMOST_BALANCED), c.alpha.a).feasible
        for u in range(d + 1, n - d):
            assert c.beta(u) < 0


def test_record_roundtrip():
    c = build_certificate(36, 16)
    rec = certificate_to_record(c)
    assert rec["beta"][2] == "1/10" and rec["value"] == "64/1"
    assert certificate_from_record(rec) == c
    with pytest.raises(ValueError):
        certificate_from_record({"n": 36})


def random_feasible_dual(rng, cert):
    """Scale the optimal quadratic up and add a small random nonnegative tail.

    With beta = e_0 + lam (beta* - e_0), beta(u) <= 1 - lam on the range; any
    eta >= 0 with sum_k eta_k C(n, k) <= lam - 1 keeps it non-positive since
    |K_k(u)| <= C(n, k).
    """
    n = cert.n
    lam = 1 + Fraction(rng.randint(1, 20), 10)
    budget = lam - 1
    base = [Fraction(0)] * (n + 1)
    base[0] = Fraction(1)
    base[2] = lam * cert.beta.beta[2]
    weights = [rng.randint(0, 5) for _ in range(n + 1)]
    weights[0] = 0
    if rng.random() < 0.5:
        for k in range(0, n + 1, 2):
            weights[k] = 0  # odd-only perturbations
    total = sum(w * binomial(n, k) for k, w in enumerate(weights)) or 1
    share = budget * Fraction(rng.randint(1, 10), 10)
    eta = [share * w / total for w in weights]
    return DualPolynomial(n, tuple(b + e for b, e in zip(base, eta)))


def test_symmetrize_fixed_point():
    c = build_certificate(36, 16)
    assert symmetrize_even(c.beta, 36, 16) == c.beta


def test_symmetrize_removes_odd_perturbation():
    c = build_certificate(36, 16)
    beta = list(c.beta.beta)
    beta[2] *= 2
    beta[1] = Fraction(1, 1000)
    theta = DualPolynomial(36, tuple(beta))
    assert dual_feasibility(theta, 16).passed
    out = symmetrize_even(theta, 36, 16)
    assert out.beta[1] == 0 and out.beta[2] == beta[2]
    assert out.value_at_zero < theta.value_at_zero


def test_symmetrize_unit_dual_with_empty_range():
    e0 = DualPolynomial(10, (Fraction(1),) + (Fraction(0),) * 10)
    assert symmetrize_even(e0, 10, 6) == e0


def test_symmetrize_rejects_infeasible():
    c = with_beta(build_certificate(36, 16), 2, Fraction(1, 20))
    with pytest.raises(InfeasibleDualError):
        symmetrize_even(c.beta, 36, 16)


def test_symmetrize_random():
    rng = random.Random(99)
    for n, d in [(16, 8), (36, 16), (30, 14)]:
        c = build_certificate(n, d)
        for _ in range(30):
            theta = random_feasible_dual(rng, c)
            assert dual_feasibility(theta, d).passed
            out = symmetrize_even(theta, n, d)
            assert dual_feasibility(out, d).passed
            assert out.value_at_zero <= theta.value_at_zero


def test_growth_examples():
    rep = check_kraw_growth_bounds(16, 8)
    assert rep.passed and rep.c == Fraction(1, 15)
    assert kraw_eval_recurrence(16, 3, 8) == 0
    assert rep.k3_bound.slack == Fraction(8 * 14, 3)
    rep = check_kraw_growth_bounds(36, 16)
    assert rep.passed and rep.c == Fraction(1, 63)


def test_growth_grid():
    for n in range(4, 61, 2):
        for d in range(2, n // 2 + 1, 2):
            if in_grey_rankin_domain(n, d):
                rep = check_kraw_growth_bounds(n, d)
                assert rep.passed, (n, d, rep.tightest)
                assert len(rep.stronger.entries) == n - 3
