from fractions import Fraction

import pytest

from delsarte_lp.delsarte import (
    ALMOST_BALANCED,
    FAILED,
    MIN_DISTANCE,
    NOT_APPLICABLE,
    VERIFIED,
    a_lp,
    b_lp,
    bound_report,
    build_dual,
    build_primal,
    in_grey_rankin_domain,
    solve_pair,
)
from delsarte_lp.lp import check_dual, check_point, dual_objective, solve_exact
from delsarte_lp.numeric import binomial


def test_builders_reject_bad_distance():
    with pytest.raises(ValueError):
        build_primal(4, 5, MIN_DISTANCE)
    with pytest.raises(ValueError):
        build_dual(4, 0, ALMOST_BALANCED)
    with pytest.raises(ValueError):
        build_primal(4, 2, "weird")


def test_dual_row_counts():
    assert [r.label for r in build_dual(16, 8, ALMOST_BALANCED).rows] == ["u=8"]
    assert len(build_dual(16, 8, MIN_DISTANCE).rows) == 9
    assert len(build_dual(16, 9, ALMOST_BALANCED).rows) == 0


def test_primal_fixings():
    p = build_primal(10, 3, ALMOST_BALANCED)
    fixed = dict(p.fixed)
    assert fixed[0] == 1
    assert sorted(k for k in fixed if k) == [1, 2, 8, 9, 10]
    assert len(p.rows) == 11


@pytest.mark.parametrize("n, d, value", [(16, 8, 16), (36, 16, 64), (36, 18, 36)])
def test_balanced_known_values(n, d, value):
    assert b_lp(n, d) == value
    assert solve_exact(build_dual(n, d, ALMOST_BALANCED)).objective_value == value


def test_a_lp_full_distance():
    for n in range(2, 11):
        assert a_lp(n, n) == 2


def test_a_lp_distance_one_is_whole_space():
    for n in range(1, 11):
        # a_k = C(n, k) is feasible: sum_k C(n,k) K_s(k) = 2^n [s = 0]
        pt = [Fraction(binomial(n, k)) for k in range(n + 1)]
        assert check_point(build_primal(n, 1, MIN_DISTANCE), pt).feasible
        assert a_lp(n, 1) == 2**n


def test_strong_duality_and_dual_certificates():
    for n in range(2, 17):
        for d in range(1, n + 1):
            for mode in (MIN_DISTANCE, ALMOST_BALANCED):
                p, q = solve_pair(n, d, mode)
                for prob, sol in ((build_primal(n, d, mode), p), (build_dual(n, d, mode), q)):
                    assert check_point(prob, sol.primal).feasible
                    assert check_dual(prob, sol.dual).feasible
                    assert dual_objective(prob, sol.dual) == sol.objective_value


def test_relaxation_ordering_and_monotonicity():
    for n in range(2, 25):
        prev = None
        for d in range(1, n // 2 + 1):
            b = b_lp(n, d)
            assert b <= a_lp(n, d)
            if prev is not None:
                assert b <= prev
            prev = b


def test_grey_rankin_domain_gate():
    assert in_grey_rankin_domain(16, 8)
    assert in_grey_rankin_domain(36, 16)
    assert not in_grey_rankin_domain(16, 6)  # boundary d = (n - sqrt n)/2 is excluded
    assert not in_grey_rankin_domain(17, 8)
    assert not in_grey_rankin_domain(16, 7)
    assert not in_grey_rankin_domain(16, 10)


def test_closed_form_on_even_grid():
    for n in range(4, 31, 2):
        for d in range(2, n // 2 + 1, 2):
            if in_grey_rankin_domain(n, d):
                assert b_lp(n, d) == Fraction(4 * d * (n - d), n - (n - 2 * d) ** 2)


def test_report_verified():
    rep = bound_report(16, 8, ALMOST_BALANCED)
    assert (rep.lp_value, rep.closed_form, rep.certificate_status) == (16, 16, VERIFIED)
    assert rep.lower_bound_witness is None


def test_report_outside_domain():
    rep = bound_report(16, 6, "balanced")
    assert rep.closed_form is None and rep.certificate_status == NOT_APPLICABLE
    assert rep.lower_bound_witness is not None
    assert rep.lower_bound_witness <= rep.lp_value


def test_report_min_distance():
    rep = bound_report(10, 3, MIN_DISTANCE)
    assert rep.closed_form is None and rep.lower_bound_witness is None
    assert rep.lp_value == a_lp(10, 3)


def test_report_distance_above_half():
    rep = bound_report(10, 7, ALMOST_BALANCED)
    assert rep.lp_value == 1 and rep.notes


def test_report_without_solver():
    rep = bound_report(36, 16, ALMOST_BALANCED, solve_lp=False)
    assert rep.lp_value is None and rep.closed_form == 64 and rep.certificate_status == VERIFIED


def test_report_flags_failed_status(monkeypatch):
    import delsarte_lp.delsarte as mod
    from delsarte_lp.lp import OPTIMAL, LpSolution

    fake = LpSolution(OPTIMAL, Fraction(17))
    monkeypatch.setattr(mod, "solve_pair", lambda n, d, mode: (fake, fake))
    assert bound_report(16, 8, ALMOST_BALANCED).certificate_status == FAILED
