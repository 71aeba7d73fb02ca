"""Exact Delsarte linear programming bounds for binary and almost-balanced codes."""

from .asymptotics import RatePoint, averaged_lower_bound, r_gv, r_mrrw, rate_table, x_d_asymptotic
from .certificates import (
    Certificate,
    DomainError,
    build_certificate,
    check_kraw_growth_bounds,
    grey_rankin_value,
    symmetrize_even,
    verify_all,
    verify_complementary_slackness,
    verify_dual_feasible,
    verify_primal_feasible,
)
from .delsarte import (
    ALMOST_BALANCED,
    MIN_DISTANCE,
    BoundReport,
    DistanceDistribution,
    DualPolynomial,
    a_lp,
    b_lp,
    bound_report,
    build_dual,
    build_primal,
)
from .krawtchouk import (
    KrawtchoukTable,
    RootBracket,
    build_table,
    first_root,
    k2_closed_form,
    kraw_eval_direct,
    kraw_eval_recurrence,
)
from .lp import LpProblem, LpSolution, check_point, solve_exact
from .numeric import Rational, binary_entropy, binomial, isqrt_floor
from .samorodnitsky import SamorodnitskyWitness, build_witness, epsilon_lower, lp_lower_bound

__version__ = "0.1.0"
