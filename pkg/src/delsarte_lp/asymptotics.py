"""Asymptotic rate curves (floating point).

``r_gv`` is the Gilbert-Varshamov rate 1 - H(delta), ``r_mrrw`` the first
MRRW bound H(1/2 - sqrt(delta(1 - delta))), and ``averaged_lower_bound``
their mean, which lower-bounds the LP rate for almost-balanced codes.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable

from .numeric import binary_entropy


def _check_closed(delta: float) -> float:
    delta = float(delta)
    if not 0.0 <= delta <= 0.5:
        raise ValueError(f"delta must lie in [0, 1/2], got {delta}")
    return delta


def _check_open(delta: float) -> float:
    delta = float(delta)
    if not 0.0 < delta < 0.5:
        raise ValueError(f"delta must lie in (0, 1/2), got {delta}")
    return delta


def r_gv(delta: float) -> float:
    return 1.0 - binary_entropy(_check_closed(delta))


def r_mrrw(delta: float) -> float:
    delta = _check_closed(delta)
    # clamp: 1/2 - sqrt(1/4) can round to a tiny negative number
    return binary_entropy(max(0.0, 0.5 - math.sqrt(delta * (1.0 - delta))))


def averaged_lower_bound(delta: float) -> float:
    delta = _check_open(delta)
    return 0.5 * (r_gv(delta) + r_mrrw(delta))


def x_d_asymptotic(delta: float, n: int) -> float:
    """Leading term n (1/2 - sqrt(delta (1 - delta))) of the smallest root of K_d, d = delta n."""
    delta = float(delta)
    if not 0.0 < delta <= 0.5:
        raise ValueError(f"delta must lie in (0, 1/2], got {delta}")
    return n * (0.5 - math.sqrt(delta * (1.0 - delta)))


@dataclass(frozen=True)
class RatePoint:
    delta: float
    r_gv: float
    r_mrrw: float
    r_avg: float


def rate_table(delta_grid: Iterable[float]) -> list[RatePoint]:
    return [
        RatePoint(float(x), r_gv(x), r_mrrw(x), averaged_lower_bound(x))
        for x in map(_check_open, delta_grid)
    ]


CSV_FIELDS = ("delta", "r_gv", "r_mrrw", "r_avg")


def rates_to_csv(points: Iterable[RatePoint]) -> str:
    """CSV with header and every value printed with 6 decimals."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for p in points:
        w.writerow([f"{v:.6f}" for v in asdict(p).values()])
    return buf.getvalue()


def distance_for(delta: float, n: int) -> int:
    """floor(delta * n), computed on the decimal value of delta (0.3 * 30 -> 9)."""
    return math.floor(Fraction(str(float(delta))) * n)
