"""Exact integer/rational primitives and the binary entropy function."""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def binomial(n: int, k: int) -> int:
    """n choose k, with the convention that out-of-range k gives 0."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def isqrt_floor(m: int) -> int:
    """Largest r with r*r <= m."""
    if m < 0:
        raise ValueError(f"isqrt_floor needs m >= 0, got {m}")
    return math.isqrt(m)


def binary_entropy(p: float) -> float:
    """-p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"binary_entropy needs p in [0, 1], got {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def log2_rational(r: Fraction) -> float:
    """log2 of a positive rational whose parts may exceed float range."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("log2 of a non-positive number")
    return _log2_int(r.numerator) - _log2_int(r.denominator)


def _log2_int(m: int) -> float:
    shift = max(m.bit_length() - 64, 0)
    return math.log2(m >> shift) + shift


def render_rational(r: Fraction) -> str:
    """Render as a reduced "numerator/denominator" string."""
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of render_rational; also accepts bare integers."""
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {text!r}")
    num, sep, den = text.strip().partition("/")
    try:
        if not sep:
            return Fraction(int(num))
        d = int(den)
        if d <= 0:
            raise ValueError(f"non-positive denominator in {text!r}")
        return Fraction(int(num), d)
    except ValueError as exc:
        raise ValueError(f"malformed rational {text!r}") from exc
