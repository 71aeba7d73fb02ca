"""Krawtchouk polynomials for the binary Hamming scheme, in exact arithmetic.

For block length ``n`` the degree-``s`` polynomial is

    K_s(x) = sum_{j=0}^{s} (-1)^j C(x, j) C(n - x, s - j)

where ``C(y, j)`` is the falling-factorial binomial, so ``x`` may be any
rational.  At integer points every value is an integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .numeric import binomial


def _check_degree(n: int, s: int) -> None:
    if n < 1:
        raise ValueError(f"block length must be positive, got n={n}")
    if not 0 <= s <= n:
        raise ValueError(f"degree must lie in 0..{n}, got s={s}")


def generalized_binomial(x: Fraction, j: int) -> Fraction:
    """C(x, j) = x (x-1) ... (x-j+1) / j! for rational x."""
    if j < 0:
        return Fraction(0)
    num = Fraction(1)
    for i in range(j):
        num *= x - i
    return num / math.factorial(j)


def kraw_eval_direct(n: int, s: int, x) -> Fraction:
    """K_s(x) from the defining alternating sum."""
    _check_degree(n, s)
    x = Fraction(x)
    if x.denominator == 1 and 0 <= x <= n:
        i = int(x)
        return Fraction(sum((-1) ** j * binomial(i, j) * binomial(n - i, s - j) for j in range(s + 1)))
    total = Fraction(0)
    for j in range(s + 1):
        term = generalized_binomial(x, j) * generalized_binomial(n - x, s - j)
        total += -term if j % 2 else term
    return total


def kraw_eval_recurrence(n: int, s: int, x) -> Fraction:
    """K_s(x) from (q+1) K_{q+1} = (n-2x) K_q - (n-q+1) K_{q-1}."""
    _check_degree(n, s)
    x = Fraction(x)
    prev, cur = Fraction(1), n - 2 * x
    if s == 0:
        return prev
    for q in range(1, s):
        prev, cur = cur, ((n - 2 * x) * cur - (n - q + 1) * prev) / (q + 1)
    return cur


def k2_closed_form(n: int, x) -> Fraction:
    """K_2(x) = 2x^2 - 2nx + C(n, 2); roots at (n +- sqrt(n)) / 2."""
    if n < 2:
        raise ValueError(f"K_2 needs n >= 2, got n={n}")
    x = Fraction(x)
    return 2 * x * x - 2 * n * x + binomial(n, 2)


@dataclass(frozen=True)
class KrawtchoukTable:
    """Dense table ``values[s][j] = K_s(j)`` for 0 <= s, j <= n.

    Entries are Python ints (every K_s(j) is integral).
    """

    n: int
    values: tuple[tuple[int, ...], ...]

    def __call__(self, s: int, j: int) -> int:
        return self.values[s][j]

    def row(self, s: int) -> tuple[int, ...]:
        return self.values[s]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.values)


@lru_cache(maxsize=256)
def build_table(n: int) -> KrawtchoukTable:
    """All integer-point values of K_0..K_n for block length n (cached)."""
    if n < 1:
        raise ValueError(f"block length must be positive, got n={n}")
    rows = [[1] * (n + 1), [n - 2 * j for j in range(n + 1)]]
    for q in range(1, n):
        nxt = []
        for j in range(n + 1):
            v = (n - 2 * j) * rows[q][j] - (n - q + 1) * rows[q - 1][j]
            assert v % (q + 1) == 0
            nxt.append(v // (q + 1))
        rows.append(nxt)
    return KrawtchoukTable(n, tuple(tuple(r) for r in rows[: n + 1]))


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class RootBracket:
    """Interval [low, high] holding the smallest root of K_d.

    ``low == high`` means the root was hit exactly.
    """

    n: int
    d: int
    low: Fraction
    high: Fraction

    @property
    def exact(self) -> bool:
        return self.low == self.high

    @property
    def width(self) -> Fraction:
        return self.high - self.low

    def floor(self) -> int | None:
        """Floor of the root when the bracket determines it, else None."""
        if self.exact:
            return math.floor(self.low)
        lo = math.floor(self.low)
        # root lies strictly inside (low, high)
        if self.high <= lo + 1:
            return lo
        return None


def _integer_bracket(n: int, d: int) -> tuple[int, int]:
    """First integer sign change of K_d on 0..ceil(n/2): (m, m) or (m, m+1)."""
    prev = _sign(kraw_eval_direct(n, d, 0))
    for m in range(1, (n + 1) // 2 + 1):
        cur = _sign(kraw_eval_direct(n, d, m))
        if cur == 0:
            return m, m
        if cur != prev:
            return m - 1, m
    raise RuntimeError(f"no sign change of K_{d} found for n={n}")


def first_root(n: int, d: int, denom_bound: int = 1) -> RootBracket:
    """Bracket of width <= 1/denom_bound around the smallest root of K_d."""
    _check_degree(n, d)
    if d < 1:
        raise ValueError("K_0 has no roots")
    if denom_bound < 1:
        raise ValueError(f"denom_bound must be positive, got {denom_bound}")
    a, b = _integer_bracket(n, d)
    low, high = Fraction(a), Fraction(b)
    if low == high:
        return RootBracket(n, d, low, high)
    s_low = _sign(kraw_eval_direct(n, d, low))
    target = Fraction(1, denom_bound)
    while high - low > target:
        mid = (low + high) / 2
        s_mid = _sign(kraw_eval_direct(n, d, mid))
        if s_mid == 0:
            return RootBracket(n, d, mid, mid)
        if s_mid == s_low:
            low = mid
        else:
            high = mid
    return RootBracket(n, d, low, high)


def first_root_floor(n: int, d: int) -> int:
    """floor(x_d) for the smallest root x_d of K_d.

    Consecutive integers carry at most one root of K_d between them, so the
    integer sign scan already pins the floor; bisection only runs as a
    fallback if the bracket does not.
    """
    bracket = first_root(n, d, 1)
    denom = 2
    while (fl := bracket.floor()) is None:
        bracket = first_root(n, d, denom)
        denom *= 2
    return fl
