import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from delsarte_lp.numeric import (
    binary_entropy,
    binomial,
    isqrt_floor,
    log2_rational,
    parse_rational,
    render_rational,
)
from oracles import pascal_row


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (7, 9, 0), (7, -1, 0), (0, 0, 1)])
def test_binomial_small(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_pascal_triangle():
    row = pascal_row(16)
    assert row[8] == 12870
    assert [binomial(16, k) for k in range(17)] == row


def test_pascal_identity():
    for n in range(2, 65):
        for k in range(1, n):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@pytest.mark.parametrize("m, r", [(16, 4), (17, 4), (0, 0), (15, 3)])
def test_isqrt_examples(m, r):
    assert isqrt_floor(m) == r


@given(st.integers(min_value=0, max_value=2**256))
def test_isqrt_bracket(m):
    r = isqrt_floor(m)
    assert r * r <= m < (r + 1) ** 2


def test_isqrt_rejects_negative():
    with pytest.raises(ValueError):
        isqrt_floor(-1)


def test_entropy_examples():
    assert binary_entropy(0) == 0
    assert binary_entropy(1) == 0
    assert binary_entropy(0.5) == 1
    # natural-log evaluation as an independent route
    p = 0.1
    ref = -(p * math.log(p) + (1 - p) * math.log(1 - p)) / math.log(2)
    assert binary_entropy(0.1) == pytest.approx(ref, abs=1e-9)
    assert binary_entropy(0.1) == pytest.approx(0.468995593589281, abs=1e-9)


@pytest.mark.parametrize("p", [-0.1, 1.5])
def test_entropy_range(p):
    with pytest.raises(ValueError):
        binary_entropy(p)


def test_entropy_symmetric_and_monotone():
    grid = [i / 1000 for i in range(501)]
    vals = [binary_entropy(p) for p in grid]
    for p, v in zip(grid, vals):
        assert binary_entropy(1 - p) == pytest.approx(v, abs=1e-12)
    assert all(a < b for a, b in zip(vals, vals[1:]))


fractions = st.fractions(max_denominator=10**30).filter(lambda f: abs(f.numerator) < 10**40)


@given(fractions, fractions)
def test_rational_add_sub_exact(a, b):
    assert (a + b) - b == a


@given(fractions)
def test_rational_roundtrip(r):
    s = render_rational(r)
    assert parse_rational(s) == r
    num, den = s.split("/")
    assert int(den) > 0 and math.gcd(int(num), int(den)) == 1


@pytest.mark.parametrize("bad", ["", "1/0", "a/b", "3/-2", "1.5"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_log2_rational_huge():
    assert log2_rational(Fraction(2**2000, 3)) == pytest.approx(2000 - math.log2(3))
