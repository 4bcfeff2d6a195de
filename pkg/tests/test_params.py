import math

import pytest
from hypothesis import given, strategies as st

from suzuki_cd import divisors_of, make_params, outer_divisors


def test_f1_values():
    p = make_params(1)
    assert (p.q2, p.r, p.a0, p.a1, p.a2) == (8, 4, 7, 13, 5)
    assert p.group_order == 29120
    assert p.out_order == 3
    assert p.q4 == 64


def test_f2_values():
    p = make_params(2)
    assert (p.q2, p.r, p.a0, p.a1, p.a2) == (32, 8, 31, 41, 25)


@pytest.mark.parametrize("bad", [0, -1, "1", 1.0, True])
def test_rejects_bad_f(bad):
    with pytest.raises(ValueError):
        make_params(bad)


@pytest.mark.parametrize(
    "f,expected",
    [(1, [1, 3]), (4, [1, 3, 9]), (7, [1, 3, 5, 15]), (2, [1, 5])],
)
def test_outer_divisors(f, expected):
    assert outer_divisors(make_params(f)) == expected


def test_divisors_of():
    assert divisors_of(1) == [1]
    assert divisors_of(12) == [1, 2, 3, 4, 6, 12]
    assert divisors_of(9) == [1, 3, 9]
    with pytest.raises(ValueError):
        divisors_of(0)


@pytest.mark.parametrize("f", range(1, 65))
def test_structural_invariants(f):
    p = make_params(f)
    assert p.r * p.r == 2 * p.q2
    assert p.a1 * p.a2 == p.q4 + 1
    assert p.group_order % 3 != 0
    assert math.gcd(p.a0, p.a1) == math.gcd(p.a0, p.a2) == math.gcd(p.a1, p.a2) == 1
    assert p.a0 % 2 == p.a1 % 2 == p.a2 % 2 == 1


@given(st.integers(min_value=1, max_value=300))
def test_parameter_identities_random_f(f):
    p = make_params(f)
    assert p.q2 == 2 ** (2 * f + 1)
    assert p.group_order == (p.q4 + 1) * p.q4 * (p.q2 - 1)
    divs = outer_divisors(p)
    assert divs[0] == 1 and divs[-1] == 2 * f + 1
    assert all(divs[i] < divs[i + 1] for i in range(len(divs) - 1))
    assert all((2 * f + 1) % d == 0 for d in divs)
