"""Exact numeric parameters of a Suzuki group Sz(q^2).

A single integer f >= 1 determines everything: the field size
q^2 = 2^(2f+1), the square-root parameter r = 2^(f+1) (so r^2 = 2q^2),
the orders of the three cyclic tori, the group order, and the order
2f+1 of the cyclic outer automorphism group.  All fields are plain
Python ints, so arithmetic stays exact at any f.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class SuzukiParams:
    """Derived quantities of one parameter f; immutable and safe to share."""

    f: int
    q2: int  # 2^(2f+1)
    r: int  # 2^(f+1)
    a0: int  # q^2 - 1, order of the split torus
    a1: int  # q^2 + r + 1
    a2: int  # q^2 - r + 1; a1 * a2 = q^4 + 1
    group_order: int  # (q^4 + 1) * q^4 * (q^2 - 1)
    out_order: int  # 2f + 1

    @property
    def q4(self) -> int:
        return self.q2 * self.q2


def make_params(f: int) -> SuzukiParams:
    """Build the exact parameter set for Sz(2^(2f+1)).

    Rejects f < 1: the f = 0 group Sz(2) is solvable, not simple, and
    nothing downstream applies to it.
    """
    if not isinstance(f, int) or isinstance(f, bool) or f < 1:
        raise ValueError(f"f must be an integer >= 1, got {f!r}")
    q2 = 1 << (2 * f + 1)
    r = 1 << (f + 1)
    a0 = q2 - 1
    a1 = q2 + r + 1
    a2 = q2 - r + 1
    q4 = q2 * q2
    p = SuzukiParams(
        f=f,
        q2=q2,
        r=r,
        a0=a0,
        a1=a1,
        a2=a2,
        group_order=(q4 + 1) * q4 * a0,
        out_order=2 * f + 1,
    )
    # Structural identities; cheap, so checked on every construction.
    assert p.r * p.r == 2 * p.q2
    assert p.a1 * p.a2 == p.q4 + 1
    assert p.group_order % 3 != 0
    assert math.gcd(p.a0, p.a1) == 1
    assert math.gcd(p.a0, p.a2) == 1
    assert math.gcd(p.a1, p.a2) == 1
    assert p.a0 % 2 == p.a1 % 2 == p.a2 % 2 == 1
    return p


def divisors_of(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending, by trial division."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def outer_divisors(p: SuzukiParams) -> list[int]:
    """Positive divisors of 2f+1, ascending: the candidate stabilizer
    exponents inside the outer automorphism group."""
    return divisors_of(p.out_order)
