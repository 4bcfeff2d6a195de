"""The irreducible characters of S = Sz(q^2) as labelled families.

Irr(S) splits into six families: the trivial character (ONE), the
Steinberg character of degree q^4 (ST), two exceptional characters of
degree r(q^2-1)/2 (W), and three semisimple families X, Y, Z indexed by
the cyclic tori.  A semisimple character is determined by a nonzero
residue modulo its torus order, up to a fixed multiplier group:

========  ============  =====================  ====================
family    torus order   multipliers            degree
========  ============  =====================  ====================
X         q^2 - 1       {+-1}                  q^4 + 1
Y         q^2 + r + 1   {+-1, +-q^2}           (q^2 - r + 1)(q^2 - 1)
Z         q^2 - r + 1   {+-1, +-q^2}           (q^2 + r + 1)(q^2 - 1)
========  ============  =====================  ====================

Beware the criss-cross in the right column: the family indexed by the
torus of order q^2+r+1 has degree (q^2-r+1)(q^2-1) and vice versa.  It
is intentional (the count tests pin it down) and easy to invert by
accident.

For Y and Z the multiplier q^2 squares to -1 modulo the torus order
because q^4 == -1 there, so each multiplier set really is a group of
order 4 and every nonzero residue class has exactly 4 (respectively 2
for X) members; the family counts q^2/2 - 1, (q^2+r)/4, (q^2-r)/4 fall
out of that.  The canonical representative of a class is its least
positive member.

The field automorphism acts on semisimple labels by doubling the index:
applying it n times sends index i to the class of 2^n * i.  ONE, ST and
W are fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cyclotomic import CyclotomicSum, root_power_sum
from .params import SuzukiParams


class Family(Enum):
    ONE = "ONE"
    ST = "ST"
    X = "X"
    Y = "Y"
    Z = "Z"
    W = "W"


#: Families indexed by a torus residue class.
TORUS_FAMILIES = (Family.X, Family.Y, Family.Z)


@dataclass(frozen=True)
class CharacterLabel:
    """One irreducible character of S: a family plus a canonical index.

    ONE and ST use index 0, W uses index 1 or 2, and X/Y/Z use the
    canonical representative of their residue class.  Build through
    :func:`make_label` to get validation.
    """

    family: Family
    index: int


@dataclass(frozen=True)
class IndexClass:
    """A torus residue class: an index orbit under the multiplier group."""

    torus_order: int
    multipliers: frozenset[int]
    members: frozenset[int]

    @property
    def canonical(self) -> int:
        return min(self.members)


def degree_of(p: SuzukiParams, family: Family) -> int:
    if family is Family.ONE:
        return 1
    if family is Family.ST:
        return p.q4
    if family is Family.X:
        return p.q4 + 1
    if family is Family.Y:
        return p.a2 * p.a0
    if family is Family.Z:
        return p.a1 * p.a0
    return p.r * p.a0 // 2


def family_count(p: SuzukiParams, family: Family) -> int:
    if family in (Family.ONE, Family.ST):
        return 1
    if family is Family.X:
        return p.q2 // 2 - 1
    if family is Family.Y:
        return (p.q2 + p.r) // 4
    if family is Family.Z:
        return (p.q2 - p.r) // 4
    return 2


def torus_order_of(p: SuzukiParams, family: Family) -> int:
    if family is Family.X:
        return p.a0
    if family is Family.Y:
        return p.a1
    if family is Family.Z:
        return p.a2
    raise ValueError(f"family {family.value} has no indexing torus")


def multipliers_of(p: SuzukiParams, family: Family) -> frozenset[int]:
    n = torus_order_of(p, family)
    if family is Family.X:
        return frozenset((1, n - 1))
    q = p.q2 % n
    return frozenset((1, n - 1, q, n - q))


def canonicalize(p: SuzukiParams, family: Family, raw_index: int) -> int:
    """Least positive member of raw_index's class; rejects index 0."""
    n = torus_order_of(p, family)
    raw = raw_index % n
    if raw == 0:
        raise ValueError(f"index must be nonzero mod {n}")
    return min(raw * m % n for m in multipliers_of(p, family))


def index_class(p: SuzukiParams, family: Family, raw_index: int) -> IndexClass:
    n = torus_order_of(p, family)
    raw = raw_index % n
    if raw == 0:
        raise ValueError(f"index must be nonzero mod {n}")
    mult = multipliers_of(p, family)
    return IndexClass(
        torus_order=n,
        multipliers=mult,
        members=frozenset(raw * m % n for m in mult),
    )


def make_label(p: SuzukiParams, family: Family, index: int = 0) -> CharacterLabel:
    """Validated label; X/Y/Z indices are canonicalized."""
    if family in (Family.ONE, Family.ST):
        if index != 0:
            raise ValueError(f"{family.value} takes index 0, got {index}")
        return CharacterLabel(family, 0)
    if family is Family.W:
        if index not in (1, 2):
            raise ValueError(f"W takes index 1 or 2, got {index}")
        return CharacterLabel(family, index)
    return CharacterLabel(family, canonicalize(p, family, index))


def canonical_indices(p: SuzukiParams, family: Family) -> list[int]:
    """All canonical indices of a torus family, ascending."""
    n = torus_order_of(p, family)
    mult = multipliers_of(p, family)
    out = []
    for i in range(1, n):
        if all(i <= i * m % n for m in mult):
            out.append(i)
    return out


def torus_value(p: SuzukiParams, label: CharacterLabel, l: int) -> CyclotomicSum:
    """Exact character value at the l-th power of the torus generator.

    X_i takes value zeta^(il) + zeta^(-il) on the split torus; Y_j and
    Z_k take -(zeta^(jl) + zeta^(-jl) + zeta^(jlq^2) + zeta^(-jlq^2))
    on theirs.  Values away from the indexing torus are out of scope,
    as are ONE/ST/W values.
    """
    if label.family not in TORUS_FAMILIES:
        raise ValueError(f"no torus value formula for family {label.family.value}")
    n = torus_order_of(p, label.family)
    if not 1 <= l <= n:
        raise ValueError(f"need 1 <= l <= {n}, got {l}")
    i = label.index
    if label.family is Family.X:
        return root_power_sum(n, [i * l, -i * l], [1, 1])
    q = p.q2 % n
    return root_power_sum(
        n, [i * l, -i * l, i * l * q, -i * l * q], [-1, -1, -1, -1]
    )


def phi_power_on_label(
    p: SuzukiParams, label: CharacterLabel, n: int
) -> CharacterLabel:
    """Image of a label under the n-th power of the field automorphism.

    ONE, ST and W are invariant; a torus label's index is doubled n
    times and re-canonicalized.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if label.family not in TORUS_FAMILIES:
        return label
    order = torus_order_of(p, label.family)
    new = canonicalize(p, label.family, label.index * pow(2, n, order))
    return CharacterLabel(label.family, new)
