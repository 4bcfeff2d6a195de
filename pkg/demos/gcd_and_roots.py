#!/usr/bin/env python3
"""The number theory under the hood: gcd branch tables and exact
root-of-unity identities, each checked against its oracle live."""

from suzuki_cd import (
    Torus,
    coincidence_classify,
    euclid_gcd,
    gcd_torus,
    make_params,
    outer_divisors,
    pair_equality,
    quad_sum_equivalence,
    root_power_sum,
    equals,
    torus_order,
)


def main() -> None:
    print("Closed-form gcd(torus order, q^2 +- 2^n) vs Euclid:")
    for f in (2, 4, 7):
        p = make_params(f)
        for n in outer_divisors(p)[:-1]:
            for torus in Torus:
                for sign in (-1, 1):
                    case = gcd_torus(p, torus, n, sign, checked=True)
                    actual = euclid_gcd(torus_order(p, torus), p.q2 + sign * 2**n)
                    print(
                        f"  f={f} n={n} {torus.value:5s} sign={sign:+d}: "
                        f"closed={case.value:4d} euclid={actual:4d} "
                        f"[{case.condition}]"
                    )

    print("\nGcd collisions between exponents 3 and 1 (always value 5,")
    print("torus and signs determined by f mod 4):")
    for f in (4, 7, 10, 13):
        case = coincidence_classify(make_params(f), 1, 3)
        print(
            f"  f={f} (f mod 4 = {f % 4}): case {case.case} on torus "
            f"{case.torus.value}, signs ({case.sign_n:+d}, {case.sign_m:+d}), "
            f"d1 = d2 = {case.d1}"
        )

    print("\nExact root-of-unity arithmetic (no floating point):")
    s = root_power_sum(5, [1, 2, 3, 4], [1, 1, 1, 1])
    minus_one = root_power_sum(5, [0], [-1])
    print(f"  sum of primitive 5th roots == -1: {equals(s, minus_one)}")
    print(f"  pair_equality(7, 2, 5) (5 == -2 mod 7): {pair_equality(7, 2, 5)}")

    print("\nThe four-root identity vs its congruence criterion (k^2 == -1):")
    for i, j in [(1, 5), (1, 2), (3, 11)]:
        identity, congruence = quad_sum_equivalence(13, 5, i, j)
        print(f"  n=13 k=5 i={i} j={j}: identity={identity} congruence={congruence}")


if __name__ == "__main__":
    main()
