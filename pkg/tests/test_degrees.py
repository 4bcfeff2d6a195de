import pytest

from suzuki_cd import (
    BudgetExceededError,
    ExtensionSpec,
    Family,
    cd_closed_form,
    cd_family,
    cd_oracle,
    check_corollary_b,
    degree_of,
    degrees_json_payload,
    divisors_of,
    make_params,
)


def test_extension_spec_validation():
    p = make_params(1)
    assert ExtensionSpec(p, 3).is_aut
    assert not ExtensionSpec(p, 1).is_aut
    assert ExtensionSpec(p, 3).order == 3 * 29120
    for bad in (0, 2, 4, -1):
        with pytest.raises(ValueError):
            ExtensionSpec(p, bad)


def test_closed_form_sz8():
    spec = ExtensionSpec(make_params(1), 1)
    assert cd_closed_form(spec) == {1, 14, 35, 64, 65, 91}


def test_closed_form_aut_sz8():
    spec = ExtensionSpec(make_params(1), 3)
    got = cd_closed_form(spec)
    assert got == {1, 14, 64, 91, 105, 195}
    # the three exceptions at f == 1 (mod 4), G = Aut(S):
    assert 65 not in got  # a != 1
    assert 35 not in got  # b != 1
    assert 3 * 91 not in got  # c != 3


def test_closed_form_f2_d5():
    spec = ExtensionSpec(make_params(2), 5)
    assert cd_closed_form(spec) == {1, 124, 1024, 1271, 3875, 5125, 6355}


def test_closed_form_f4_d9():
    spec = ExtensionSpec(make_params(4), 9)
    assert cd_closed_form(spec) == {
        1,
        8176,  # r(q^2-1)/2
        262144,  # q^4
        786435,  # (q^4+1) * 3
        2359305,  # (q^4+1) * 9
        245791,  # (q^2-r+1)(q^2-1) * 1
        2212119,  # * 9 (b = 3 excluded at f == 0 mod 4)
        835485,  # (q^2+r+1)(q^2-1) * 3 (c = 1 excluded)
        2506455,  # * 9
    }


def test_cd_family_f1():
    p = make_params(1)
    aut = ExtensionSpec(p, 3)
    assert cd_family(aut, Family.X) == {195}
    assert cd_family(aut, Family.Y) == {105}
    assert cd_family(aut, Family.Z) == {91}
    sub = ExtensionSpec(p, 1)
    assert cd_family(sub, Family.X) == {65}
    assert cd_family(sub, Family.Y) == {35}
    assert cd_family(sub, Family.Z) == {91}
    with pytest.raises(ValueError):
        cd_family(aut, Family.W)


def test_cd_family_f4_d9():
    spec = ExtensionSpec(make_params(4), 9)
    y_base = degree_of(spec.params, Family.Y)
    assert cd_family(spec, Family.Y) == {y_base, 9 * y_base}  # b = 3 missing


def test_cd_family_attains_one_through_invariant_label():
    # f == 4, d == 3: G is generated by the cube of the automorphism,
    # the exponent-3 witness is excluded, yet b = 1 is attained via the
    # invariant label with exponent 1
    spec = ExtensionSpec(make_params(4), 3)
    y_base = degree_of(spec.params, Family.Y)
    assert y_base in cd_family(spec, Family.Y)
    assert cd_family(spec, Family.Y) == {y_base, 3 * y_base}


def test_oracle_sz8():
    spec = ExtensionSpec(make_params(1), 1)
    ms = cd_oracle(spec)
    assert ms.entries == {1: 1, 14: 2, 35: 3, 64: 1, 65: 3, 91: 1}
    assert ms.sum_of_squares() == 29120
    assert ms.total_multiplicity() == 11


def test_oracle_aut_sz8():
    spec = ExtensionSpec(make_params(1), 3)
    ms = cd_oracle(spec)
    assert ms.entries == {1: 3, 14: 6, 64: 3, 91: 3, 105: 1, 195: 1}
    assert ms.sum_of_squares() == 3 * 29120


def test_oracle_f2_d5():
    spec = ExtensionSpec(make_params(2), 5)
    ms = cd_oracle(spec)
    assert ms.entries == {1: 5, 124: 10, 1024: 5, 1271: 5, 3875: 2, 5125: 3, 6355: 1}
    assert ms.degree_set() == cd_closed_form(spec)


def test_oracle_budget():
    with pytest.raises(BudgetExceededError):
        cd_oracle(ExtensionSpec(make_params(11), 1))


@pytest.mark.parametrize("f", [1, 2, 3, 4, 5, 6])
def test_oracle_matches_closed_form(f):
    p = make_params(f)
    for d in divisors_of(p.out_order):
        spec = ExtensionSpec(p, d)
        assert cd_oracle(spec).degree_set() == cd_closed_form(spec), (f, d)


@pytest.mark.parametrize("f", [1, 2, 3, 4, 5, 6])
def test_every_degree_is_s_degree_times_divisor(f):
    p = make_params(f)
    s_degrees = cd_closed_form(ExtensionSpec(p, 1))
    for d in divisors_of(p.out_order):
        divisors_d = divisors_of(d)
        for deg in cd_closed_form(ExtensionSpec(p, d)):
            assert any(
                deg % e == 0 and deg // e in divisors_d for e in s_degrees
            ), (f, d, deg)


def test_corollary_reports():
    sharp7 = check_corollary_b(ExtensionSpec(make_params(2), 5))
    assert sharp7.hypotheses_met and sharp7.passed
    assert sharp7.cardinality == 7 and sharp7.required == 7

    composite = check_corollary_b(ExtensionSpec(make_params(4), 9))
    assert composite.passed and composite.required == 9
    assert composite.cardinality == 9

    too_small = check_corollary_b(ExtensionSpec(make_params(1), 3))
    assert not too_small.hypotheses_met
    assert too_small.cardinality == 6
    assert too_small.passed is None and too_small.required is None

    trivial_d = check_corollary_b(ExtensionSpec(make_params(2), 1))
    assert not trivial_d.hypotheses_met


def test_json_payload_with_oracle():
    spec = ExtensionSpec(make_params(1), 3)
    payload = degrees_json_payload(spec, cd_oracle(spec))
    assert payload["f"] == 1 and payload["d"] == 3
    assert payload["q2"] == "8"
    assert payload["verified_against_oracle"] is True
    assert payload["degrees"][0] == {"degree": "1", "multiplicity": 3}
    degrees = [int(item["degree"]) for item in payload["degrees"]]
    assert degrees == sorted(degrees)


def test_json_payload_closed_form_only():
    spec = ExtensionSpec(make_params(31), 63)
    payload = degrees_json_payload(spec, None)
    assert payload["verified_against_oracle"] is False
    assert all(item["multiplicity"] is None for item in payload["degrees"])
    assert payload["q2"] == str(1 << 63)
    # big degrees survive exactly as decimal strings
    assert all(int(item["degree"]) >= 1 for item in payload["degrees"])
