from __future__ import annotations

import random
from itertools import permutations

import pytest

from midk import (
    BoundExceeded,
    MidkError,
    NotEquigenerated,
    check_ndep,
    check_polymatroidal,
    check_weakly_polymatroidal,
    contains,
    ndep_pair_certificate,
    power,
    search_weakly_polymatroidal_order,
    variable_order,
    veronese,
    weakly_pair_certificate,
)
from midk.exchange import ndep_violations
from midk.families import random_equigenerated, random_ideal
from midk.monomial import MonomialIdeal, parse_ideal, parse_monomial, render
from midk.suite import FIXTURE_IDEALS, ndep_example

import oracles


def m(text, n):
    return parse_monomial(text, n)


def test_ndep_example_holds():
    assert check_ndep(ndep_example()).holds


def test_square_first_violation_and_named_pair():
    I2 = power(ndep_example(), 2)
    first = check_ndep(I2)
    assert not first.holds
    assert first.u == m("x1^3*x3^3", 3) and first.pivot == 3
    assert first.replay(I2)
    stated = ndep_pair_certificate(I2, m("x1^3*x3^3", 3), m("x2^4*x3^2", 3), 3)
    assert not stated.holds
    assert stated.tried == ((2, m("x2^3*x3^3", 3)),)
    assert any(c.u == stated.u and c.v == stated.v and c.pivot == 3 for c in ndep_violations(I2))


def test_bridged_path_pair():
    I = FIXTURE_IDEALS["bridged_path"]()
    cert = ndep_pair_certificate(I, m("x2*x5", 5), m("x1*x4", 5), 5)
    assert {render(w) for _, w in cert.tried} == {"x1*x5", "x4*x5"}
    assert not check_ndep(I).holds


def test_principal_ndep():
    assert check_ndep(parse_ideal(["x1^2*x3"], 3)).holds


def test_ndep_rejects_zero_ideal():
    with pytest.raises(MidkError):
        check_ndep(MonomialIdeal(2))


def test_pair_certificate_preconditions():
    I = ndep_example()
    with pytest.raises(MidkError):
        ndep_pair_certificate(I, m("x1^3", 3), m("x1^2", 3), 1)
    with pytest.raises(MidkError):
        ndep_pair_certificate(I, m("x1*x2^2", 3), m("x1^2", 3), 2)  # degrees out of order
    with pytest.raises(MidkError):
        ndep_pair_certificate(I, m("x1^2", 3), m("x1*x2^2", 3), 2)  # pivot trigger fails


def test_ndep_matches_brute_force():
    rng = random.Random(21)
    for _ in range(400):
        I = random_ideal(rng)
        assert check_ndep(I).holds == oracles.ndep_holds(I.gens), I


def test_ndep_certificates_replay():
    rng = random.Random(5)
    for _ in range(300):
        I = random_ideal(rng)
        cert = check_ndep(I)
        if not cert.holds:
            assert cert.u in I.gens and cert.v in I.gens
            assert sum(cert.u) <= sum(cert.v)
            assert cert.v[cert.pivot - 1] < cert.u[cert.pivot - 1]
            assert all(not contains(I, w) for _, w in cert.tried)
            assert [j for j, _ in cert.tried] == [j + 1 for j in range(I.n) if cert.v[j] > cert.u[j]]


def test_veronese_ndep_and_polymatroidal():
    for n in range(1, 5):
        for a in range(1, 4):
            V = veronese(range(1, n + 1), a, n)
            assert check_ndep(V).holds
            assert check_polymatroidal(V).holds


def test_polymatroidal_examples():
    assert check_polymatroidal(power(parse_ideal(["x1", "x2"], 2), 2)).holds
    cert = check_polymatroidal(parse_ideal(["x1*x3", "x2*x4"], 4))
    assert not cert.holds and cert.u == m("x1*x3", 4) and cert.pivot == 1
    assert {render(w) for _, w in cert.tried} == {"x2*x3", "x3*x4"}
    with pytest.raises(NotEquigenerated) as err:
        check_polymatroidal(parse_ideal(["x1", "x2^2"], 2))
    assert err.value.degrees == (1, 2)


def test_polymatroidal_implies_ndep():
    rng = random.Random(9)
    hits = 0
    for _ in range(600):
        I = random_equigenerated(rng)
        if check_polymatroidal(I).holds:
            hits += 1
            assert check_ndep(I).holds
    assert hits > 50


def test_variable_order_parsing():
    assert variable_order("2,1,3", 3) == (2, 1, 3)
    assert variable_order("x3,x1,x2", 3) == (3, 1, 2)
    for bad in ("1,1,2", "1,2", "a,b,c"):
        with pytest.raises(MidkError):
            variable_order(bad, 3)


def test_weakly_natural_order_fails():
    I = FIXTURE_IDEALS["ndep_not_weakly"]()
    cert = check_weakly_polymatroidal(I, (1, 2, 3))
    assert not cert.holds
    assert (cert.u, cert.v, cert.pivot) == (m("x1^2*x3", 3), m("x2*x3", 3), 1)
    assert {render(w) for _, w in cert.tried} == {"x1*x2", "x1*x3"}
    assert cert.replay(I)


def test_weakly_some_order_succeeds():
    I = FIXTURE_IDEALS["ndep_not_weakly"]()
    found = search_weakly_polymatroidal_order(I)
    assert found.order == (2, 1, 3)
    truth = [p for p in permutations((1, 2, 3)) if oracles.weakly_holds(I.gens, p)]
    assert truth and found.order in truth
    assert check_weakly_polymatroidal(I, found.order).holds


def test_weakly_three_edge_mixed():
    K = FIXTURE_IDEALS["three_edge_mixed"]()
    order = (2, 1, 4, 5, 3)
    cert = weakly_pair_certificate(K, order, m("x2^3*x5^2", 5), m("x2^2*x4^2", 5))
    assert not cert.holds and [render(w) for _, w in cert.tried] == ["x2^3*x4"]
    assert cert.pivot == 2
    from midk.suite import cover

    equal = cover([{1, 2}, {2, 3, 4}, {4, 5}], [2, 2, 2])
    assert check_weakly_polymatroidal(equal, order).holds


def test_weakly_search_exhausts_720():
    result = search_weakly_polymatroidal_order(FIXTURE_IDEALS["hyperedge_triangle"]())
    assert result.order is None and result.tried == 720


def test_weakly_search_principal_and_bound():
    assert search_weakly_polymatroidal_order(parse_ideal(["x1*x3"], 3)).order == (1, 3, 2)
    with pytest.raises(BoundExceeded):
        search_weakly_polymatroidal_order(FIXTURE_IDEALS["hyperedge_triangle"](), limit=5)


def test_weakly_matches_brute_force():
    rng = random.Random(33)
    for _ in range(300):
        I = random_ideal(rng)
        order = list(range(1, I.n + 1))
        rng.shuffle(order)
        cert = check_weakly_polymatroidal(I, order)
        assert cert.holds == oracles.weakly_holds(I.gens, order), (I, order)
        if not cert.holds:
            assert cert.replay(I)


def test_certificate_json_shape():
    cert = check_ndep(power(ndep_example(), 2))
    data = cert.to_json()
    assert set(data) == {"verdict", "u", "v", "pivot", "tried"}
    assert data["tried"][0].keys() == {"j", "monomial"}
    assert check_ndep(ndep_example()).to_json() == {"verdict": "holds"}
