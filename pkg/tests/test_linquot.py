from __future__ import annotations

import random

import pytest

from midk import (
    BoundExceeded,
    MidkError,
    NotNDEP,
    check_ndep,
    is_admissible_order,
    ndep_admissible_order,
    search_linear_quotients,
    veronese,
)
from midk.families import random_ideal
from midk.monomial import MonomialIdeal, parse_ideal, parse_monomial
from midk.suite import ndep_example

import oracles


def test_admissible_examples():
    I = parse_ideal(["x1", "x2"], 2)
    assert is_admissible_order(I, [(1, 0), (0, 1)]).holds
    C = parse_ideal(["x1*x3", "x2*x4"], 4)
    for order in (C.gens, C.gens[::-1]):
        cert = is_admissible_order(C, order)
        assert not cert.holds and cert.position == 2
        assert sum(cert.colon_generator) == 2


def test_admissible_rejects_non_permutation():
    I = parse_ideal(["x1", "x2"], 2)
    with pytest.raises(MidkError):
        is_admissible_order(I, [(1, 0)])
    with pytest.raises(MidkError):
        is_admissible_order(I, [(1, 0), (1, 1)])


def test_ndep_order_traces():
    assert ndep_admissible_order(parse_ideal(["x1^2", "x1*x2"], 2)) == [(2, 0), (1, 1)]
    with pytest.raises(NotNDEP) as err:
        ndep_admissible_order(parse_ideal(["x1*x3", "x2*x4"], 4))
    assert err.value.witness == parse_monomial("x2*x4", 4) and err.value.variable == 1


def test_ndep_order_on_example():
    I = ndep_example()
    order = ndep_admissible_order(I)
    assert sorted(order) == sorted(I.gens)
    assert is_admissible_order(I, order).holds
    assert search_linear_quotients(I) is not None


def test_search_examples():
    assert search_linear_quotients(parse_ideal(["x1*x3", "x2*x4"], 4)) is None
    for n, a in [(2, 3), (3, 2), (4, 1)]:
        V = veronese(range(1, n + 1), a, n)
        order = search_linear_quotients(V)
        assert order is not None and is_admissible_order(V, order).holds
    with pytest.raises(BoundExceeded):
        search_linear_quotients(veronese([1, 2, 3], 3, 3), limit=5)
    with pytest.raises(MidkError):
        search_linear_quotients(MonomialIdeal(2))


def test_search_matches_permutation_oracle():
    rng = random.Random(17)
    for _ in range(200):
        I = random_ideal(rng, max_gens=5)
        found = search_linear_quotients(I)
        assert (found is not None) == oracles.has_linear_quotients(I.gens), I
        if found is not None:
            assert is_admissible_order(I, found).holds


def test_verifier_matches_colon_oracle():
    rng = random.Random(3)
    for _ in range(200):
        I = random_ideal(rng)
        order = list(I.gens)
        rng.shuffle(order)
        expected = all(oracles.colon_linear(order[:k], order[k]) for k in range(1, len(order)))
        assert is_admissible_order(I, order).holds == expected


def test_ndep_order_on_random_ndep_ideals():
    rng = random.Random(8)
    seen = 0
    while seen < 150:
        I = random_ideal(rng)
        if not check_ndep(I).holds:
            continue
        seen += 1
        order = ndep_admissible_order(I)
        assert is_admissible_order(I, order).holds
        assert search_linear_quotients(I) is not None
