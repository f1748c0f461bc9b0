from __future__ import annotations

import random

import pytest

from midk import (
    BettiTable,
    BoundExceeded,
    MidkError,
    NotEquigenerated,
    betti_table,
    has_linear_resolution,
    is_componentwise_linear,
    power,
    search_linear_quotients,
)
from midk.families import random_ideal
from midk.monomial import MonomialIdeal, parse_ideal
from midk.resolution import characteristic_check, rank_mod_p, reduced_homology, taylor_euler
from midk.suite import FIXTURE_IDEALS, ndep_example


def test_known_tables():
    assert betti_table(parse_ideal(["x1", "x2"], 2)).entries == {(0, 1): 2, (1, 2): 1}
    assert betti_table(parse_ideal(["x1*x3", "x2*x4"], 4)).entries == {(0, 2): 2, (1, 4): 1}
    assert betti_table(power(parse_ideal(["x1", "x2"], 2), 2)).entries == {(0, 2): 3, (1, 3): 2}
    # Koszul complex on three variables: 3, 3, 1
    assert betti_table(parse_ideal(["x1", "x2", "x3"], 3)).entries == {(0, 1): 3, (1, 2): 3, (2, 3): 1}


def test_first_column_counts_generators():
    I = ndep_example()
    table = betti_table(I)
    for d in set(I.degrees()):
        assert table[(0, d)] == I.degrees().count(d)
    assert max(i for i, _ in table.entries) <= len(I) - 1


def test_rank_mod_p():
    assert rank_mod_p([[1, 2], [2, 4]], 7) == 1
    assert rank_mod_p([[2, 0], [0, 3]], 3) == 1
    assert rank_mod_p([[2, 0], [0, 3]], 5) == 2
    assert rank_mod_p([], 5) == 0


def test_reduced_homology_of_circle():
    faces = [[()], [(0,), (1,), (2,), (3,)], [(0, 1), (1, 2), (2, 3), (0, 3)]]
    assert reduced_homology(faces, 101) == [0, 0, 1]


def test_prime_is_checked():
    with pytest.raises(MidkError):
        betti_table(parse_ideal(["x1"], 1), 100)


def test_bound(monkeypatch):
    monkeypatch.setenv("MIDK_BOUND_BETTI_GENS", "3")
    with pytest.raises(BoundExceeded):
        betti_table(ndep_example())


def test_two_primes_and_euler_on_random():
    rng = random.Random(12)
    for _ in range(60):
        I = random_ideal(rng)
        agree, tables = characteristic_check(I)
        assert agree
        assert tables[0].euler() == taylor_euler(I)


def test_linear_resolution():
    assert not has_linear_resolution(parse_ideal(["x1*x3", "x2*x4"], 4))
    assert has_linear_resolution(power(parse_ideal(["x1", "x2"], 2), 2))
    assert has_linear_resolution(parse_ideal(["x1^2*x2"], 2))
    with pytest.raises(NotEquigenerated):
        has_linear_resolution(parse_ideal(["x1", "x2^2"], 2))


def test_componentwise_linear():
    report = is_componentwise_linear(FIXTURE_IDEALS["four_cycle"]())
    assert not report.linear and report.degrees == {2: False}
    assert is_componentwise_linear(power(parse_ideal(["x1", "x2"], 2), 2)).linear
    report = is_componentwise_linear(ndep_example())
    assert report.linear and sorted(report.degrees) == [2, 3, 4]
    with pytest.raises(MidkError):
        is_componentwise_linear(MonomialIdeal(2))


def test_linear_quotients_implies_componentwise_linear():
    rng = random.Random(19)
    checked = 0
    for _ in range(150):
        I = random_ideal(rng)
        if search_linear_quotients(I) is not None:
            checked += 1
            assert is_componentwise_linear(I).linear, I
    assert checked > 40


def test_table_json_and_render():
    t = betti_table(parse_ideal(["x1*x3", "x2*x4"], 4))
    assert BettiTable.from_json(t.to_json()) == t
    assert t.render().splitlines() == ["       0 1", "total: 2 1", "    2: 2 .", "    3: . 1"]
