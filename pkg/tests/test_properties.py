"""Property tests: relabeling invariance and algebraic identities on small ideals."""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from midk import (
    check_ndep,
    intersect,
    is_admissible_order,
    maximal_ideal,
    minimalize,
    multiply,
    search_linear_quotients,
)
from midk.monomial import MonomialIdeal

import oracles


@st.composite
def ideals(draw, max_n=4, max_gens=6, max_exp=3):
    n = draw(st.integers(1, max_n))
    vec = st.tuples(*[st.integers(0, max_exp) for _ in range(n)])
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(n, tuple(gens))


@st.composite
def ideal_and_permutation(draw):
    I = draw(ideals())
    perm = draw(st.permutations(list(range(I.n))))
    return I, perm


def relabel(m, perm):
    out = [0] * len(m)
    for i, e in enumerate(m):
        out[perm[i]] = e
    return tuple(out)


def relabel_ideal(I, perm):
    return MonomialIdeal(I.n, tuple(relabel(g, perm) for g in I.gens))


@settings(max_examples=150, deadline=None)
@given(ideal_and_permutation())
def test_ndep_relabeling(data):
    I, perm = data
    assert check_ndep(I).holds == check_ndep(relabel_ideal(I, perm)).holds


@settings(max_examples=100, deadline=None)
@given(ideal_and_permutation())
def test_admissible_relabeling(data):
    I, perm = data
    order = list(I.gens)[::-1]
    moved = [relabel(g, perm) for g in order]
    assert is_admissible_order(I, order).holds == is_admissible_order(relabel_ideal(I, perm), moved).holds


@settings(max_examples=100, deadline=None)
@given(ideals())
def test_minimalize_idempotent(I):
    assert minimalize(I.gens, I.n) == I
    assert all(not (g != h and all(a <= b for a, b in zip(g, h))) for g in I.gens for h in I.gens)


@settings(max_examples=100, deadline=None)
@given(ideals())
def test_ndep_matches_definition(I):
    assert check_ndep(I).holds == oracles.ndep_holds(I.gens)


@settings(max_examples=100, deadline=None)
@given(ideals(max_n=3, max_gens=5))
def test_maximal_ideal_product_keeps_ndep(I):
    if check_ndep(I).holds:
        assert check_ndep(multiply(maximal_ideal(I.n), I)).holds


@settings(max_examples=60, deadline=None)
@given(ideals(max_n=3, max_gens=4))
def test_intersection_commutes(I):
    J = MonomialIdeal(I.n, tuple(tuple(e + (i % 2) for i, e in enumerate(g)) for g in I.gens[::-1]))
    assert intersect(I, J) == intersect(J, I)


@settings(max_examples=60, deadline=None)
@given(ideals(max_gens=5))
def test_search_matches_oracle(I):
    assert (search_linear_quotients(I) is not None) == oracles.has_linear_quotients(I.gens)
