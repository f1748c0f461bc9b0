"""Random instance generators for the structured edge families and for small
monomial ideals.  All take an explicit ``random.Random`` so runs are
reproducible from a seed."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from math import comb, prod

from midk.hypergraph import WeightedHypergraph, kcover_ideal
from midk.monomial import MonomialIdeal


@dataclass(frozen=True)
class Family:
    """An edge family with its exponents and the cover ideal they define."""

    kind: str
    n: int
    edges: tuple  # frozensets, 1-based
    exponents: tuple
    K: frozenset = frozenset()
    b: int = 0

    def hypergraph(self) -> WeightedHypergraph:
        edges = list(self.edges)
        weights = list(self.exponents)
        if self.K:
            edges.append(self.K)
            weights.append(self.b)
        return WeightedHypergraph.from_edges(edges, self.n, weights)

    @cached_property
    def ideal(self) -> MonomialIdeal:
        return kcover_ideal(self.hypergraph(), 1)

    def size_estimate(self) -> int:
        """Product of the Veronese generator counts, an upper bound for |G(I)|."""
        pairs = list(zip(self.edges, self.exponents))
        if self.K:
            pairs.append((self.K, self.b))
        return prod(comb(len(J) + a - 1, a) for J, a in pairs)


# Instances past these sizes are resampled: the exchange checks are quadratic in |G(I)|.
MAX_ESTIMATE = 2000
MAX_GENERATORS = 250


def _small(family: Family) -> bool:
    return family.size_estimate() <= MAX_ESTIMATE and len(family.ideal) <= MAX_GENERATORS


def sample(draw, rng: random.Random, **kwargs) -> Family:
    """Draw from ``draw`` until the instance is small enough for desk-scale checking."""
    while True:
        family = draw(rng, **kwargs)
        if _small(family):
            return family


def _layout(rng: random.Random, sizes: list[int], spare: int = 1):
    """Assign disjoint random labels to blocks of the given sizes."""
    n = sum(sizes) + rng.randint(0, spare)
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    blocks, pos = [], 0
    for size in sizes:
        blocks.append(frozenset(labels[pos : pos + size]))
        pos += size
    return n, blocks


def random_sunflower(rng: random.Random, max_edges: int = 4, max_block: int = 3, max_a: int = 3, max_b: int = 2) -> Family:
    s = rng.randint(1, max_edges)
    core = rng.randint(0, max_block)
    petals = [rng.randint(0 if core else 1, max_block) for _ in range(s)]
    k_size = rng.randint(0, max_block)
    n, blocks = _layout(rng, [core] + petals + [k_size])
    B, A, K = blocks[0], blocks[1 : s + 1], blocks[s + 1]
    exps = tuple(sorted(rng.randint(1, max_a) for _ in range(s)))
    b = rng.randint(1, max_b) if K else 0
    return Family("sunflower", n, tuple(B | a for a in A), exps, K, b)


def random_three_edge(rng: random.Random, max_block: int = 2, max_a: int = 3) -> Family:
    """J1, J2, J3 with J1 & J3 empty and exponents a1 >= a2 >= a3."""
    # blocks J'1, J''1, J'2, J''3, J''2
    while True:
        sizes = [rng.randint(0, max_block) for _ in range(5)]
        if sizes[0] + sizes[1] and sizes[2] + sizes[3] and sizes[0] + sizes[2] + sizes[4]:
            break
    n, (p1, q1, p2, q3, q2) = _layout(rng, sizes)
    exps = tuple(sorted((rng.randint(1, max_a) for _ in range(3)), reverse=True))
    return Family("three-edge", n, (p1 | q1, p1 | p2 | q2, p2 | q3), exps)


def random_path(rng: random.Random, edges: int = 4, max_block: int = 2, max_a: int = 3) -> Family:
    """Path family with constant exponent: four edges, or three for the corollary variant."""
    a = rng.randint(1, max_a)
    if edges == 4:
        # blocks J'1, J'2, J'3, J''1, J''4
        while True:
            sizes = [rng.randint(0, max_block) for _ in range(5)]
            p1, p2, p3, q1, q4 = sizes
            if p1 + q1 and p1 + p2 and p2 + p3 and p3 + q4:
                break
        n, (p1, p2, p3, q1, q4) = _layout(rng, sizes)
        return Family("path-four", n, (p1 | q1, p1 | p2, p2 | p3, p3 | q4), (a,) * 4)
    while True:
        sizes = [rng.randint(0, max_block) for _ in range(4)]
        p1, p2, q1, q3 = sizes
        if p1 + q1 and p1 + p2 and p2 + q3:
            break
    n, (p1, p2, q1, q3) = _layout(rng, sizes)
    return Family("path-three", n, (p1 | q1, p1 | p2, p2 | q3), (a,) * 3)


def random_ideal(rng: random.Random, max_n: int = 4, max_gens: int = 6, max_degree: int = 4) -> MonomialIdeal:
    n = rng.randint(1, max_n)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(1, max_degree)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        gens.append(tuple(e))
    return MonomialIdeal(n, tuple(gens))


def random_equigenerated(rng: random.Random, max_n: int = 4, max_gens: int = 6, max_degree: int = 4) -> MonomialIdeal:
    n = rng.randint(1, max_n)
    d = rng.randint(1, max_degree)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        gens.append(tuple(e))
    return MonomialIdeal(n, tuple(gens))
