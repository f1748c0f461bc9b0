"""Regression fixtures for every worked example and counterexample, and the
randomized theorem sweeps used by the acceptance tests and ``midk paper-suite``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from midk.exchange import (
    check_ndep,
    check_weakly_polymatroidal,
    ndep_pair_certificate,
    search_weakly_polymatroidal_order,
    weakly_pair_certificate,
)
from midk.families import (
    random_ideal,
    random_path,
    random_sunflower,
    random_three_edge,
    sample,
)
from midk.hypergraph import (
    WeightedHypergraph,
    factor_degrees,
    is_totally_balanced,
    kcover_ideal,
    three_edge_order,
    three_edge_partition,
    validate_path_family,
    validate_sunflower,
)
from midk.linquot import is_admissible_order, ndep_admissible_order
from midk.monomial import MonomialIdeal, maximal_ideal, multiply, parse_ideal, parse_monomial, power, render, veronese
from midk.resolution import betti_table, is_componentwise_linear


def ndep_example() -> MonomialIdeal:
    return parse_ideal(["x1^2", "x1*x2^2", "x1*x2*x3", "x2^2*x3", "x1*x3^3", "x2*x3^3"], 3)


def cover(edges, exponents=None, n=None) -> MonomialIdeal:
    return kcover_ideal(WeightedHypergraph.from_edges(edges, n, exponents), 1)


FIXTURE_IDEALS: dict[str, Callable[[], MonomialIdeal]] = {
    "ndep_ideal": ndep_example,
    "ndep_square": lambda: power(ndep_example(), 2),
    "ndep_not_weakly": lambda: parse_ideal(["x2*x3", "x1^2*x3"], 3),
    "bridged_path": lambda: cover([{1, 2}, {2, 3, 4}, {4, 5}]),
    "three_edge_mixed": lambda: cover([{1, 2}, {2, 3, 4}, {4, 5}], [2, 3, 2]),
    "hyperedge_triangle": lambda: cover([{1, 2, 3}, {3, 4, 5}, {1, 5, 6}], [2, 2, 2]),
    "path_four_uncovered": lambda: cover([{1, 2}, {2, 3}, {3, 4, 5}, {5, 6}], [2, 2, 2, 2]),
    "path_four_mixed": lambda: cover([{1, 2}, {2, 3}, {3, 4}, {4, 5}], [2, 2, 2, 1]),
    "path_five": lambda: cover([{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}]),
    "four_cycle": lambda: cover([{1, 2}, {2, 3}, {3, 4}, {4, 1}]),
}


@dataclass
class Row:
    name: str
    location: str
    expected: str
    computed: str
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "fixture": self.name,
            "location": self.location,
            "expected": self.expected,
            "computed": self.computed,
            "witness": self.witness,
            "pass": self.passed,
        }


@dataclass
class SuiteReport:
    rows: list
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_json(self) -> dict:
        return {"passed": self.passed, "rows": [r.to_json() for r in self.rows]}

    def render(self) -> str:
        width = max(len(r.name) for r in self.rows)
        lines = []
        for r in self.rows:
            mark = "PASS" if r.passed else "FAIL"
            lines.append(f"{mark}  {r.name.ljust(width)}  [{r.location}] expected {r.expected}; got {r.computed}")
        total = sum(r.passed for r in self.rows)
        lines.append(f"{total}/{len(self.rows)} rows passed")
        return "\n".join(lines)


def _m(text: str, n: int) -> tuple:
    return parse_monomial(text, n)


def _pair_row(name, location, I, u, v, i, rejected) -> Row:
    """A stated NDEP violation: u, v in G(I), the triple fails, and exactly ``rejected`` were tried."""
    n = I.n
    u, v = _m(u, n), _m(v, n)
    cert = ndep_pair_certificate(I, u, v, i)
    tried = sorted(render(w) for _, w in cert.tried)
    expected = sorted(render(_m(w, n)) for w in rejected)
    ok = not cert.holds and tried == expected and cert.replay(I) and not check_ndep(I).holds
    return Row(
        name,
        location,
        f"violated at u={render(u)}, v={render(v)}, i={i}, rejected {', '.join(expected)}",
        f"{cert.verdict}, rejected {', '.join(tried) or '-'}",
        ok,
        cert.to_json(),
    )


def fixture_rows() -> list[Row]:
    rows = []
    I = ndep_example()
    c = check_ndep(I)
    rows.append(Row("ndep_ideal_verdict", "ideal with the exchange property", "holds", c.verdict, c.holds, c.to_json()))
    rows.append(
        _pair_row(
            "ndep_square_pair", "square of that ideal", power(I, 2), "x1^3*x3^3", "x2^4*x3^2", 3, ["x2^3*x3^3"]
        )
    )

    J = FIXTURE_IDEALS["ndep_not_weakly"]()
    nd, wk = check_ndep(J), check_weakly_polymatroidal(J, (1, 2, 3))
    rows.append(
        Row(
            "ndep_not_weakly",
            "exchange property without weak polymatroidality",
            "ndep holds; weakly violated under x1>x2>x3",
            f"ndep {nd.verdict}; weakly {wk.verdict}",
            nd.holds and not wk.holds and wk.replay(J),
            wk.to_json(),
        )
    )

    H23 = WeightedHypergraph.from_edges([{1, 2}, {2, 3, 4}, {4, 5}])
    tb = is_totally_balanced(H23)
    row = _pair_row("bridged_path", "totally balanced cover ideal lacking the exchange", kcover_ideal(H23), "x2*x5", "x1*x4", 5, ["x1*x5", "x4*x5"])
    row.passed = row.passed and tb.balanced
    row.expected = "totally balanced; " + row.expected
    row.computed = ("totally balanced; " if tb.balanced else "not totally balanced; ") + row.computed
    rows.append(row)

    K = FIXTURE_IDEALS["three_edge_mixed"]()
    order = three_edge_order({1, 2}, {2, 3, 4}, {4, 5}, 5)
    pair = weakly_pair_certificate(K, order, _m("x2^3*x5^2", 5), _m("x2^2*x4^2", 5))
    whole = check_weakly_polymatroidal(K, order)
    rejected = [render(w) for _, w in pair.tried]
    rows.append(
        Row(
            "three_edge_mixed",
            "three edges with unequal weights",
            "order x2>x1>x4>x5>x3; violated at (x2^3*x5^2, x2^2*x4^2), rejected x2^3*x4",
            f"order {'>'.join(f'x{i}' for i in order)}; pair {pair.verdict}, rejected {', '.join(rejected)}",
            order == (2, 1, 4, 5, 3) and not pair.holds and rejected == ["x2^3*x4"] and not whole.holds,
            pair.to_json(),
        )
    )

    L = FIXTURE_IDEALS["hyperedge_triangle"]()
    search = search_weakly_polymatroidal_order(L)
    rows.append(
        Row(
            "hyperedge_triangle",
            "three pairwise-meeting edges, squared",
            "no weakly polymatroidal order among 720",
            f"{'found ' + str(search.order) if search.order else 'none'} after {search.tried} orders",
            search.order is None and search.tried == 720,
            {"tried": search.tried},
        )
    )

    rows.append(
        _pair_row(
            "path_four_uncovered",
            "four-edge path, middle edge not covered",
            FIXTURE_IDEALS["path_four_uncovered"](),
            "x1*x2*x3*x5^2",
            "x2^2*x4^2*x6^2",
            1,
            ["x1*x2*x4^2*x6^2", "x1*x2^2*x4*x6^2", "x1*x2^2*x4^2*x6"],
        )
    )
    rows.append(
        _pair_row(
            "path_four_mixed",
            "four-edge path, unequal weights",
            FIXTURE_IDEALS["path_four_mixed"](),
            "x1*x2*x3*x4",
            "x2^2*x4^2",
            1,
            ["x1*x2^2*x4", "x1*x2*x4^2"],
        )
    )
    rows.append(
        _pair_row(
            "path_five",
            "five-edge path",
            FIXTURE_IDEALS["path_five"](),
            "x1*x3*x5",
            "x2*x4*x5",
            1,
            ["x1*x2*x5", "x1*x4*x5"],
        )
    )

    C = FIXTURE_IDEALS["four_cycle"]()
    beta = betti_table(C)
    cl = is_componentwise_linear(C)
    gens = ", ".join(render(g) for g in C.gens)
    rows.append(
        Row(
            "four_cycle",
            "cover ideal of the 4-cycle",
            "G = {x1*x3, x2*x4}; beta_{1,4} = 1; not componentwise linear",
            f"G = {{{gens}}}; beta_{{1,4}} = {beta[(1, 4)]}; componentwise linear = {cl.linear}",
            set(C.gens) == {_m("x1*x3", 4), _m("x2*x4", 4)} and beta[(1, 4)] == 1 and not cl.linear,
            {"betti": beta.to_json(), "componentwise_linear": cl.to_json()},
        )
    )
    return rows


def paper_suite() -> SuiteReport:
    start = time.perf_counter()
    rows = fixture_rows()
    return SuiteReport(rows, time.perf_counter() - start)


# -- randomized theorem sweeps ------------------------------------------------


@dataclass
class SweepResult:
    name: str
    instances: int
    failures: list  # (description, detail) pairs
    seconds: float

    @property
    def passed(self) -> bool:
        return not self.failures and self.instances > 0

    def row(self) -> Row:
        computed = f"{self.instances - len(self.failures)}/{self.instances} pass in {self.seconds:.1f}s"
        witness = {"failures": [{"instance": d, "detail": x} for d, x in self.failures[:5]]}
        return Row(self.name, "randomized", "100% pass", computed, self.passed, witness)


def constructed_ndep_ideals(rng: random.Random, count: int) -> list[MonomialIdeal]:
    """Ideals with the non-pure dual exchange property from the known families (kept small)."""
    out = [ndep_example(), FIXTURE_IDEALS["ndep_not_weakly"]()]
    for n in range(1, 5):
        for a in range(1, 4):
            out.append(veronese(range(1, n + 1), a, n))
    while len(out) < count:
        draw = rng.choice([random_sunflower, random_path])
        fam = sample(draw, rng)
        if len(fam.ideal) <= 40:
            out.append(fam.ideal)
    return out


def ndep_corpus(seed: int = 0, random_count: int = 100, constructed: int = 30) -> list[MonomialIdeal]:
    """Constructed NDEP families plus random ideals (n <= 4, |G| <= 6, degree <= 4) that pass check_ndep."""
    rng = random.Random(seed)
    corpus = constructed_ndep_ideals(rng, constructed)
    found = 0
    while found < random_count:
        I = random_ideal(rng)
        if check_ndep(I).holds:
            corpus.append(I)
            found += 1
    return corpus


def _sweep(name: str, items, check) -> SweepResult:
    start = time.perf_counter()
    failures = []
    count = 0
    for item in items:
        count += 1
        detail = check(item)
        if detail:
            failures.append((str(item), detail))
    return SweepResult(name, count, failures, time.perf_counter() - start)


def ndep_order_sweep(corpus) -> SweepResult:
    def check(I):
        try:
            order = ndep_admissible_order(I)
        except Exception as exc:  # NotNDEP or bound errors are failures of the sweep
            return f"ndep_admissible_order raised {exc}"
        cert = is_admissible_order(I, order)
        return None if cert.holds else cert.describe()

    return _sweep("ndep_order_admissible", corpus, check)


def maximal_product_sweep(corpus) -> SweepResult:
    def check(I):
        cert = check_ndep(multiply(maximal_ideal(I.n), I))
        return None if cert.holds else cert.describe()

    return _sweep("maximal_ideal_product", corpus, check)


def sunflower_invariants(fam) -> str | None:
    """Membership characterization consequences for every minimal generator of a sunflower ideal."""
    part = validate_sunflower(fam.edges, fam.K, fam.n)
    a = fam.exponents
    s = len(a)
    b = fam.b
    for g in fam.ideal.gens:
        d = factor_degrees(part, g)
        core = d["B"]
        petals = [d[f"A{t + 1}"] for t in range(s)]
        if d["rest"] or d["K"] != b:
            return f"{render(g)}: outside or K degree {d['K']} != {b}"
        if any(core + petals[t] < a[t] for t in range(s)):
            return f"{render(g)}: deg(w') + deg(w_t) >= a_t fails"
        if core > a[-1]:
            return f"{render(g)}: deg(w') > a_s"
        for t in range(s):
            if part[f"A{t + 1}"] and (petals[t] != 0) != (core < a[t]):
                return f"{render(g)}: deg(w_{t + 1}) != 0 iff deg(w') < a_{t + 1} fails"
            if core <= a[t] and core + petals[t] != a[t]:
                return f"{render(g)}: deg(w') + deg(w_{t + 1}) = a_{t + 1} fails"
        deg = sum(g)
        if deg != sum(petals[:-1]) + a[-1] + b:
            return f"{render(g)}: degree formula fails"
        if not a[-1] + b <= deg <= sum(a) + b:
            return f"{render(g)}: degree {deg} outside [{a[-1] + b}, {sum(a) + b}]"
    return None


def sunflower_sweep(rng: random.Random, count: int) -> SweepResult:
    fams = [sample(random_sunflower, rng) for _ in range(count)]

    def check(fam):
        cert = check_ndep(fam.ideal)
        if not cert.holds:
            return cert.describe()
        return sunflower_invariants(fam)

    return _sweep("sunflower_exchange", fams, check)


def three_edge_invariants(fam) -> str | None:
    order = three_edge_order(*fam.edges, n=fam.n)
    cert = check_weakly_polymatroidal(fam.ideal, order)
    if not cert.holds:
        return f"order {order}: {cert.describe()}"
    part = three_edge_partition(*fam.edges, n=fam.n)
    a1 = fam.exponents[0]
    for g in fam.ideal.gens:
        d = factor_degrees(part, g)
        over = d["J'1"] + d["J''1"]
        if over != a1:
            return f"{render(g)}: degree over J1 is {over}, expected {a1}"
    return None


def three_edge_sweep(rng: random.Random, count: int) -> SweepResult:
    fams = [sample(random_three_edge, rng) for _ in range(count)]
    return _sweep("three_edge_weakly", fams, three_edge_invariants)


def path_invariants(fam) -> str | None:
    cert = check_ndep(fam.ideal)
    if not cert.holds:
        return cert.describe()
    if fam.kind != "path-four":
        return None
    part = validate_path_family(fam.edges, fam.n)
    a = fam.exponents[0]
    for g in fam.ideal.gens:
        d = factor_degrees(part, g)
        if not d["J'1"] + d["J''1"] == a == d["J'3"] + d["J''4"]:
            return f"{render(g)}: end-edge degree equalities fail"
        if sum(g) != 2 * a + d["J'2"]:
            return f"{render(g)}: deg(w) = 2a + deg(w'_2) fails"
    return None


def path_four_sweep(rng: random.Random, count: int) -> SweepResult:
    fams = [sample(random_path, rng, edges=4) for _ in range(count)]
    return _sweep("path_four_exchange", fams, path_invariants)


def path_three_sweep(rng: random.Random, count: int) -> SweepResult:
    fams = [sample(random_path, rng, edges=3) for _ in range(count)]
    return _sweep("path_three_exchange", fams, path_invariants)


def theorem_sweeps(seed: int = 0, count: int = 100) -> list[SweepResult]:
    rng = random.Random(seed)
    corpus = ndep_corpus(seed, random_count=count)
    return [
        ndep_order_sweep(corpus),
        maximal_product_sweep(corpus),
        sunflower_sweep(rng, count),
        three_edge_sweep(rng, count),
        path_four_sweep(rng, count),
        path_three_sweep(rng, count),
    ]
