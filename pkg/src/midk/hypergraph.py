"""Weighted hypergraphs, their ideals of k-covers, special cycles, and the
edge families (sunflower, three-edge, path) whose cover ideals have exchange
properties.

Vertices are 1-based throughout, matching the variable names x1..xn.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from midk import bounds
from midk.errors import AmbientMismatch, HypothesisViolation, MidkError
from midk.monomial import MonomialIdeal, intersect, unit_ideal, veronese


@dataclass(frozen=True)
class WeightedHypergraph:
    n: int
    edges: tuple  # ((frozenset of vertices, weight), ...)

    def __post_init__(self):
        checked = []
        for entry in self.edges:
            if isinstance(entry, tuple) and len(entry) == 2 and not isinstance(entry[0], int):
                vertices, weight = entry
            else:
                vertices, weight = entry, 1
            vertices = frozenset(vertices)
            if not vertices:
                raise MidkError("hypergraph edges must be non-empty")
            if min(vertices) < 1 or max(vertices) > self.n:
                raise MidkError(f"edge {sorted(vertices)} has vertices outside 1..{self.n}")
            if not isinstance(weight, int) or weight < 1:
                raise MidkError(f"edge weights must be positive integers, got {weight!r}")
            checked.append((vertices, weight))
        object.__setattr__(self, "edges", tuple(checked))

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], n: int | None = None, weights: Sequence[int] | None = None):
        edges = [frozenset(e) for e in edges]
        if n is None:
            n = max((max(e) for e in edges if e), default=0)
        weights = [1] * len(edges) if weights is None else list(weights)
        if len(weights) != len(edges):
            raise MidkError("one weight per edge is required")
        return cls(n, tuple(zip(edges, weights)))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [{"vertices": sorted(e), "weight": w} for e, w in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "WeightedHypergraph":
        try:
            return cls(data["n"], tuple((frozenset(e["vertices"]), e.get("weight", 1)) for e in data["edges"]))
        except (KeyError, TypeError):
            raise MidkError("hypergraph JSON needs 'n' and 'edges' of {'vertices': [...], 'weight': w}") from None


def kcover_ideal(H: WeightedHypergraph, k: int = 1) -> MonomialIdeal:
    """I_k(H, w): intersection over edges J of m_J^(k w(J))."""
    if k < 1:
        raise MidkError("k must be a positive integer")
    result = unit_ideal(H.n)
    for vertices, weight in H.edges:
        result = intersect(result, veronese(vertices, k * weight, H.n))
    return result


def is_kcover(H: WeightedHypergraph, k: int, c: Sequence[int]) -> bool:
    return all(sum(c[i - 1] for i in J) >= k * w for J, w in H.edges)


def minimal_kcovers(H: WeightedHypergraph, k: int = 1) -> set:
    """All componentwise-minimal k-covers, by bounded enumeration.

    Vertex i ranges over 0..(largest requirement of an edge through i); an
    edge is checked as soon as its last vertex is assigned.  A cover is
    minimal iff lowering any positive entry by one breaks it.
    """
    if k < 1:
        raise MidkError("k must be a positive integer")
    top = k * max((w for _, w in H.edges), default=0)
    bounds.enforce("kcover_entry", top, "k * max weight")
    n = H.n
    need = [k * w for _, w in H.edges]
    caps = [0] * n
    closing: list[list[int]] = [[] for _ in range(n)]
    for e, (J, _) in enumerate(H.edges):
        for i in J:
            caps[i - 1] = max(caps[i - 1], need[e])
        closing[max(J) - 1].append(e)
    edges = [[i - 1 for i in J] for J, _ in H.edges]
    c = [0] * n
    found: set = set()

    def minimal() -> bool:
        for i in range(n):
            if c[i]:
                c[i] -= 1
                ok = all(sum(c[x] for x in edges[e]) >= need[e] for e in range(len(edges)) if i in edges[e])
                c[i] += 1
                if ok:
                    return False
        return True

    def assign(i: int) -> None:
        if i == n:
            if minimal():
                found.add(tuple(c))
            return
        for value in range(caps[i] + 1):
            c[i] = value
            if all(sum(c[x] for x in edges[e]) >= need[e] for e in closing[i]):
                assign(i + 1)
        c[i] = 0

    assign(0)
    return found


@dataclass(frozen=True)
class BalanceReport:
    balanced: bool
    cycle: tuple | None = None  # (vertices, edge indices), both 1-based

    def __bool__(self) -> bool:
        return self.balanced

    def to_json(self) -> dict:
        out = {"totally_balanced": self.balanced}
        if self.cycle:
            out["cycle"] = {"vertices": list(self.cycle[0]), "edges": list(self.cycle[1])}
        return out


def find_special_cycle(H: WeightedHypergraph, min_length: int = 4):
    """A special cycle of length >= min_length as (vertices, edge indices), or None.

    A cycle v1, J1, v2, ..., vs, Js, v1 uses distinct edges and vertices with
    v_t, v_{t+1} in J_t; it is special when no edge of H holds more than two
    of its vertices.  The search roots each cycle at its smallest vertex.
    """
    edges = [J for J, _ in H.edges]
    bounds.enforce("cycle_edges", len(edges), "edges for the special cycle search")
    bounds.enforce("cycle_vertices", H.n, "vertices for the special cycle search")
    inside = {v: [e for e, J in enumerate(edges) if v in J] for v in range(1, H.n + 1)}

    def special_with(verts: list, w: int) -> bool:
        for J in edges:
            if w in J and sum(1 for v in verts if v in J) >= 2:
                return False
        return True

    def walk(path: list, used: list):
        start, here = path[0], path[-1]
        for e in inside[here]:
            if e in used:
                continue
            J = edges[e]
            if start in J and len(path) >= max(min_length, 2):
                # closing edge may only contain start and here among cycle vertices
                if sum(1 for v in path if v in J) == 2:
                    return path, used + [e]
            for w in sorted(J):
                if w <= start or w in path:
                    continue
                if not special_with(path, w):
                    continue
                found = walk(path + [w], used + [e])
                if found:
                    return found
        return None

    for start in range(1, H.n + 1):
        found = walk([start], [])
        if found:
            verts, used = found
            return tuple(verts), tuple(e + 1 for e in used)
    return None


def is_totally_balanced(H: WeightedHypergraph, min_length: int = 4) -> BalanceReport:
    """No special cycle of length >= min_length (default: length greater than three)."""
    cycle = find_special_cycle(H, min_length)
    return BalanceReport(cycle is None, cycle)


@dataclass(frozen=True)
class EdgePartition:
    """Disjoint vertex blocks derived from an edge family, in a fixed block order."""

    kind: str
    n: int
    blocks: tuple  # ((name, frozenset), ...)

    def __getitem__(self, name: str) -> frozenset:
        for key, block in self.blocks:
            if key == name:
                return block
        raise KeyError(name)

    @property
    def names(self) -> list[str]:
        return [name for name, _ in self.blocks]

    def rest(self) -> frozenset:
        covered = frozenset().union(*(b for _, b in self.blocks))
        return frozenset(range(1, self.n + 1)) - covered

    def to_json(self) -> dict:
        return {"kind": self.kind, "n": self.n, "blocks": {name: sorted(b) for name, b in self.blocks}}


def _sets(edges) -> list[frozenset]:
    out = [frozenset(J) for J in edges]
    if any(not J for J in out):
        raise MidkError("edges must be non-empty")
    return out


def _ambient(n, *groups) -> int:
    top = max((max(J) for g in groups for J in g if J), default=0)
    if n is None:
        return top
    if top > n:
        raise MidkError(f"vertex {top} outside 1..{n}")
    return n


def validate_sunflower(edges: Sequence[Iterable[int]], K: Iterable[int] = (), n: int | None = None) -> EdgePartition:
    """Check J_i cap J_j = B (the common core) for all i < j and K disjoint from every J_t."""
    Js = _sets(edges)
    K = frozenset(K)
    n = _ambient(n, Js, [K])
    core = frozenset.intersection(*Js) if Js else frozenset()
    for a in range(len(Js)):
        for b in range(a + 1, len(Js)):
            if Js[a] & Js[b] != core:
                raise HypothesisViolation(
                    "pairwise intersections equal the common intersection",
                    f"J{a + 1} & J{b + 1} = {sorted(Js[a] & Js[b])} but the common core is {sorted(core)}",
                )
    for t, J in enumerate(Js):
        if K & J:
            raise HypothesisViolation("K is disjoint from every edge", f"K meets J{t + 1} in {sorted(K & J)}")
    blocks = [("B", core)] + [(f"A{t + 1}", J - core) for t, J in enumerate(Js)] + [("K", K)]
    return EdgePartition("sunflower", n, tuple(blocks))


def validate_path_family(edges: Sequence[Iterable[int]], n: int | None = None) -> EdgePartition:
    """Four-edge path family, or the three-edge variant J1 cap J3 = {} with J2 inside J1 cup J3."""
    Js = _sets(edges)
    n = _ambient(n, Js)
    if len(Js) == 4:
        J1, J2, J3, J4 = Js
        for name, (x, y) in {"J1 & J3 = {}": (J1, J3), "J1 & J4 = {}": (J1, J4), "J2 & J4 = {}": (J2, J4)}.items():
            if x & y:
                raise HypothesisViolation(name, f"intersection is {sorted(x & y)}")
        for name, (x, y) in {"J2 <= J1 | J3": (J2, J1 | J3), "J3 <= J2 | J4": (J3, J2 | J4)}.items():
            if not x <= y:
                raise HypothesisViolation(name, f"{sorted(x - y)} not covered")
        blocks = [("J'1", J1 & J2), ("J'2", J2 & J3), ("J'3", J3 & J4), ("J''1", J1 - J2), ("J''4", J4 - J3)]
        return EdgePartition("path-four", n, tuple(blocks))
    if len(Js) == 3:
        J1, J2, J3 = Js
        if J1 & J3:
            raise HypothesisViolation("J1 & J3 = {}", f"intersection is {sorted(J1 & J3)}")
        if not J2 <= J1 | J3:
            raise HypothesisViolation("J2 <= J1 | J3", f"{sorted(J2 - (J1 | J3))} not covered")
        blocks = [("J'1", J1 & J2), ("J'2", J2 & J3), ("J''1", J1 - J2), ("J''3", J3 - J2)]
        return EdgePartition("path-three", n, tuple(blocks))
    raise MidkError(f"a path family has three or four edges, got {len(Js)}")


def three_edge_partition(J1, J2, J3, n: int | None = None) -> EdgePartition:
    J1, J2, J3 = _sets([J1, J2, J3])
    n = _ambient(n, [J1, J2, J3])
    if J1 & J3:
        raise HypothesisViolation("J1 & J3 = {}", f"intersection is {sorted(J1 & J3)}")
    union = J1 | J2 | J3
    blocks = [
        ("J'1", J1 & J2),
        ("J''1", J1 - J2),
        ("J'2", J2 & J3),
        ("J''3", J3 - J2),
        ("J''2", J2 - (J1 | J3)),
        ("K", frozenset(range(1, n + 1)) - union),
    ]
    return EdgePartition("three-edge", n, tuple(blocks))


def three_edge_order(J1, J2, J3, n: int | None = None) -> tuple:
    """Descending variable order: blocks J'1, J''1, J'2, J''3, J''2, K (first is largest),
    increasing index inside each block."""
    part = three_edge_partition(J1, J2, J3, n)
    return tuple(v for _, block in part.blocks for v in sorted(block))


def factor_degrees(part: EdgePartition, m: Sequence[int]) -> dict:
    """Degree of m restricted to each block, plus ``rest`` for the uncovered variables."""
    if len(m) != part.n:
        raise AmbientMismatch(f"monomial has {len(m)} variables, partition has {part.n}")
    out = {name: sum(m[i - 1] for i in block) for name, block in part.blocks}
    out["rest"] = sum(m[i - 1] for i in part.rest())
    return out
