"""Graded Betti numbers of monomial ideals and the componentwise linearity test.

beta_{i,m}(I) is the reduced homology rank in dimension i-1 of the upper
Koszul complex K^m(I) = {squarefree F : m / x^F in I}.  It can be non-zero
only for m in the lcm lattice of G(I), so that lattice is all we walk.
Homology is computed over GF(p) by Gaussian elimination of the boundary
matrices.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from midk import bounds
from midk.errors import MidkError, NotEquigenerated
from midk.monomial import MonomialIdeal, _member, component, lcm

DEFAULT_PRIME = 32003
CHECK_PRIME = 101


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def rank_mod_p(matrix, p: int) -> int:
    a = np.array(matrix, dtype=np.int64) % p
    if a.size == 0:
        return 0
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        r = rank + nz[0]
        if r != rank:
            a[[rank, r]] = a[[r, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = a[rank] * inv % p
        below = a[rank + 1 :, c].copy()
        if below.any():
            a[rank + 1 :] = (a[rank + 1 :] - np.outer(below, a[rank])) % p
        rank += 1
    return rank


def lcm_closure(I: MonomialIdeal) -> set:
    limit = bounds.bound("lcm_closure")
    closure: set = set()
    for g in I.gens:
        closure |= {lcm(g, x) for x in closure}
        closure.add(g)
        if len(closure) > limit:
            bounds.enforce("lcm_closure", len(closure), "lcm lattice size")
    return closure


def upper_koszul_faces(I: MonomialIdeal, m: tuple) -> list[list[tuple]]:
    """Faces of K^m(I) grouped by size: faces[k] holds the (k-1)-dimensional faces."""
    supp = [i for i, e in enumerate(m) if e]
    faces: list[list[tuple]] = []
    for size in range(len(supp) + 1):
        layer = []
        for sigma in combinations(supp, size):
            w = list(m)
            for i in sigma:
                w[i] -= 1
            if _member(I.gens, w):
                layer.append(sigma)
        if not layer:
            break
        faces.append(layer)
    return faces


def reduced_homology(faces: list[list[tuple]], p: int) -> list[int]:
    """Ranks of reduced homology H~_{k-1} for k = 0.. (index 0 is dimension -1)."""
    ranks = [0]  # rank of the boundary map out of layer k
    for k in range(1, len(faces)):
        index = {f: r for r, f in enumerate(faces[k - 1])}
        mat = np.zeros((len(faces[k - 1]), len(faces[k])), dtype=np.int64)
        for c, sigma in enumerate(faces[k]):
            for pos in range(len(sigma)):
                mat[index[sigma[:pos] + sigma[pos + 1 :]], c] = 1 if pos % 2 == 0 else p - 1
        ranks.append(rank_mod_p(mat, p))
    ranks.append(0)
    return [len(faces[k]) - ranks[k] - ranks[k + 1] for k in range(len(faces))]


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j}; only non-zero entries are stored."""

    entries: dict = field(default_factory=dict)  # (i, j) -> rank
    prime: int = DEFAULT_PRIME

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, BettiTable) and self.entries == other.entries

    def to_json(self) -> dict:
        return {"entries": [{"i": i, "j": j, "rank": r} for (i, j), r in sorted(self.entries.items())]}

    @classmethod
    def from_json(cls, data: dict) -> "BettiTable":
        return cls({(e["i"], e["j"]): e["rank"] for e in data["entries"]})

    def euler(self) -> dict:
        """j -> sum_i (-1)^i beta_{i,j}."""
        out: dict = defaultdict(int)
        for (i, j), r in self.entries.items():
            out[j] += (-1) ** i * r
        return {j: v for j, v in out.items() if v}

    def render(self) -> str:
        """Macaulay2-style display: column i, row j - i."""
        if not self.entries:
            return "total: (zero ideal)"
        cols = range(max(i for i, _ in self.entries) + 1)
        rows = sorted({j - i for i, j in self.entries})
        width = max(len(str(r)) for r in self.entries.values()) + 1
        totals = [sum(r for (i, _), r in self.entries.items() if i == c) for c in cols]
        label = max(len("total:"), max(len(f"{r}:") for r in rows))
        width = max(width, max(len(str(t)) for t in totals) + 1)
        lines = ["".ljust(label) + "".join(str(c).rjust(width) for c in cols)]
        lines.append("total:".rjust(label) + "".join(str(t).rjust(width) for t in totals))
        for r in rows:
            cells = (str(self.entries[(c, c + r)]) if (c, c + r) in self.entries else "." for c in cols)
            lines.append(f"{r}:".rjust(label) + "".join(x.rjust(width) for x in cells))
        return "\n".join(lines)


def multigraded_betti(I: MonomialIdeal, p: int = DEFAULT_PRIME) -> dict:
    """m -> {i: beta_{i,m}} for every m of the lcm lattice with some non-zero entry."""
    if not is_prime(p):
        raise MidkError(f"{p} is not prime")
    bounds.enforce("betti_gens", len(I.gens), "generators for the Betti computation")
    out = {}
    for m in sorted(lcm_closure(I)):
        homology = reduced_homology(upper_koszul_faces(I, m), p)
        ranks = {i: r for i, r in enumerate(homology) if r}
        if ranks:
            out[m] = ranks
    return out


def betti_table(I: MonomialIdeal, p: int = DEFAULT_PRIME) -> BettiTable:
    entries: dict = defaultdict(int)
    for m, ranks in multigraded_betti(I, p).items():
        for i, r in ranks.items():
            entries[(i, sum(m))] += r
    return BettiTable(dict(entries), p)


def characteristic_check(I: MonomialIdeal, primes=(DEFAULT_PRIME, CHECK_PRIME)) -> tuple[bool, list]:
    """Compute the table over each prime; the flag is False when they disagree."""
    tables = [betti_table(I, p) for p in primes]
    return all(t == tables[0] for t in tables), tables


def taylor_euler(I: MonomialIdeal) -> dict:
    """j -> sum over non-empty S subset of G(I) with deg lcm(S) = j of (-1)^(|S|-1)."""
    gens = I.gens
    bounds.enforce("betti_gens", len(gens), "Taylor complex enumeration", limit=16)
    out: dict = defaultdict(int)

    def walk(start: int, current, size: int) -> None:
        for k in range(start, len(gens)):
            m = gens[k] if current is None else lcm(current, gens[k])
            out[sum(m)] += 1 if size % 2 == 0 else -1
            walk(k + 1, m, size + 1)

    walk(0, None, 0)
    return {j: v for j, v in out.items() if v}


def has_linear_resolution(I: MonomialIdeal, p: int = DEFAULT_PRIME) -> bool:
    if I.is_zero:
        raise MidkError("the zero ideal has no resolution to inspect")
    degs = I.degrees()
    if degs[0] != degs[-1]:
        raise NotEquigenerated(degs[0], degs[-1])
    d = degs[0]
    return all(j == i + d for (i, j) in betti_table(I, p).entries)


@dataclass(frozen=True)
class ComponentReport:
    linear: bool
    degrees: dict  # d -> whether I_<d> has a linear resolution

    def __bool__(self) -> bool:
        return self.linear

    def to_json(self) -> dict:
        return {"componentwise_linear": self.linear, "degrees": {str(d): ok for d, ok in self.degrees.items()}}


def is_componentwise_linear(I: MonomialIdeal, p: int = DEFAULT_PRIME) -> ComponentReport:
    """Check I_<d> for d between the least and greatest generator degree.

    Beyond the greatest generator degree I_<d+1> = m I_<d>, and multiplying an
    ideal with linear resolution by the maximal ideal keeps it linear, so
    those degrees need no check.
    """
    if I.is_zero:
        raise MidkError("the zero ideal has no components")
    degs = I.degrees()
    report = {}
    for d in range(degs[0], degs[-1] + 1):
        report[d] = has_linear_resolution(component(I, d), p)
    return ComponentReport(all(report.values()), report)
