"""Linear quotients: verify admissible orders, build one for ideals with the
non-pure dual exchange property, and search for one in general."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from midk import bounds
from midk.errors import MidkError, NotNDEP
from midk.monomial import MonomialIdeal, _minimal, _member, mul, quotient, render


@dataclass(frozen=True)
class OrderCertificate:
    """Verdict of :func:`is_admissible_order`.

    On failure ``position`` is the 1-based index of the first element whose
    prefix colon is not generated by variables, and ``colon_generator`` a
    minimal generator of that colon of degree >= 2.
    """

    holds: bool
    position: int | None = None
    element: tuple | None = None
    colon_generator: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        if self.holds:
            return {"verdict": "holds"}
        return {
            "verdict": "violated",
            "position": self.position,
            "element": list(self.element),
            "colon_generator": list(self.colon_generator),
        }

    def describe(self) -> str:
        if self.holds:
            return "holds"
        return (
            f"violated at position {self.position} ({render(self.element)}): "
            f"colon has generator {render(self.colon_generator)}"
        )


def _nonlinear_colon(prefix, u):
    """None if (prefix) : u is generated by variables, else a minimal colon generator of degree >= 2."""
    quots = [quotient(g, u) for g in prefix]
    linear = set()
    for q in quots:
        if sum(q) == 1:
            linear.add(q.index(1))
    bad = [q for q in quots if not any(q[k] for k in linear)]
    if not bad:
        return None
    return _minimal(bad)[0]


def is_admissible_order(I: MonomialIdeal, order: Sequence) -> OrderCertificate:
    order = [tuple(m) for m in order]
    if len(order) != len(I.gens) or set(order) != set(I.gens):
        raise MidkError("order is not a permutation of the minimal generators of the ideal")
    for pos in range(1, len(order)):
        bad = _nonlinear_colon(order[:pos], order[pos])
        if bad is not None:
            return OrderCertificate(False, pos + 1, order[pos], bad)
    return OrderCertificate(True)


def _ndep_order(gens: list, scale: tuple) -> list:
    if len(gens) == 1:
        return [mul(gens[0], scale)]
    n = len(gens[0])
    common = tuple(min(g[k] for g in gens) for k in range(n))
    if any(common):
        gens = [tuple(a - b for a, b in zip(g, common)) for g in gens]
        scale = mul(scale, common)
    d = min(sum(g) for g in gens)
    p = min(k for g in gens if sum(g) == d for k in range(n) if g[k])
    first = [g for g in gens if g[p]]
    rest = [g for g in gens if not g[p]]
    reduced = [g[:p] + (g[p] - 1,) + g[p + 1 :] for g in first]
    for v in rest:
        if not _member(reduced, v):
            raise NotNDEP(mul(v, scale), p + 1)
    return _ndep_order(first, scale) + _ndep_order(rest, scale)


def ndep_admissible_order(I: MonomialIdeal) -> list:
    """Admissible order via the split I = x_p I_1 + I_2 applied recursively.

    At each level the common factor is stripped, x_p is the smallest-index
    variable dividing a generator of minimal degree, the generators divisible
    by x_p come first and the rest after.  Raises NotNDEP when I_2 is not
    contained in I_1 at some level.
    """
    if I.is_zero:
        raise MidkError("the zero ideal has no generators to order")
    return _ndep_order(list(I.gens), (0,) * I.n)


def search_linear_quotients(I: MonomialIdeal, limit: int | None = None) -> list | None:
    """Depth-first search for an admissible order; None proves that none exists.

    Whether a generator can extend a prefix depends only on the prefix set, so
    dead prefix sets are memoized as bitmasks.  Candidates are tried in
    canonical order, so the returned order is the lexicographically least one
    by generator index.
    """
    gens = I.gens
    m = len(gens)
    bounds.enforce("lq_search_gens", m, "generators for the linear quotients search", limit)
    if m == 0:
        raise MidkError("the zero ideal has no generators to order")
    full = (1 << m) - 1
    dead: set[int] = set()
    chosen: list[int] = []

    def extend(mask: int) -> bool:
        if mask == full:
            return True
        if mask in dead:
            return False
        prefix = [gens[k] for k in chosen]
        for k in range(m):
            if mask >> k & 1:
                continue
            if prefix and _nonlinear_colon(prefix, gens[k]) is not None:
                continue
            chosen.append(k)
            if extend(mask | 1 << k):
                return True
            chosen.pop()
        dead.add(mask)
        return False

    if extend(0):
        return [gens[k] for k in chosen]
    return None


def colon_is_linear(prefix: Sequence, u) -> bool:
    return _nonlinear_colon([tuple(g) for g in prefix], tuple(u)) is None


__all__ = [
    "OrderCertificate",
    "is_admissible_order",
    "ndep_admissible_order",
    "search_linear_quotients",
    "colon_is_linear",
]
