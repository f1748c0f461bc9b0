"""Exact arithmetic on monomials and monomial ideals.

A monomial is a tuple of non-negative ints, one exponent per variable; position
0 holds the exponent of x1.  A :class:`MonomialIdeal` stores the ambient
variable count and its minimal generating set G(I) in canonical order
(ascending total degree, ties by descending lex on the exponent tuple, i.e.
deglex with x1 > x2 > ... > xn).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from midk import bounds
from midk.errors import AmbientMismatch, MidkError

Monomial = tuple  # tuple[int, ...]


def monomial(exponents: Iterable[int]) -> Monomial:
    exps = tuple(exponents)
    for e in exps:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise MidkError(f"exponents must be non-negative integers, got {e!r}")
    return exps


def degree(m: Monomial) -> int:
    return sum(m)


def canonical_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


def _check_same(a: int, b: int) -> None:
    if a != b:
        raise AmbientMismatch(f"ambient variable counts differ: {a} vs {b}")


def divides(u: Monomial, v: Monomial) -> bool:
    _check_same(len(u), len(v))
    return all(a <= b for a, b in zip(u, v))


def _divides(u, v) -> bool:
    for a, b in zip(u, v):
        if a > b:
            return False
    return True


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a if a > b else b for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a if a < b else b for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def quotient(u: Monomial, v: Monomial) -> Monomial:
    """u / gcd(u, v)."""
    return tuple(a - b if a > b else 0 for a, b in zip(u, v))


def exchange(v: Monomial, i: int, j: int) -> Monomial | None:
    """x_i * v / x_j with 0-based indices, or None when x_j does not divide v."""
    if v[j] == 0:
        return None
    w = list(v)
    w[j] -= 1
    w[i] += 1
    return tuple(w)


def _minimal(gens: Iterable[Monomial]) -> tuple:
    kept: list = []
    for g in sorted(set(gens), key=canonical_key):
        if not any(_divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in n variables given by any generating set.

    The generators are minimalized and put in canonical order on construction,
    so ``gens`` is always G(I).  The zero ideal has no generators; the unit
    ideal has the single all-zero generator.
    """

    n: int
    gens: tuple = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise MidkError(f"ambient variable count must be a non-negative integer, got {self.n!r}")
        checked = []
        for g in self.gens:
            g = monomial(g)
            if len(g) != self.n:
                raise AmbientMismatch(f"generator {g} has length {len(g)}, expected {self.n}")
            checked.append(g)
        object.__setattr__(self, "gens", _minimal(checked))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __contains__(self, m) -> bool:
        return contains(self, m)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def degrees(self) -> list[int]:
        return [sum(g) for g in self.gens]

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(render(g) for g in self.gens) + ")"

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        try:
            n = data["n"]
            gens = data["generators"]
        except (KeyError, TypeError):
            raise MidkError("ideal JSON must be an object with keys 'n' and 'generators'") from None
        if not isinstance(gens, list):
            raise MidkError("'generators' must be a list of exponent vectors")
        return cls(n, tuple(tuple(g) for g in gens))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ((0,) * n,))


def minimalize(gens: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(tuple(g) for g in gens))


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    _check_same(I.n, len(m))
    return any(_divides(g, m) for g in I.gens)


def _member(gens, m) -> bool:
    for g in gens:
        if _divides(g, m):
            return True
    return False


class Membership:
    """Memoized membership oracle for one ideal, vectorized over G(I)."""

    def __init__(self, gens):
        self.gens = tuple(gens)
        width = len(self.gens[0]) if self.gens else 0
        self._matrix = np.array(self.gens, dtype=np.int64).reshape(len(self.gens), width)
        self._cache: dict = {}

    def __call__(self, m) -> bool:
        hit = self._cache.get(m)
        if hit is None:
            if len(self.gens) < 8:
                hit = _member(self.gens, m)
            else:
                hit = bool((self._matrix <= np.asarray(m)).all(axis=1).any())
            self._cache[m] = hit
        return hit


def _pair_bound(I: MonomialIdeal, J: MonomialIdeal, what: str) -> None:
    bounds.enforce("lcm_pairs", len(I.gens) * len(J.gens), what)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I.n, J.n)
    _pair_bound(I, J, "intersect")
    return MonomialIdeal(I.n, tuple(lcm(u, v) for u in I.gens for v in J.gens))


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I.n, J.n)
    _pair_bound(I, J, "multiply")
    return MonomialIdeal(I.n, tuple(mul(u, v) for u in I.gens for v in J.gens))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise MidkError("power exponent must be non-negative")
    result = unit_ideal(I.n)
    for _ in range(k):
        result = multiply(result, I)
    return result


def monomials_of_degree(n: int, d: int, variables: Sequence[int] | None = None) -> Iterator[Monomial]:
    """All monomials of total degree d supported on ``variables`` (0-based, default all)."""
    variables = range(n) if variables is None else variables
    for combo in combinations_with_replacement(variables, d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def veronese(J: Iterable[int], a: int, n: int) -> MonomialIdeal:
    """m_J^a: all monomials of degree a in the variables x_j, j in J (1-based)."""
    J = sorted(set(J))
    if not J:
        raise MidkError("veronese ideal needs a non-empty variable set")
    if a < 1:
        raise MidkError(f"veronese power must be positive, got {a}")
    if J[0] < 1 or J[-1] > n:
        raise MidkError(f"variable indices {J} out of range 1..{n}")
    bounds.enforce("lcm_pairs", comb(len(J) + a - 1, a), "veronese generator count")
    return MonomialIdeal(n, tuple(monomials_of_degree(n, a, [j - 1 for j in J])))


def maximal_ideal(n: int) -> MonomialIdeal:
    return veronese(range(1, n + 1), 1, n)


def component(I: MonomialIdeal, d: int, window: int | None = None) -> MonomialIdeal:
    """I_<d>, the ideal generated by the degree-d elements of I."""
    if d < 0:
        raise MidkError("degree must be non-negative")
    if I.is_zero:
        return I
    low = min(I.degrees())
    if d < low:
        return zero_ideal(I.n)
    bounds.enforce("component_window", d - low, f"component degree {d}, min generator degree {low}", window)
    out = []
    for g in I.gens:
        k = d - sum(g)
        if k < 0:
            continue
        out.extend(mul(g, z) for z in monomials_of_degree(I.n, k))
    return MonomialIdeal(I.n, tuple(out))


def colon_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    _check_same(I.n, len(m))
    return MonomialIdeal(I.n, tuple(quotient(g, m) for g in I.gens))


def support(I: MonomialIdeal) -> set[int]:
    """1-based indices of variables appearing in some generator."""
    return {i + 1 for g in I.gens for i, e in enumerate(g) if e}


def render(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Inverse of :func:`render`; also accepts repeated factors like ``x1*x1``."""
    e = [0] * n
    text = text.replace(" ", "")
    if text == "1":
        return tuple(e)
    for factor in text.split("*"):
        match = _FACTOR.match(factor)
        if not match:
            raise MidkError(f"cannot parse monomial factor {factor!r}")
        i = int(match.group(1))
        if not 1 <= i <= n:
            raise MidkError(f"variable x{i} out of range 1..{n}")
        e[i - 1] += int(match.group(2) or 1)
    return tuple(e)


def parse_ideal(texts: Iterable[str], n: int) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(parse_monomial(t, n) for t in texts))


def all_monomials_up_to(n: int, d: int) -> Iterator[Monomial]:
    for e in product(range(d + 1), repeat=n):
        if sum(e) <= d:
            yield e
