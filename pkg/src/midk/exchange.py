"""Deciders for the polymatroidal, non-pure dual and weakly polymatroidal exchange properties.

Every decider returns a :class:`Certificate`.  A violated certificate carries
the offending generators u, v, the pivot variable (1-based) and every
candidate exchange that was tried together with the rejected monomial, so the
verdict can be replayed against :func:`midk.monomial.contains`.

Pairs are scanned in canonical generator order (outer loop u, inner loop v),
pivots in increasing variable index, so the reported violation is the first
one in that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator, Sequence

from midk import bounds
from midk.errors import MidkError, NotEquigenerated
from midk.monomial import Membership, MonomialIdeal, contains, exchange, render, support


@dataclass(frozen=True)
class Certificate:
    holds: bool
    u: tuple | None = None
    v: tuple | None = None
    pivot: int | None = None
    tried: tuple = ()  # ((j, monomial), ...) with j 1-based

    def __bool__(self) -> bool:
        return self.holds

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "violated"

    def replay(self, I: MonomialIdeal) -> bool:
        """True iff every rejected monomial is really outside I (always true for a holds verdict)."""
        return all(not contains(I, m) for _, m in self.tried)

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if not self.holds:
            out.update(
                u=list(self.u),
                v=list(self.v),
                pivot=self.pivot,
                tried=[{"j": j, "monomial": list(m)} for j, m in self.tried],
            )
        return out

    def describe(self) -> str:
        if self.holds:
            return "holds"
        rejected = ", ".join(f"{render(m)} (j={j})" for j, m in self.tried) or "no candidate j"
        return f"violated: u={render(self.u)}, v={render(self.v)}, i={self.pivot}; not in I: {rejected}"


def variable_order(order: Sequence[int] | str, n: int) -> tuple:
    """Validate a descending variable order given as 1-based indices (or ``"2,1,3"``)."""
    if isinstance(order, str):
        try:
            order = [int(tok.strip().lstrip("x")) for tok in order.split(",") if tok.strip()]
        except ValueError:
            raise MidkError(f"cannot parse variable order {order!r}") from None
    order = tuple(order)
    if sorted(order) != list(range(1, n + 1)):
        raise MidkError(f"variable order {list(order)} is not a permutation of 1..{n}")
    return order


def natural_order(n: int) -> tuple:
    return tuple(range(1, n + 1))


def _ndep_triple(member, u, v, i) -> Certificate | None:
    tried = []
    for j in range(len(v)):
        if v[j] > u[j]:
            w = exchange(v, i, j)
            if member(w):
                return None
            tried.append((j + 1, w))
    return Certificate(False, u, v, i + 1, tuple(tried))


def ndep_violations(I: MonomialIdeal) -> Iterator[Certificate]:
    gens = I.gens
    member = Membership(gens)
    for u in gens:
        du = sum(u)
        for v in gens:
            if v is u or sum(v) < du:
                continue
            for i in range(I.n):
                if v[i] < u[i]:
                    cert = _ndep_triple(member, u, v, i)
                    if cert is not None:
                        yield cert


def check_ndep(I: MonomialIdeal) -> Certificate:
    """Non-pure dual exchange: for deg u <= deg v and v_i < u_i, some j with v_j > u_j has x_i v/x_j in I."""
    if I.is_zero:
        raise MidkError("the zero ideal has no generators to exchange")
    return next(ndep_violations(I), Certificate(True))


def _require_generators(I: MonomialIdeal, *ms) -> None:
    for m in ms:
        if tuple(m) not in I.gens:
            raise MidkError(f"{render(m)} is not a minimal generator of the ideal")


def ndep_pair_certificate(I: MonomialIdeal, u, v, i: int) -> Certificate:
    """Decide the non-pure dual exchange for one triple (u, v, i), i 1-based."""
    u, v = tuple(u), tuple(v)
    _require_generators(I, u, v)
    if sum(u) > sum(v):
        raise MidkError("the exchange condition needs deg(u) <= deg(v)")
    if not v[i - 1] < u[i - 1]:
        raise MidkError(f"deg_x{i}(v) < deg_x{i}(u) does not hold")
    cert = _ndep_triple(Membership(I.gens), u, v, i - 1)
    return Certificate(True) if cert is None else cert


def check_polymatroidal(I: MonomialIdeal) -> Certificate:
    """Symmetric exchange on an equigenerated ideal: u_i > v_i gives j with u_j < v_j and x_j u/x_i in I."""
    if I.is_zero:
        raise MidkError("the zero ideal has no generators to exchange")
    degs = I.degrees()
    if degs[0] != degs[-1]:
        raise NotEquigenerated(degs[0], degs[-1])
    gens = I.gens
    member = Membership(gens)
    for u in gens:
        for v in gens:
            if v is u:
                continue
            for i in range(I.n):
                if u[i] <= v[i]:
                    continue
                tried = []
                for j in range(I.n):
                    if u[j] < v[j]:
                        w = exchange(u, j, i)
                        if member(w):
                            break
                        tried.append((j + 1, w))
                else:
                    return Certificate(False, u, v, i + 1, tuple(tried))
    return Certificate(True)


def _weakly_pair(member, order, u, v) -> Certificate | None:
    """Check one ordered pair; None when u is not lex-larger than v or the exchange succeeds."""
    for t, var in enumerate(order):
        if u[var] != v[var]:
            break
    else:
        return None
    if u[var] < v[var]:
        return None
    tried = []
    for below in order[t + 1 :]:
        w = exchange(v, var, below)
        if w is None:
            continue
        if member(w):
            return None
        tried.append((below + 1, w))
    return Certificate(False, u, v, var + 1, tuple(tried))


def check_weakly_polymatroidal(I: MonomialIdeal, order: Sequence[int] | str | None = None) -> Certificate:
    """Weak polymatroidality with respect to a descending variable order (1-based, default x1 > ... > xn).

    For every pair with u >_lex v, first differing variable x_t, some variable
    x_j strictly below x_t in the order must divide v with x_t v/x_j in I.
    The pivot reported is the variable index of x_t.
    """
    if I.is_zero:
        raise MidkError("the zero ideal has no generators to exchange")
    order = natural_order(I.n) if order is None else variable_order(order, I.n)
    internal = tuple(i - 1 for i in order)
    gens = I.gens
    member = Membership(gens)
    for u in gens:
        for v in gens:
            if v is u:
                continue
            cert = _weakly_pair(member, internal, u, v)
            if cert is not None:
                return cert
    return Certificate(True)


def weakly_pair_certificate(I: MonomialIdeal, order: Sequence[int] | str, u, v) -> Certificate:
    """Decide the weakly polymatroidal exchange for the single pair u >_lex v."""
    order = variable_order(order, I.n)
    u, v = tuple(u), tuple(v)
    _require_generators(I, u, v)
    internal = tuple(i - 1 for i in order)
    first = next((var for var in internal if u[var] != v[var]), None)
    if first is None or u[first] < v[first]:
        raise MidkError(f"{render(u)} is not lex-larger than {render(v)} under order {list(order)}")
    cert = _weakly_pair(Membership(I.gens), internal, u, v)
    return Certificate(True) if cert is None else cert


@dataclass(frozen=True)
class OrderSearch:
    """Outcome of the all-orders search: ``order`` is None when every order failed."""

    order: tuple | None
    tried: int
    failures: tuple = field(default=(), repr=False)  # ((order, Certificate), ...)

    def __bool__(self) -> bool:
        return self.order is not None

    def to_json(self) -> dict:
        return {
            "found": self.order is not None,
            "order": list(self.order) if self.order else None,
            "tried": self.tried,
            "failures": [{"order": list(o), "certificate": c.to_json()} for o, c in self.failures],
        }


def search_weakly_polymatroidal_order(I: MonomialIdeal, limit: int | None = None) -> OrderSearch:
    """Try every descending order of the support variables (others appended in index order)."""
    if I.is_zero:
        raise MidkError("the zero ideal has no generators to exchange")
    supp = sorted(support(I))
    bounds.enforce("weakly_search_vars", len(supp), "support size for the order search", limit)
    rest = [i for i in range(1, I.n + 1) if i not in supp]
    failures = []
    for perm in permutations(supp):
        order = tuple(perm) + tuple(rest)
        cert = check_weakly_polymatroidal(I, order)
        if cert.holds:
            return OrderSearch(order, len(failures) + 1, tuple(failures))
        failures.append((order, cert))
    return OrderSearch(None, len(failures), tuple(failures))
