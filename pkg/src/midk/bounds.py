"""Desk-scale bounds.

Each bound has a default and may be overridden by the environment variable
``MIDK_BOUND_<NAME>`` (upper case), e.g. ``MIDK_BOUND_COMPONENT_WINDOW=8``.
The environment is read at call time so tests and the CLI can change it.
"""

from __future__ import annotations

import os

from midk.errors import BoundExceeded, MidkError

DEFAULTS = {
    "lcm_pairs": 10**6,  # |G(I)|*|G(J)| in intersect/multiply
    "component_window": 6,  # d - min generator degree
    "weakly_search_vars": 8,  # support size for the all-orders search
    "lq_search_gens": 14,  # |G(I)| for search_linear_quotients
    "betti_gens": 24,  # |G(I)| for betti_table
    "lcm_closure": 20000,  # size of the lcm lattice walked by betti_table
    "kcover_entry": 12,  # k * max weight, the per-vertex cap of the cover enumeration
    "cycle_edges": 10,
    "cycle_vertices": 12,
}


def bound(name: str) -> int:
    if name not in DEFAULTS:
        raise KeyError(name)
    raw = os.environ.get(f"MIDK_BOUND_{name.upper()}")
    if raw is None:
        return DEFAULTS[name]
    try:
        return int(raw)
    except ValueError:
        raise MidkError(f"MIDK_BOUND_{name.upper()} must be an integer, got {raw!r}") from None


def enforce(name: str, value: int, what: str = "", limit: int | None = None) -> None:
    limit = bound(name) if limit is None else limit
    if value > limit:
        raise BoundExceeded(name, value, limit, what)
