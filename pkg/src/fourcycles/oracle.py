"""Slow definition-level references for 4-cycles and 2-paths.

Only adjacency queries are used here: no degree partition, no orientation
shortcuts beyond the literal rule, no grouping.
"""

from __future__ import annotations

import os
from typing import Optional, Set

from .graph import Graph, GraphError
from .listing import CanonicalCycle
from .two_paths import PathClass, TwoPath

ORACLE_LIMIT_ENV = "FOURCYCLES_ORACLE_LIMIT"


class OracleLimitError(GraphError):
    pass


def default_oracle_limit() -> int:
    return int(os.environ.get(ORACLE_LIMIT_ENV, "64"))


def _guard(g: Graph, limit: Optional[int]) -> None:
    limit = default_oracle_limit() if limit is None else limit
    if g.n > limit:
        raise OracleLimitError(f"brute force refused: n={g.n} exceeds oracle limit {limit}")


def _adjacency_sets(g: Graph):
    return [set(nbrs) for nbrs in g.adj]


def brute_force_list(g: Graph, limit: Optional[int] = None) -> Set[CanonicalCycle]:
    """All 4-cycles as the set of ordered tuples ``(a, b, c, d)`` that close a cycle
    and satisfy the canonical predicate ``a < b, c, d`` and ``b < d``."""
    _guard(g, limit)
    adj = _adjacency_sets(g)
    n = g.n
    out = set()
    for a in range(n):
        for b in range(a + 1, n):
            if b not in adj[a]:
                continue
            for c in range(a + 1, n):
                if c == b or c not in adj[b]:
                    continue
                for d in range(b + 1, n):
                    if d != c and d in adj[c] and a in adj[d]:
                        out.add(CanonicalCycle(a, b, c, d))
    return out


def _class_of(g_high, u: int, c: int, v: int) -> Optional[PathClass]:
    hu, hc, hv = g_high[u], g_high[c], g_high[v]
    if hu and hc and hv:
        return PathClass.HHH
    if not hc:
        return PathClass.L_CENTER
    return None


def brute_force_two_paths(
    g: Graph, class_filter: Optional[PathClass] = None, limit: Optional[int] = None
) -> Set[TwoPath]:
    """Every 2-path of the requested class found by a triple loop over vertices.

    High means ``deg**3 > m``; the oriented class additionally requires
    ``(deg, id)`` to increase along ``L -> H -> H``.
    """
    _guard(g, limit)
    adj = _adjacency_sets(g)
    n, m = g.n, g.m
    deg = [len(a) for a in adj]
    high = [d ** 3 > m for d in deg]
    out = set()
    for u in range(n):
        for c in range(n):
            if c == u or c not in adj[u]:
                continue
            for v in range(u + 1, n):
                if v == c or v not in adj[c]:
                    continue
                tags = []
                kind = _class_of(high, u, c, v)
                if kind is not None:
                    tags.append(kind)
                if high[c] and high[u] != high[v]:
                    low, far = (u, v) if not high[u] else (v, u)
                    if (deg[low], low) < (deg[c], c) < (deg[far], far):
                        tags.append(PathClass.ORIENTED_LHH)
                for tag in tags:
                    if class_filter is None or tag == class_filter:
                        out.add(TwoPath(u, v, c, tag))
    return out
