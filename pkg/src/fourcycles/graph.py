"""Immutable simple undirected graphs, the high/low degree split and the degree orientation."""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Raised for input that cannot form a simple undirected graph."""


class SelfLoopError(GraphError):
    def __init__(self, u: int, where: Optional[str] = None):
        self.vertex = u
        self.where = where
        loc = f" at {where}" if where else ""
        super().__init__(f"self-loop ({u}, {u}){loc}: 4-cycles are only defined on simple graphs")


class Graph:
    """Simple undirected graph over vertices ``0..n-1`` in CSR form.

    ``indptr``/``indices`` are read-only numpy arrays; ``adj[v]`` is the same
    neighbor list as a sorted tuple, which is what the pure-Python hot loops use.
    """

    __slots__ = ("n", "m", "indptr", "indices", "adj", "duplicates")

    def __init__(self, n: int, adj: Sequence[Sequence[int]], duplicates: int = 0):
        adj_t = tuple(tuple(nbrs) for nbrs in adj)
        if len(adj_t) != n:
            raise GraphError(f"expected {n} neighbor lists, got {len(adj_t)}")
        degrees = np.fromiter((len(a) for a in adj_t), dtype=np.int64, count=n)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])
        indices = np.fromiter(
            (w for nbrs in adj_t for w in nbrs), dtype=np.int64, count=int(indptr[-1])
        )
        indptr.flags.writeable = False
        indices.flags.writeable = False
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", int(indptr[-1]) // 2)
        object.__setattr__(self, "indptr", indptr)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "adj", adj_t)
        object.__setattr__(self, "duplicates", duplicates)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adj[u]
        i = bisect.bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> Iterator[Edge]:
        """Each edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs[bisect.bisect_right(nbrs, u):]:
                yield u, v

    def check(self) -> None:
        """Verify the structural invariants; raises ``GraphError`` on violation."""
        total = 0
        for v, nbrs in enumerate(self.adj):
            total += len(nbrs)
            for i, w in enumerate(nbrs):
                if not 0 <= w < self.n:
                    raise GraphError(f"neighbor {w} of {v} out of range")
                if w == v:
                    raise SelfLoopError(v)
                if i and nbrs[i - 1] >= w:
                    raise GraphError(f"neighbor list of {v} not strictly increasing")
                if not self.has_edge(w, v):
                    raise GraphError(f"edge ({v}, {w}) not symmetric")
        if total != 2 * self.m:
            raise GraphError("degree sum differs from 2m")

    def to_scipy(self):
        """Adjacency matrix as ``scipy.sparse.csr_array`` with int64 entries."""
        from scipy.sparse import csr_array

        data = np.ones(len(self.indices), dtype=np.int64)
        return csr_array((data, self.indices, self.indptr), shape=(self.n, self.n))


def build_graph(edges: Iterable[Edge], n_hint: Optional[int] = None) -> Graph:
    """Build a graph from vertex-id pairs.

    Duplicate edges (in either direction) are collapsed and counted in
    ``Graph.duplicates``. A self-loop raises :class:`SelfLoopError` naming the
    offending pair's position in the input.
    """
    seen = set()
    duplicates = 0
    max_id = -1
    for pos, (u, v) in enumerate(edges):
        u = int(u)
        v = int(v)
        if u < 0 or v < 0:
            raise GraphError(f"negative vertex id in pair #{pos}: ({u}, {v})")
        if u == v:
            raise SelfLoopError(u, f"pair #{pos}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        if key[1] > max_id:
            max_id = key[1]
    n = max(max_id + 1, n_hint or 0)
    adj = [[] for _ in range(n)]
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()
    return Graph(n, adj, duplicates)


@dataclass(frozen=True)
class DegreePartition:
    """High/low split at ``m**(1/3)`` plus the degree orientation of every edge.

    A vertex is high iff ``deg(v)**3 > m``. Edge ``{u, v}`` points from ``u``
    to ``v`` iff ``(deg(u), u) < (deg(v), v)``.
    """

    threshold_cubed: int
    is_high: Tuple[bool, ...]
    high_vertices: Tuple[int, ...]
    degrees: Tuple[int, ...] = field(repr=False)

    def rank(self, v: int) -> Tuple[int, int]:
        return (self.degrees[v], v)

    def oriented(self, u: int, v: int) -> bool:
        """True iff edge ``{u, v}`` is oriented ``u -> v`` (adjacency not checked)."""
        du = self.degrees[u]
        dv = self.degrees[v]
        return du < dv or (du == dv and u < v)

    @property
    def low_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v, h in enumerate(self.is_high) if not h)


def degree_partition(g: Graph) -> DegreePartition:
    m = g.m
    degrees = tuple(len(a) for a in g.adj)
    is_high = tuple(d * d * d > m for d in degrees)
    high = tuple(v for v, h in enumerate(is_high) if h)
    return DegreePartition(threshold_cubed=m, is_high=is_high, high_vertices=high, degrees=degrees)


def common_neighbors(g: Graph, u: int, v: int) -> list:
    """Sorted common neighbors of ``u`` and ``v`` by merging their sorted lists."""
    if u == v:
        raise GraphError("common_neighbors needs two distinct vertices")
    for x in (u, v):
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} out of range for n={g.n}")
    a = g.adj[u]
    b = g.adj[v]
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            out.append(x)
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return out
