"""4-cycle listing, detection and counting."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, NamedTuple, Optional, Tuple

import numpy as np

from .graph import Graph, degree_partition
from .two_paths import high_out_lists, iter_hhh, iter_lcenter, iter_oriented_lhh


class CanonicalCycle(NamedTuple):
    """4-cycle ``a-b-c-d-a`` with ``a`` its minimum vertex and ``b < d``."""

    a: int
    b: int
    c: int
    d: int


CycleSink = Callable[[CanonicalCycle], None]


def _canon(w: int, x: int, y: int, z: int) -> Tuple[int, int, int, int]:
    # rotate the minimum to the front, then orient so that b < d
    if w < x and w < y and w < z:
        a, b, c, d = w, x, y, z
    elif x < y and x < z:
        a, b, c, d = x, y, z, w
    elif y < z:
        a, b, c, d = y, z, w, x
    else:
        a, b, c, d = z, w, x, y
    if b > d:
        return a, d, c, b
    return a, b, c, d


_make = CanonicalCycle._make


def canonical_cycle(w: int, x: int, y: int, z: int) -> CanonicalCycle:
    """Canonical form of the cycle visiting ``w, x, y, z`` in that cyclic order."""
    return _make(_canon(w, x, y, z))


@dataclass
class ListingStats:
    """Work counters filled in by the listing routines."""

    useful_2paths: int = 0
    raw_candidates: int = 0
    dedup_hits: int = 0
    t: int = 0


def all_two_paths(g: Graph) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Every 2-path of ``g`` as arrays ``(lo, hi, center)`` with ``lo < hi``.

    Vectorized over the CSR arrays: the neighbor at slot ``k`` of a center's
    list is paired with every later slot of the same list.
    """
    indptr = g.indptr
    indices = g.indices
    if len(indices) == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty, empty
    deg = np.diff(indptr)
    owner = np.repeat(np.arange(g.n, dtype=np.int64), deg)
    later = indptr[owner + 1] - 1 - np.arange(len(indices), dtype=np.int64)
    first = np.repeat(np.arange(len(indices), dtype=np.int64), later)
    run_start = np.repeat(np.cumsum(later) - later, later)
    second = first + 1 + (np.arange(len(first), dtype=np.int64) - run_start)
    return indices[first], indices[second], owner[first]


def _pair_index(lo: np.ndarray, hi: np.ndarray, n: int) -> np.ndarray:
    # row-major strict upper triangle of an n x n table
    return lo * n - lo * (lo + 1) // 2 + (hi - lo - 1)


def list_n2(g: Graph, sink: Optional[CycleSink] = None, stats: Optional[ListingStats] = None) -> int:
    """List all 4-cycles via a dense table of 2-path centers per vertex pair.

    Runs in ``O(n^2 + t)``: the table has one slot per unordered pair and
    the number of 2-paths is at most ``n^2 + 4t``. Returns ``t``.
    """
    st = stats if stats is not None else ListingStats()
    n = g.n
    lo, hi, center = all_two_paths(g)
    st.useful_2paths += len(lo)
    if n < 4:
        st.t = 0
        return 0
    keys = _pair_index(lo, hi, n)
    table = np.bincount(keys, minlength=n * (n - 1) // 2)
    multi = np.flatnonzero(table >= 2)
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    centers = center[order].tolist()
    ends_lo = lo[order]
    ends_hi = hi[order]
    starts = np.searchsorted(sorted_keys, multi).tolist()
    sizes = table[multi].tolist()
    seen = set()
    raw = 0
    hits = 0
    try:
        for s, k in zip(starts, sizes):
            x = int(ends_lo[s])
            y = int(ends_hi[s])
            for c1, c2 in combinations(centers[s:s + k], 2):
                raw += 1
                key = _canon(x, c1, y, c2)
                if key in seen:
                    hits += 1
                    continue
                seen.add(key)
                if sink is not None:
                    sink(_make(key))
    finally:
        st.raw_candidates += raw
        st.dedup_hits += hits
        st.t = len(seen)
    return len(seen)


def list_m43(g: Graph, sink: Optional[CycleSink] = None, stats: Optional[ListingStats] = None) -> int:
    """List all 4-cycles from the three useful 2-path classes only.

    High/low split at ``m**(1/3)``; 2-paths are all-high, low-centered, or
    oriented low->high->high. They are grouped by endpoint pair in a hash map
    and every new center meeting an existing one yields a candidate cycle,
    which is canonicalized and deduplicated. Returns ``t``.
    """
    st = stats if stats is not None else ListingStats()
    p = degree_partition(g)
    n = g.n
    groups = {}
    seen = set()
    useful = 0
    raw = 0
    hits = 0
    sources = (
        iter_hhh(g, p),
        iter_lcenter(g, p),
        iter_oriented_lhh(g, p, high_out_lists(g, p)),
    )
    try:
        for source in sources:
            for x, y, c in source:
                useful += 1
                key = x * n + y
                cs = groups.get(key)
                if cs is None:
                    groups[key] = [c]
                    continue
                for c2 in cs:
                    raw += 1
                    cyc = _canon(x, c2, y, c)
                    if cyc in seen:
                        hits += 1
                        continue
                    seen.add(cyc)
                    if sink is not None:
                        sink(_make(cyc))
                cs.append(c)
    finally:
        st.useful_2paths += useful
        st.raw_candidates += raw
        st.dedup_hits += hits
        st.t = len(seen)
    return len(seen)


class _Found(Exception):
    pass


def _stop(_cyc: CanonicalCycle) -> None:
    raise _Found


def prefer_n2(g: Graph) -> bool:
    """True when the dense ``n^2`` route is predicted cheaper than ``m^(4/3)``."""
    return g.n ** 6 <= g.m ** 4


def detect(g: Graph, stats: Optional[ListingStats] = None) -> bool:
    """Whether ``g`` has a 4-cycle; stops at the first one found."""
    lister = list_n2 if prefer_n2(g) else list_m43
    try:
        lister(g, _stop, stats)
    except _Found:
        return True
    return False


def count_codegree(g: Graph) -> int:
    """``t`` as half the sum of ``C(codeg(u, v), 2)`` over unordered pairs."""
    lo, hi, _ = all_two_paths(g)
    if len(lo) == 0:
        return 0
    _, codeg = np.unique(lo * g.n + hi, return_counts=True)
    total = int(np.sum(codeg * (codeg - 1) // 2, dtype=np.int64))
    assert total % 2 == 0, "each 4-cycle has exactly two opposite pairs"
    return total // 2


ALGOS = ("n2", "m43", "codegree", "trace", "brute")


def count(g: Graph, algo: str = "m43") -> int:
    """Number of 4-cycles using the named backend (one of ``ALGOS``)."""
    if algo == "n2":
        return list_n2(g)
    if algo == "m43":
        return list_m43(g)
    if algo == "codegree":
        return count_codegree(g)
    if algo == "trace":
        from .diagnostics import trace_count

        return trace_count(g)
    if algo == "brute":
        from .oracle import brute_force_list

        return len(brute_force_list(g))
    raise ValueError(f"unknown algorithm {algo!r}; expected one of {', '.join(ALGOS)}")


def work_bound(n: int, m: int, t: int) -> float:
    """``100 (m^(4/3) + t) log2(n)^2``, the ceiling on useful 2-paths for ``list_m43``."""
    lg = math.log2(max(n, 2))
    return 100.0 * (m ** (4.0 / 3.0) + t) * lg * lg
