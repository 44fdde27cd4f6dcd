"""Enumerators for the three classes of 2-paths needed to rebuild every 4-cycle.

The private ``iter_*`` generators yield bare ``(lo, hi, center)`` tuples for the
listing hot loop; the public ``enum_*`` functions wrap them as :class:`TwoPath`
and push each one to a caller-supplied sink.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, Tuple

from .graph import DegreePartition, Graph


class PathClass(str, enum.Enum):
    HHH = "HHH"
    L_CENTER = "L_CENTER"
    ORIENTED_LHH = "ORIENTED_LHH"


class TwoPath(NamedTuple):
    endpoint_lo: int
    endpoint_hi: int
    center: int
    class_tag: PathClass


Sink = Callable[[TwoPath], None]
RawPath = Tuple[int, int, int]


def iter_hhh(g: Graph, p: DegreePartition) -> Iterator[RawPath]:
    is_high = p.is_high
    adj = g.adj
    for c in p.high_vertices:
        hn = [w for w in adj[c] if is_high[w]]
        for u, v in combinations(hn, 2):
            yield u, v, c


def iter_lcenter(g: Graph, p: DegreePartition) -> Iterator[RawPath]:
    is_high = p.is_high
    for c, nbrs in enumerate(g.adj):
        if is_high[c] or len(nbrs) < 2:
            continue
        for u, v in combinations(nbrs, 2):
            yield u, v, c


def high_out_lists(g: Graph, p: DegreePartition) -> Dict[int, List[int]]:
    """For every high vertex, its high out-neighbors under the degree orientation, by id."""
    is_high = p.is_high
    deg = p.degrees
    out = {}
    for v in p.high_vertices:
        dv = deg[v]
        out[v] = [w for w in g.adj[v] if is_high[w] and (deg[w] > dv or (deg[w] == dv and w > v))]
    return out


def iter_oriented_lhh(
    g: Graph, p: DegreePartition, out_h: Optional[Dict[int, List[int]]] = None
) -> Iterator[RawPath]:
    if not p.high_vertices:
        return
    if out_h is None:
        out_h = high_out_lists(g, p)
    is_high = p.is_high
    deg = p.degrees
    for u, nbrs in enumerate(g.adj):
        if is_high[u]:
            continue
        du = deg[u]
        for v in nbrs:
            if not is_high[v]:
                continue
            # a low vertex never outranks a high one, but keep the rule explicit
            if deg[v] < du or (deg[v] == du and v < u):
                continue
            for w in out_h[v]:
                if u < w:
                    yield u, w, v
                else:
                    yield w, u, v


def _drain(it: Iterator[RawPath], tag: PathClass, sink: Optional[Sink]) -> int:
    count = 0
    if sink is None:
        for _ in it:
            count += 1
        return count
    for lo, hi, c in it:
        sink(TwoPath(lo, hi, c, tag))
        count += 1
    return count


def enum_hhh_paths(g: Graph, p: DegreePartition, sink: Optional[Sink] = None) -> int:
    """Emit every 2-path whose three vertices are all high; returns how many."""
    return _drain(iter_hhh(g, p), PathClass.HHH, sink)


def enum_lcenter_paths(g: Graph, p: DegreePartition, sink: Optional[Sink] = None) -> int:
    """Emit every 2-path whose center is low; returns how many."""
    return _drain(iter_lcenter(g, p), PathClass.L_CENTER, sink)


def enum_oriented_lhh_paths(g: Graph, p: DegreePartition, sink: Optional[Sink] = None) -> int:
    """Emit every directed path ``u -> v -> w`` with ``u`` low and ``v``, ``w`` high.

    The return value is the number of such paths (usually called ``P``).
    """
    return _drain(iter_oriented_lhh(g, p), PathClass.ORIENTED_LHH, sink)


CENSUS_KEYS = ("L:LL", "L:LH", "L:HH", "H:LL", "H:LH", "H:HH")


@dataclass
class PathCensus:
    """2-path counts by ``center:endpoints`` class pattern, e.g. ``"H:LH"``."""

    counts: Dict[str, int] = field(default_factory=lambda: dict.fromkeys(CENSUS_KEYS, 0))
    oriented_lhh: int = 0
    total: int = 0

    @property
    def unoriented_lhh(self) -> int:
        return self.counts["H:LH"]

    @property
    def hhh(self) -> int:
        return self.counts["H:HH"]

    @property
    def lcenter(self) -> int:
        return self.counts["L:LL"] + self.counts["L:LH"] + self.counts["L:HH"]


def two_path_census(g: Graph, p: DegreePartition) -> PathCensus:
    """Count 2-paths per class without materializing any of them."""
    is_high = p.is_high
    deg = p.degrees
    census = PathCensus()
    counts = census.counts
    oriented = 0
    total = 0
    for c, nbrs in enumerate(g.adj):
        d = len(nbrs)
        if d < 2:
            continue
        nh = 0
        for w in nbrs:
            if is_high[w]:
                nh += 1
        nl = d - nh
        side = "H" if is_high[c] else "L"
        counts[side + ":LL"] += nl * (nl - 1) // 2
        counts[side + ":LH"] += nl * nh
        counts[side + ":HH"] += nh * (nh - 1) // 2
        total += d * (d - 1) // 2
        if is_high[c] and nl:
            dc = deg[c]
            n_out = 0
            for w in nbrs:
                if is_high[w] and (deg[w] > dc or (deg[w] == dc and w > c)):
                    n_out += 1
            oriented += nl * n_out
    census.oriented_lhh = oriented
    census.total = total
    return census
