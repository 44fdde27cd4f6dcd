"""Executable checks of the counting machinery behind the fast lister.

* closed 4-walks (the trace of A^4) counted from 2-walks, and the exact walk
  decomposition that turns them into a 4-cycle count;
* the average-degree floor ``tr(A^4) >= d^4``;
* the implication "many oriented L->H->H paths force many 4-cycles";
* a constructive, seeded search for the regular A/B view of the high vertices.

All identities use exact integer or rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

import numpy as np

from .graph import DegreePartition, Graph, degree_partition
from .two_paths import enum_oriented_lhh_paths, high_out_lists, two_path_census

# rows of A^2 materialized at once are capped at about this many nonzeros
_CHUNK_WORK = 1 << 22


class WalkAccountingError(ArithmeticError):
    """The closed-walk decomposition did not divide exactly; a counting bug."""


def log2n(n: int) -> float:
    return math.log2(max(n, 2))


def closed_4_walks(g: Graph) -> int:
    """``tr(A^4)``: the sum over ordered pairs ``(u, v)`` of (number of 2-walks u->v)^2.

    Rows of ``A @ A`` are formed in chunks so memory stays bounded on
    star-like graphs with quadratically many 2-walks.
    """
    if g.m == 0:
        return 0
    a = g.to_scipy()
    deg = np.diff(g.indptr)
    row_work = a @ deg
    total = 0
    r0 = 0
    n = g.n
    while r0 < n:
        acc = 0
        r1 = r0
        while r1 < n and (r1 == r0 or acc + row_work[r1] <= _CHUNK_WORK):
            acc += int(row_work[r1])
            r1 += 1
        block = a[r0:r1] @ a
        data = block.data.astype(np.int64)
        total += int(np.dot(data, data))
        r0 = r1
    return total


def _degree_terms(g: Graph) -> int:
    deg = np.diff(g.indptr).astype(np.int64)
    return int(np.sum(deg * (deg - 1)))


def trace_count(g: Graph) -> int:
    """``t`` recovered from closed 4-walks.

    A closed 4-walk either traverses one edge back and forth twice
    (``2m`` walks), two distinct edges at a common vertex
    (``2 sum deg(deg-1)``), or a 4-cycle (8 walks each).
    """
    w = closed_4_walks(g)
    rest = w - 2 * g.m - 2 * _degree_terms(g)
    if rest < 0 or rest % 8:
        raise WalkAccountingError(f"closed 4-walks {w} do not decompose: remainder {rest} mod 8")
    return rest // 8


def spectral_floor_check(g: Graph, walks: Optional[int] = None) -> bool:
    """``tr(A^4) >= d^4`` with ``d = 2m/n``, compared as ``W n^4 >= 16 m^4``."""
    if g.n < 1:
        raise ValueError("spectral floor needs at least one vertex")
    w = closed_4_walks(g) if walks is None else walks
    return w * g.n ** 4 >= 16 * g.m ** 4


@dataclass
class LHHTheoremCheck:
    n: int
    m: int
    P: int
    t: int
    threshold: float
    implied_floor: float
    condition_active: bool
    holds: bool


def check_lhh_theorem(
    g: Graph, p: Optional[DegreePartition] = None, t: Optional[int] = None
) -> LHHTheoremCheck:
    """Evaluate: if ``P > 100 m^(4/3) log^2 n`` then ``t >= P / (100 log^2 n)``.

    ``log`` is ``log2(max(n, 2))``. ``holds`` is true when the premise is
    false.
    """
    if p is None:
        p = degree_partition(g)
    big_p = enum_oriented_lhh_paths(g, p)
    if t is None:
        t = trace_count(g)
    lg2 = log2n(g.n) ** 2
    threshold = 100.0 * g.m ** (4.0 / 3.0) * lg2
    active = big_p > threshold
    return LHHTheoremCheck(
        n=g.n,
        m=g.m,
        P=big_p,
        t=t,
        threshold=threshold,
        implied_floor=big_p / (100.0 * lg2),
        condition_active=active,
        holds=(not active) or t * 100.0 * lg2 >= big_p,
    )


@dataclass
class RegularPartition:
    """A/B split of the high vertices with factor-2 regular A side.

    ``deg_l[a]`` counts low in-neighbors of ``a``; ``deg_b[a]`` counts
    oriented edges from ``a`` into ``B``.
    """

    a_side: Tuple[int, ...] = ()
    b_side: Tuple[int, ...] = ()
    bucket: Optional[Tuple[int, int]] = None
    d_l: int = 0
    d_b: int = 0
    achieved_paths: int = 0
    target: float = 0.0
    P: int = 0
    attempts: int = 0
    deg_l: Dict[int, int] = field(default_factory=dict, repr=False)
    deg_b: Dict[int, int] = field(default_factory=dict, repr=False)

    @property
    def meets_target(self) -> bool:
        return self.achieved_paths >= self.target

    def structural_violations(self, g: Graph, p: DegreePartition) -> list:
        """Empty when every structural invariant holds, else one message per failure."""
        bad = []
        a_set = set(self.a_side)
        b_set = set(self.b_side)
        if a_set & b_set:
            bad.append("A and B overlap")
        if any(not p.is_high[v] for v in a_set | b_set):
            bad.append("A or B contains a low vertex")
        achieved = 0
        for a in self.a_side:
            dl = sum(1 for u in g.adj[a] if not p.is_high[u] and p.oriented(u, a))
            db = sum(1 for w in g.adj[a] if w in b_set and p.oriented(a, w))
            if dl != self.deg_l.get(a) or db != self.deg_b.get(a):
                bad.append(f"recorded degrees of {a} are stale")
            if not (self.d_l <= dl < 2 * self.d_l and self.d_b <= db < 2 * self.d_b):
                bad.append(f"vertex {a} breaks the factor-2 regularity")
            achieved += dl * db
        for b in self.b_side:
            if not any(u in a_set and p.oriented(u, b) for u in g.adj[b]):
                bad.append(f"B vertex {b} has no in-edge from A")
        if achieved != self.achieved_paths:
            bad.append("achieved_paths does not match the recount")
        return bad


def find_regular_partition(
    g: Graph,
    p: Optional[DegreePartition] = None,
    retries: int = 32,
    rng_seed: Optional[int] = 0,
) -> RegularPartition:
    """Search for a regular A/B view of the high vertices.

    Each attempt puts every high vertex in A with probability 1/2, buckets A
    by ``(floor(log2 deg_L), floor(log2 deg_B))``, keeps the heaviest bucket
    and drops B vertices it does not point into. The attempt carrying the
    most L->A->B paths wins.
    """
    if p is None:
        p = degree_partition(g)
    big_p = enum_oriented_lhh_paths(g, p)
    target = big_p / (4.0 * log2n(g.n) ** 2)
    best = RegularPartition(target=target, P=big_p)
    if big_p == 0:
        return best

    is_high = p.is_high
    out_h = high_out_lists(g, p)
    high = p.high_vertices
    deg_l_all = {v: sum(1 for u in g.adj[v] if not is_high[u]) for v in high}
    rng = np.random.default_rng(rng_seed)
    for attempt in range(retries):
        in_a = rng.random(len(high)) < 0.5
        side_a = {v for v, flag in zip(high, in_a) if flag}
        buckets = {}
        for a in side_a:
            dl = deg_l_all[a]
            if not dl:
                continue
            db = sum(1 for w in out_h[a] if w not in side_a)
            if not db:
                continue
            key = (dl.bit_length() - 1, db.bit_length() - 1)
            entry = buckets.setdefault(key, [0, []])
            entry[0] += dl * db
            entry[1].append((a, dl, db))
        if not buckets:
            continue
        key, (weight, members) = max(buckets.items(), key=lambda kv: (kv[1][0], kv[0]))
        if weight <= best.achieved_paths:
            continue
        a_side = tuple(sorted(a for a, _, _ in members))
        b_side = sorted({w for a in a_side for w in out_h[a] if w not in side_a})
        best = RegularPartition(
            a_side=a_side,
            b_side=tuple(b_side),
            bucket=key,
            d_l=min(dl for _, dl, _ in members),
            d_b=min(db for _, _, db in members),
            achieved_paths=weight,
            target=target,
            P=big_p,
            deg_l={a: dl for a, dl, _ in members},
            deg_b={a: db for a, _, db in members},
        )
    best.attempts = retries
    return best


@dataclass
class CensusReport:
    n: int
    m: int
    t: int
    class_counts: Dict[str, int]
    P: int
    total_2paths: int
    unoriented_lhh: int
    closed_4_walks: int
    avg_degree: Fraction
    spectral_floor: bool
    walk_identity_exact: bool
    two_path_charging_bound: float
    lhh_theorem: LHHTheoremCheck
    high_count: int

    def to_dict(self) -> dict:
        out = asdict(self)
        out["avg_degree"] = str(self.avg_degree)
        return out


def census_report(g: Graph, p: Optional[DegreePartition] = None) -> CensusReport:
    """Every counting statistic for ``g`` in one report."""
    if p is None:
        p = degree_partition(g)
    census = two_path_census(g, p)
    w = closed_4_walks(g)
    rest = w - 2 * g.m - 2 * _degree_terms(g)
    exact = rest >= 0 and rest % 8 == 0
    t = rest // 8 if exact else trace_count(g)
    return CensusReport(
        n=g.n,
        m=g.m,
        t=t,
        class_counts=dict(census.counts),
        P=census.oriented_lhh,
        total_2paths=census.total,
        unoriented_lhh=census.unoriented_lhh,
        closed_4_walks=w,
        avg_degree=Fraction(2 * g.m, g.n) if g.n else Fraction(0),
        spectral_floor=spectral_floor_check(g, w) if g.n else True,
        walk_identity_exact=exact,
        two_path_charging_bound=10.0 * g.n ** 2 + 10.0 * t / math.comb(10, 2),
        lhh_theorem=check_lhh_theorem(g, p, t),
        high_count=len(p.high_vertices),
    )
