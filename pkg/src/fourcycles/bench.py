"""Timing harness: one JSON record per (instance, algorithm, repeat) plus log-log slope fits."""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np

from .generators import generate
from .graph import Graph
from .listing import ListingStats, count_codegree, list_m43, list_n2


@dataclass
class BenchRecord:
    family: str
    parameters: dict
    n: int
    m: int
    algo: str
    t: int
    wall_time: float
    useful_2path_count: Optional[int]
    raw_candidates: Optional[int]
    dedup_hits: Optional[int]
    seed: Optional[int]
    repeat: int = 0

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def size_params(family: str, size: int, seed: int) -> dict:
    """Generator parameters for a scalar ``size``; ``erdos_renyi`` uses ``n = m = size``."""
    if family == "erdos_renyi":
        return {"n": size, "m_target": size, "seed": seed}
    if family == "grid":
        side = max(1, math.isqrt(size))
        return {"r": side, "c": side}
    if family == "complete_bipartite":
        return {"a": size, "b": size}
    return {"n": size}


def _run(algo: str, g: Graph):
    st = ListingStats()
    if algo == "n2":
        t = list_n2(g, None, st)
    elif algo == "m43":
        t = list_m43(g, None, st)
    elif algo == "codegree":
        return count_codegree(g), None
    elif algo == "trace":
        from .diagnostics import trace_count

        return trace_count(g), None
    else:
        raise ValueError(f"unknown bench algorithm {algo!r}")
    return t, st


def run_bench(
    family: str,
    sizes: Sequence[int],
    algos: Sequence[str],
    repeats: int = 3,
    seed: int = 0,
    emit: Optional[Callable[[BenchRecord], None]] = None,
    clock: Callable[[], float] = time.perf_counter,
) -> List[BenchRecord]:
    records = []
    for size in sizes:
        params = size_params(family, size, seed)
        g = generate(family, **params)
        for algo in algos:
            for rep in range(repeats):
                start = clock()
                t, st = _run(algo, g)
                elapsed = max(clock() - start, 1e-9)
                rec = BenchRecord(
                    family=family,
                    parameters=params,
                    n=g.n,
                    m=g.m,
                    algo=algo,
                    t=t,
                    wall_time=elapsed,
                    useful_2path_count=st.useful_2paths if st else None,
                    raw_candidates=st.raw_candidates if st else None,
                    dedup_hits=st.dedup_hits if st else None,
                    seed=params.get("seed"),
                    repeat=rep,
                )
                records.append(rec)
                if emit is not None:
                    emit(rec)
    return records


def fit_slope(xs: Iterable[float], ys: Iterable[float]) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    lx = np.log(np.asarray(list(xs), dtype=float))
    ly = np.log(np.asarray(list(ys), dtype=float))
    if len(lx) < 2:
        raise ValueError("need at least two sizes to fit a slope")
    return float(np.polyfit(lx, ly, 1)[0])


def slopes(records: Iterable[BenchRecord], x: str = "m") -> Dict[str, float]:
    """Per-algorithm slope of median wall time against ``n`` or ``m``."""
    by_algo: Dict[str, Dict[int, List[float]]] = {}
    for r in records:
        by_algo.setdefault(r.algo, {}).setdefault(getattr(r, x), []).append(r.wall_time)
    out = {}
    for algo, pts in by_algo.items():
        if len(pts) < 2:
            continue
        keys = sorted(pts)
        out[algo] = fit_slope(keys, [float(np.median(pts[k])) for k in keys])
    return out
