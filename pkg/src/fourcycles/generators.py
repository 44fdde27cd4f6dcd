"""Graph families with known 4-cycle structure.

Vertex numbering is fixed per family so that edge lists are reproducible:

* star: center 0, leaves ``1..n-1``
* lhh_adversary: hub 0, hub leaves ``1..n``, mid nodes ``n+1..n+h``, then
  the ``l`` private leaves of each mid node in mid-node order
* complete_bipartite: side A ``0..a-1``, side B ``a..a+b-1``
* grid: cell ``(i, j)`` is vertex ``i*c + j``
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Tuple, Union

import numpy as np

from .graph import Graph, build_graph


def gen_star(n: int) -> Graph:
    if n < 1:
        raise ValueError("star needs n >= 1")
    return build_graph(((0, v) for v in range(1, n)), n_hint=n)


def floor_power(n: int, exponent: Fraction) -> int:
    """``floor(n ** exponent)`` computed exactly for a non-negative rational exponent."""
    exponent = Fraction(exponent)
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    p, q = exponent.numerator, exponent.denominator
    target = n ** p
    k = int(round(float(n) ** float(exponent)))
    while k > 0 and k ** q > target:
        k -= 1
    while (k + 1) ** q <= target:
        k += 1
    return k


def lhh_adversary_sizes(n: int, eps: Union[Fraction, str, float] = Fraction(1, 10)) -> Tuple[int, int]:
    """``(h, l)``: number of mid nodes and leaves per mid node."""
    eps = Fraction(eps).limit_denominator(10**6) if isinstance(eps, float) else Fraction(eps)
    if not 0 < eps < Fraction(1, 3):
        raise ValueError(f"eps must lie in (0, 1/3), got {eps}")
    h = floor_power(n, Fraction(2, 3) - eps)
    leaves = floor_power(n, Fraction(1, 3) + eps)
    if h < 1 or leaves < 1:
        raise ValueError(f"n={n} too small for eps={eps}: h={h}, l={leaves}")
    return h, leaves


def gen_lhh_adversary(n: int, eps: Union[Fraction, str, float] = Fraction(1, 10)) -> Graph:
    """Hub with ``n`` leaves and ``h = floor(n^(2/3-eps))`` mid nodes, each owning
    ``l = floor(n^(1/3+eps))`` leaves. Has no 4-cycles but about ``n*h`` L-H-H paths."""
    h, leaves = lhh_adversary_sizes(n, eps)
    edges = [(0, v) for v in range(1, n + 1)]
    first_leaf = n + h + 1
    for i in range(h):
        mid = n + 1 + i
        edges.append((0, mid))
        base = first_leaf + i * leaves
        edges.extend((mid, base + j) for j in range(leaves))
    return build_graph(edges)


def gen_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("sides must be positive")
    return build_graph(((i, a + j) for i in range(a) for j in range(b)))


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be positive")
    return build_graph(((i, j) for i in range(n) for j in range(i + 1, n)), n_hint=n)


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs n >= 3")
    return build_graph(((i, (i + 1) % n) for i in range(n)))


def gen_grid(r: int, c: int) -> Graph:
    if r < 1 or c < 1:
        raise ValueError("grid sides must be positive")
    edges = []
    for i in range(r):
        for j in range(c):
            v = i * c + j
            if j + 1 < c:
                edges.append((v, v + 1))
            if i + 1 < r:
                edges.append((v, v + c))
    return build_graph(edges, n_hint=r * c)


_DENSE_PAIRS = 1 << 22


def gen_erdos_renyi(n: int, m_target: int, seed: int = 0) -> Graph:
    """``m_target`` distinct edges drawn uniformly from all vertex pairs."""
    total = n * (n - 1) // 2
    if not 0 <= m_target <= total:
        raise ValueError(f"cannot place {m_target} edges on {n} vertices (max {total})")
    rng = np.random.default_rng(seed)
    if total <= _DENSE_PAIRS:
        rows, cols = np.triu_indices(n, 1)
        pick = rng.choice(total, size=m_target, replace=False)
        us, vs = rows[pick], cols[pick]
    else:
        # sparse regime: rejection sampling, first occurrence of each pair wins
        keys = np.zeros(0, dtype=np.int64)
        while len(keys) < m_target:
            need = m_target - len(keys)
            u = rng.integers(0, n, size=need + need // 8 + 16, dtype=np.int64)
            v = rng.integers(0, n, size=len(u), dtype=np.int64)
            ok = u != v
            lo = np.minimum(u[ok], v[ok])
            hi = np.maximum(u[ok], v[ok])
            keys = np.concatenate([keys, lo * n + hi])
            _, first = np.unique(keys, return_index=True)
            keys = keys[np.sort(first)]
        keys = keys[:m_target]
        us, vs = keys // n, keys % n
    return build_graph(zip(us.tolist(), vs.tolist()), n_hint=n)


FAMILIES: Dict[str, Callable[..., Graph]] = {
    "star": gen_star,
    "lhh_adversary": gen_lhh_adversary,
    "complete_bipartite": gen_complete_bipartite,
    "complete": gen_complete,
    "cycle": gen_cycle,
    "grid": gen_grid,
    "erdos_renyi": gen_erdos_renyi,
}


def generate(family: str, **params) -> Graph:
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}") from None
    return fn(**params)
