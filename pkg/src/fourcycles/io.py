"""Edge-list and cycle-list text formats.

Edge list: one ``u v`` pair per line, whitespace separated; ``#`` starts a
comment line; blank lines are skipped. A comment of the form ``# n=<int>``
(written by :func:`write_edge_list`) fixes the vertex count so isolated
trailing vertices survive a round trip.

Cycle list: one canonical cycle ``a b c d`` per line.
"""

from __future__ import annotations

import re
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Iterable, Iterator, List, Optional, Tuple, Union

from .graph import Graph, GraphError, SelfLoopError, build_graph
from .listing import CanonicalCycle

PathLike = Union[str, Path]
_N_HEADER = re.compile(r"^#\s*n\s*=\s*(\d+)")


class EdgeListError(GraphError):
    pass


@contextmanager
def _open(path: Optional[PathLike], mode: str) -> Iterator[IO[str]]:
    if path is None or str(path) == "-":
        yield sys.stdin if "r" in mode else sys.stdout
        return
    try:
        fh = open(path, mode, encoding="utf-8")
    except OSError as exc:
        raise EdgeListError(f"cannot open {path}: {exc.strerror}") from exc
    with fh:
        yield fh


def parse_edge_list(lines: Iterable[str], source: str = "<input>") -> Tuple[List[Tuple[int, int]], Optional[int]]:
    edges = []
    n_hint = None
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text:
            continue
        if text.startswith("#"):
            mt = _N_HEADER.match(text)
            if mt:
                n_hint = int(mt.group(1))
            continue
        parts = text.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise EdgeListError(f"{source}:{lineno}: expected two non-negative integers, got {text!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise SelfLoopError(u, f"{source}:{lineno}")
        edges.append((u, v))
    return edges, n_hint


def read_edge_list(path: Optional[PathLike]) -> Graph:
    """Parse an edge-list file (``-`` or ``None`` for stdin) into a Graph."""
    with _open(path, "r") as fh:
        edges, n_hint = parse_edge_list(fh, str(path or "<stdin>"))
    return build_graph(edges, n_hint=n_hint)


def write_edge_list(g: Graph, path: Optional[PathLike]) -> None:
    with _open(path, "w") as fh:
        fh.write(f"# n={g.n} m={g.m}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def format_cycle(cyc: CanonicalCycle) -> str:
    return f"{cyc.a} {cyc.b} {cyc.c} {cyc.d}"


def write_cycles(cycles: Iterable[CanonicalCycle], fh: IO[str]) -> int:
    k = 0
    for cyc in cycles:
        fh.write(format_cycle(cyc) + "\n")
        k += 1
    return k


def read_cycles(path: PathLike) -> List[CanonicalCycle]:
    out = []
    with _open(path, "r") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if len(parts) != 4:
                raise EdgeListError(f"{path}:{lineno}: expected four vertices, got {text!r}")
            out.append(CanonicalCycle(*map(int, parts)))
    return out
