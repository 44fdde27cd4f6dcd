"""Command-line front end: ``fourcycles {gen,list,count,detect,stats,verify,bench}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from . import bench as bench_mod
from .diagnostics import census_report, find_regular_partition, trace_count
from .generators import FAMILIES, generate
from .graph import GraphError, degree_partition
from .io import _open, format_cycle, read_edge_list, write_edge_list
from .listing import CanonicalCycle, count, count_codegree, list_m43, list_n2, detect
from .oracle import ORACLE_LIMIT_ENV, brute_force_list, default_oracle_limit


def _param(text: str):
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected KEY=VALUE, got {text!r}")
    if key == "eps":
        return key, Fraction(value)
    try:
        return key, int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"parameter {key} needs an integer, got {value!r}") from None


def _int_list(text: str) -> List[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if "^" in part:
            base, exp = part.split("^")
            out.append(int(base) ** int(exp))
        else:
            out.append(int(part))
    return out


def cmd_gen(args) -> int:
    params = dict(args.param)
    if args.seed is not None and args.family == "erdos_renyi":
        params.setdefault("seed", args.seed)
    g = generate(args.family, **params)
    write_edge_list(g, args.output)
    return 0


def _collect(g, algo: str) -> List[CanonicalCycle]:
    if algo == "brute":
        return list(brute_force_list(g))
    out: List[CanonicalCycle] = []
    (list_n2 if algo == "n2" else list_m43)(g, out.append)
    return out


def cmd_list(args) -> int:
    g = read_edge_list(args.input)
    with _open(args.output, "w") as fh:
        if args.sort or args.algo == "brute":
            cycles = _collect(g, args.algo)
            if args.sort:
                cycles.sort()
            for cyc in cycles:
                fh.write(format_cycle(cyc) + "\n")
        else:
            lister = list_n2 if args.algo == "n2" else list_m43
            lister(g, lambda cyc: fh.write(format_cycle(cyc) + "\n"))
    return 0


def cmd_count(args) -> int:
    g = read_edge_list(args.input)
    print(count(g, args.algo))
    return 0


def cmd_detect(args) -> int:
    g = read_edge_list(args.input)
    found = detect(g)
    print("found" if found else "none")
    return 0 if found else 1


def cmd_stats(args) -> int:
    g = read_edge_list(args.input)
    p = degree_partition(g)
    report = census_report(g, p).to_dict()
    part = find_regular_partition(g, p, retries=args.retries, rng_seed=args.seed)
    report["regular_partition"] = {
        "a_size": len(part.a_side),
        "b_size": len(part.b_side),
        "bucket": part.bucket,
        "d_l": part.d_l,
        "d_b": part.d_b,
        "achieved_paths": part.achieved_paths,
        "target": part.target,
        "meets_target": part.meets_target,
        "structural_ok": not part.structural_violations(g, p),
    }
    with _open(args.output, "w") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return 0


def cmd_verify(args) -> int:
    g = read_edge_list(args.input)
    limit = args.oracle_limit if args.oracle_limit is not None else default_oracle_limit()
    sets = {"n2": set(_collect(g, "n2")), "m43": set(_collect(g, "m43"))}
    if g.n <= limit:
        sets["brute"] = brute_force_list(g, limit)
    else:
        print(f"SKIP brute: n={g.n} exceeds oracle limit {limit}")
    counts = {"codegree": count_codegree(g), "trace": trace_count(g)}
    ok = True
    ref_name, ref = next(iter(sets.items()))
    for name, s in sets.items():
        if name == ref_name:
            continue
        good = s == ref
        ok &= good
        print(f"{'PASS' if good else 'FAIL'} set {name} == {ref_name} ({len(s)} vs {len(ref)})")
    for name, c in counts.items():
        good = c == len(ref)
        ok &= good
        print(f"{'PASS' if good else 'FAIL'} count {name} == |{ref_name}| ({c} vs {len(ref)})")
    print(f"t = {len(ref)}")
    return 0 if ok else 1


def cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algo.split(",")]
    with _open(args.output, "w") as fh:
        def emit(rec):
            fh.write(rec.to_json() + "\n")
            fh.flush()

        records = bench_mod.run_bench(args.family, args.sizes, algos, args.repeats, args.seed or 0, emit)
        fits = {
            "slope_vs_m": bench_mod.slopes(records, "m"),
            "slope_vs_n": bench_mod.slopes(records, "n"),
        }
        fh.write(json.dumps({"fit": fits}, sort_keys=True) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fourcycles", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def io_flags(p, need_input=True):
        if need_input:
            p.add_argument("-i", "--input", required=True, help="edge-list file, '-' for stdin")
        p.add_argument("-o", "--output", default="-", help="output file, '-' for stdout")

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("-p", "--param", type=_param, action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--seed", type=int)
    io_flags(p, need_input=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("list", help="print every 4-cycle as 'a b c d'")
    io_flags(p)
    p.add_argument("--algo", choices=("n2", "m43", "brute"), default="m43")
    p.add_argument("--sort", action="store_true", help="sort cycles lexicographically")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("count", help="print the number of 4-cycles")
    io_flags(p)
    p.add_argument("--algo", choices=("n2", "m43", "codegree", "trace", "brute"), default="m43")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("detect", help="exit 0 and print 'found' if a 4-cycle exists, else exit 1")
    io_flags(p)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("stats", help="census, walk counts and partition diagnostics as JSON")
    io_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=32)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="cross-check every backend on one graph")
    io_flags(p)
    p.add_argument("--oracle-limit", type=int, default=None,
                   help=f"max n for brute force (default ${ORACLE_LIMIT_ENV} or 64)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time algorithms over a size sweep, JSON lines out")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--sizes", type=_int_list, required=True, help="comma list, e.g. 2^14,2^15")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algo", default="m43", help="comma list of n2,m43,codegree,trace")
    io_flags(p, need_input=False)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, TypeError) as exc:
        print(f"fourcycles: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
