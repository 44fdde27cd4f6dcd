import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fourcycles import (
    PathClass,
    TwoPath,
    brute_force_two_paths,
    build_graph,
    degree_partition,
    enum_hhh_paths,
    enum_lcenter_paths,
    enum_oriented_lhh_paths,
    gen_complete,
    gen_complete_bipartite,
    gen_lhh_adversary,
    gen_star,
    two_path_census,
)
from fourcycles.generators import lhh_adversary_sizes

from _corpus import er_corpus, full_corpus

ENUMS = {
    PathClass.HHH: enum_hhh_paths,
    PathClass.L_CENTER: enum_lcenter_paths,
    PathClass.ORIENTED_LHH: enum_oriented_lhh_paths,
}


def collect(enum, g):
    out = []
    count = enum(g, degree_partition(g), out.append)
    assert count == len(out)
    return out


def check_path(g, p, path: TwoPath):
    lo, hi, c, tag = path
    assert lo < hi and c not in (lo, hi)
    assert g.has_edge(lo, c) and g.has_edge(c, hi)
    H = p.is_high
    if tag is PathClass.HHH:
        assert H[lo] and H[hi] and H[c]
    elif tag is PathClass.L_CENTER:
        assert not H[c]
    else:
        assert H[c] and H[lo] != H[hi]
        low, far = (lo, hi) if not H[lo] else (hi, lo)
        assert p.oriented(low, c) and p.oriented(c, far)


def test_hhh_examples(c4, k4):
    assert enum_hhh_paths(k4, degree_partition(k4)) == 12
    assert enum_hhh_paths(c4, degree_partition(c4)) == 4
    g = gen_star(9)
    assert enum_hhh_paths(g, degree_partition(g)) == 0


def test_lcenter_examples():
    g = gen_star(9)
    assert enum_lcenter_paths(g, degree_partition(g)) == 0
    # path 0-1-2 has m=2 and deg(1)**3 = 8 > 2, so its only 2-path has a high center
    path = build_graph([(0, 1), (1, 2)])
    assert degree_partition(path).high_vertices == (1,)
    assert collect(enum_lcenter_paths, path) == []
    # four disjoint paths: m=8 and 2**3 = 8 is not > 8, so every middle vertex is low
    g = build_graph([(3 * i + a, 3 * i + a + 1) for i in range(4) for a in (0, 1)])
    assert degree_partition(g).high_vertices == ()
    assert collect(enum_lcenter_paths, g) == [
        TwoPath(3 * i, 3 * i + 2, 3 * i + 1, PathClass.L_CENTER) for i in range(4)
    ]


def test_k23_has_no_low_center(k23):
    p = degree_partition(k23)
    # degrees 3,3,2,2,2 against m=6: 27>6 and 8>6, everything is high
    assert p.high_vertices == (0, 1, 2, 3, 4)
    assert enum_lcenter_paths(k23, p) == 0
    assert two_path_census(k23, p).lcenter == 0


def test_oriented_examples(c4):
    g = gen_star(7)
    assert enum_oriented_lhh_paths(g, degree_partition(g)) == 0
    assert enum_oriented_lhh_paths(c4, degree_partition(c4)) == 0


def test_oriented_adversary_against_oracle():
    g = gen_lhh_adversary(64, "1/10")
    h, leaves = lhh_adversary_sizes(64, "1/10")
    paths = collect(enum_oriented_lhh_paths, g)
    assert set(paths) == brute_force_two_paths(g, PathClass.ORIENTED_LHH, limit=g.n)
    assert len(paths) == h * leaves
    # every oriented path ends at the hub: leaf -> mid -> hub
    assert all(p.endpoint_lo == 0 for p in paths)


def test_oriented_emission_order():
    g = gen_lhh_adversary(64, "1/10")
    p = degree_partition(g)
    out = []
    enum_oriented_lhh_paths(g, p, out.append)
    low_ends = [x.endpoint_hi for x in out]
    assert low_ends == sorted(low_ends)


def test_census_star():
    n = 30
    c = two_path_census(gen_star(n), degree_partition(gen_star(n)))
    assert c.total == (n - 1) * (n - 2) // 2
    assert c.counts["H:LL"] == c.total
    assert c.oriented_lhh == 0


def test_census_k4_and_empty(k4):
    c = two_path_census(k4, degree_partition(k4))
    assert c.total == 12 and c.counts["H:HH"] == 12
    e = build_graph([], n_hint=5)
    c = two_path_census(e, degree_partition(e))
    assert c.total == 0 and c.oriented_lhh == 0 and not any(c.counts.values())


def test_completeness_and_disjointness_on_corpus():
    for g in full_corpus():
        p = degree_partition(g)
        streams = {}
        for tag, enum in ENUMS.items():
            got = collect(enum, g)
            assert len(got) == len(set(got))
            for path in got:
                check_path(g, p, path)
            streams[tag] = {(x.endpoint_lo, x.endpoint_hi, x.center) for x in got}
            assert set(got) == brute_force_two_paths(g, tag)
        a, b, c = streams.values()
        assert not (a & b) and not (a & c) and not (b & c)


def test_census_consistency_on_corpus():
    for g in full_corpus():
        p = degree_partition(g)
        c = two_path_census(g, p)
        assert sum(c.counts.values()) == c.total == sum(d * (d - 1) // 2 for d in map(len, g.adj))
        assert c.oriented_lhh == enum_oriented_lhh_paths(g, p)
        assert c.oriented_lhh <= c.unoriented_lhh
        assert c.hhh == enum_hhh_paths(g, p)
        assert c.lcenter == enum_lcenter_paths(g, p)
        # unoriented L-H-H census against the oracle's definition
        H = p.is_high
        unoriented = 0
        for ctr in range(g.n):
            for lo in range(g.n):
                for hi in range(lo + 1, g.n):
                    if g.has_edge(lo, ctr) and g.has_edge(ctr, hi) and H[ctr] and H[lo] != H[hi]:
                        unoriented += 1
        assert c.unoriented_lhh == unoriented


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 24), st.floats(0.05, 0.9), st.integers(0, 10**6))
def test_enumerators_match_oracle_random(n, frac, seed):
    from fourcycles import gen_erdos_renyi

    g = gen_erdos_renyi(n, round(frac * n * (n - 1) / 2), seed)
    for tag, enum in ENUMS.items():
        assert set(collect(enum, g)) == brute_force_two_paths(g, tag)
