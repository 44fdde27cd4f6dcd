import numpy as np
import pytest

from fourcycles import (
    OracleLimitError,
    PathClass,
    brute_force_list,
    brute_force_two_paths,
    count_codegree,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_lhh_adversary,
    gen_star,
    degree_partition,
    enum_oriented_lhh_paths,
)
from fourcycles.oracle import ORACLE_LIMIT_ENV, default_oracle_limit

from _corpus import er_corpus, petersen


def test_c4(c4):
    assert brute_force_list(c4) == {(0, 1, 2, 3)}


def test_petersen_has_girth_five():
    g = petersen()
    assert g.m == 15 and all(g.degree(v) == 3 for v in range(10))
    assert brute_force_list(g) == set()


def test_k33():
    assert len(brute_force_list(gen_complete_bipartite(3, 3))) == 9


def test_limit_refusal(monkeypatch):
    g = gen_cycle(70)
    with pytest.raises(OracleLimitError):
        brute_force_list(g)
    assert brute_force_list(g, limit=70) == set()
    monkeypatch.setenv(ORACLE_LIMIT_ENV, "80")
    assert default_oracle_limit() == 80
    assert brute_force_two_paths(g) is not None
    monkeypatch.setenv(ORACLE_LIMIT_ENV, "10")
    with pytest.raises(OracleLimitError):
        brute_force_two_paths(g)


def test_two_path_oracle_examples():
    assert len(brute_force_two_paths(gen_complete(4), PathClass.HHH)) == 12
    assert brute_force_two_paths(gen_star(6), PathClass.L_CENTER) == set()
    g = gen_lhh_adversary(64, "1/10")
    assert len(brute_force_two_paths(g, PathClass.ORIENTED_LHH, limit=g.n)) == enum_oriented_lhh_paths(
        g, degree_partition(g)
    )


def _matrix_count(g):
    # independent of the oracle: tr(A^4) minus the degenerate walks, dense numpy
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    w = int(np.trace(np.linalg.matrix_power(a, 4)))
    deg = a.sum(axis=1)
    return (w - 2 * g.m - 2 * int((deg * (deg - 1)).sum())) // 8


def test_oracle_agrees_with_codegree_and_matrix_power():
    for g in er_corpus():
        t = len(brute_force_list(g))
        assert t == count_codegree(g) == _matrix_count(g)
