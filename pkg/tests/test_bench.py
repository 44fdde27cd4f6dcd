import itertools

import pytest

from fourcycles.bench import fit_slope, run_bench, size_params, slopes


def test_fit_slope_exact_power():
    xs = [2**k for k in range(5, 10)]
    assert fit_slope(xs, [3.0 * x**1.5 for x in xs]) == pytest.approx(1.5)
    with pytest.raises(ValueError):
        fit_slope([1], [1])


def test_size_params():
    assert size_params("erdos_renyi", 64, 3) == {"n": 64, "m_target": 64, "seed": 3}
    assert size_params("grid", 50, 0) == {"r": 7, "c": 7}
    assert size_params("star", 9, 0) == {"n": 9}


def test_run_bench_records_with_fake_clock():
    ticks = itertools.count()
    recs = run_bench("star", [10, 20, 40], ["m43", "trace"], repeats=2, clock=lambda: float(next(ticks)))
    assert len(recs) == 12
    assert all(r.wall_time == 1.0 and r.t == 0 for r in recs)
    assert recs[0].useful_2path_count == 0 and recs[-1].useful_2path_count is None
    assert slopes(recs, "n") == {"m43": pytest.approx(0.0), "trace": pytest.approx(0.0)}


def test_identical_t_across_repeats():
    recs = run_bench("erdos_renyi", [300], ["m43", "n2"], repeats=3, seed=5)
    assert len({r.t for r in recs}) == 1
