import math

import pytest

from selfinverse.experiments import EXPERIMENTS, run_all, run_experiment


@pytest.mark.parametrize("name", list(EXPERIMENTS))
def test_each_experiment_passes_at_default_seed(name):
    r = run_experiment(name, seed=0)
    assert r.passed, r.checks
    s = r.summary()
    assert {"seed", "streams", "specs", "version", "checks"} <= set(s)


def test_experiments_use_distinct_streams():
    ids = [run_experiment(k, seed=1).streams[0] for k in EXPERIMENTS]
    assert len(set(ids)) == len(ids)


def test_cf_witness_values():
    r = run_experiment("cf-witness")
    t_lu, t_lr = r.table_rows[0][1], r.table_rows[1][1]
    assert abs(t_lu - 1.5 * math.pi) < 0.05
    assert t_lr == pytest.approx(math.pi)


def test_run_all_order_and_reproducibility():
    a = run_all(seed=3)
    b = run_all(seed=3)
    assert [r.name for r in a] == list(EXPERIMENTS)
    assert [r.table_rows for r in a] == [r.table_rows for r in b]


def test_unknown_experiment():
    with pytest.raises(KeyError):
        run_experiment("nope")
