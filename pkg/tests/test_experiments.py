import json

import pytest

import minorlab as ml
from minorlab import ExperimentConfig, run_suite


def test_unknown_suite_rejected():
    with pytest.raises(ml.InputError, match="unknown suite"):
        ExperimentConfig(suite="nope")


def test_config_validation():
    with pytest.raises(ml.InputError):
        ExperimentConfig(suite="bounds", trials=0)
    with pytest.raises(ml.InputError):
        ExperimentConfig(suite="bounds", workers=0)


def test_rerun_is_byte_identical():
    for suite, trials, max_n in [
        ("bounds", 8, None),
        ("alon", 4, None),
        ("minorfree", 3, None),
        ("dense-model", 3, 60),
        ("hallratio", 2, 12),
        ("contraction-round", 2, 40),
    ]:
        config = ExperimentConfig(suite=suite, trials=trials, seed=21, max_n=max_n)
        a = run_suite(config)
        b = run_suite(config)
        assert a.json_text() == b.json_text(), suite
        assert a.csv_text() == b.csv_text(), suite


def test_serial_matches_parallel():
    base = dict(suite="alon", trials=6, seed=13)
    serial = run_suite(ExperimentConfig(**base, workers=1))
    parallel = run_suite(ExperimentConfig(**base, workers=3))
    assert serial.json_text() == parallel.json_text()
    assert serial.csv_text() == parallel.csv_text()


def test_report_files_and_schema(tmp_path):
    config = ExperimentConfig(suite="bounds", trials=8, seed=0)
    report = run_suite(config, out_dir=tmp_path)
    doc = json.loads((tmp_path / "bounds.json").read_text())
    assert doc["schema"] == 1
    assert doc["suite"] == "bounds"
    assert doc["trials"] == 8
    csv_lines = (tmp_path / "bounds.csv").read_text().splitlines()
    assert csv_lines[0].startswith("trial,seed,t,")
    assert len(csv_lines) == 9
    assert report.summary["records"] == 8


def test_per_trial_seeds_recorded():
    report = run_suite(ExperimentConfig(suite="minorfree", trials=3, seed=5))
    seeds = [rec["seed"] for rec in report.records]
    assert len(set(seeds)) == 3
    assert seeds == [ml.derive_seed(5, i) for i in range(3)]


def test_every_suite_runs_small():
    for suite in ml.SUITES:
        config = ExperimentConfig(suite=suite, trials=2, seed=7, max_n=40)
        report = run_suite(config)
        assert len(report.records) == 2
        assert report.columns[0] == "trial"
