"""Exercises the acceptance suite's dataset discovery and calibration logic
against a synthetic simplex-format dataset, so the conditional path is
covered even when no real dataset files are installed."""

import pytest

import test_acceptance as acc
from hypercc import write_benson

# raw edges: duplicate pair, a singleton, and a detached component
RAW = [["1", "2"], ["1", "2"], ["3"], ["2", "3"], ["1", "2", "3"], ["4", "5"]]

# (N, M, memberships) after preprocessing under each singleton policy
KEEP_SINGLETONS = (3, 4, 8)
DROP_SINGLETONS = (3, 3, 7)


@pytest.fixture
def synthetic_root(tmp_path):
    base = tmp_path / "toy-ds"
    base.mkdir()
    write_benson(RAW, base / "toy-ds-nverts.txt", base / "toy-ds-simplices.txt")
    return tmp_path


def _install(monkeypatch, synthetic_root, integers):
    monkeypatch.setenv("HYPERCC_DATA", str(synthetic_root))
    monkeypatch.setitem(acc.DATASETS, "toy-ds", {
        "dirnames": ("toy-ds",),
        "integers": integers,
    })
    monkeypatch.setattr(acc, "_calibrated", {})


def test_discovery_finds_prefix_layout(monkeypatch, synthetic_root):
    _install(monkeypatch, synthetic_root, KEEP_SINGLETONS)
    paths = acc._find_dataset("toy-ds")
    assert paths is not None
    assert paths[0].name == "toy-ds-nverts.txt"


def test_calibration_selects_keep_policy(monkeypatch, synthetic_root):
    _install(monkeypatch, synthetic_root, KEEP_SINGLETONS)
    h, prov, policy = acc._load_calibrated("toy-ds")
    assert policy is False
    assert (h.n_nodes, h.n_edges, h.bipartite_edges) == KEEP_SINGLETONS
    assert prov.balanced()


def test_calibration_selects_drop_policy(monkeypatch, synthetic_root):
    _install(monkeypatch, synthetic_root, DROP_SINGLETONS)
    h, prov, policy = acc._load_calibrated("toy-ds")
    assert policy is True
    assert (h.n_nodes, h.n_edges, h.bipartite_edges) == DROP_SINGLETONS
    assert prov.singletons_removed == 1


def test_calibration_fails_when_no_policy_matches(monkeypatch, synthetic_root):
    _install(monkeypatch, synthetic_root, (99, 99, 99))
    with pytest.raises(AssertionError, match="no singleton policy"):
        acc._load_calibrated("toy-ds")


def test_missing_dataset_skips(monkeypatch, tmp_path):
    empty = tmp_path / "nothing"
    empty.mkdir()
    _install(monkeypatch, empty, KEEP_SINGLETONS)
    with pytest.raises(pytest.skip.Exception):
        acc._load_calibrated("toy-ds")
