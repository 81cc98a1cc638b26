"""CLI behavior: subcommands, flags, exit codes, files and determinism."""

import csv
import json
import math

import pytest

from hypercc import RandomHypergraphSpec, random_hypergraph, write_edgelist
from hypercc.cli import main
from hypercc.io import hypergraph_edge_labels

TOY = "a b c\na b\na c\nb c\nc d\n"


@pytest.fixture
def toy_file(tmp_path):
    path = tmp_path / "toy.txt"
    path.write_text(TOY)
    return str(path)


@pytest.fixture
def medium_file(tmp_path):
    h = random_hypergraph(RandomHypergraphSpec(n=60, m=150, min_size=2,
                                               max_size=5, seed=11))
    path = tmp_path / "medium.txt"
    write_edgelist(hypergraph_edge_labels(h), path)
    return str(path)


def test_stats_prints_counts(toy_file, capsys):
    assert main(["stats", toy_file]) == 0
    out = capsys.readouterr().out
    assert "n_nodes: 4" in out
    assert "n_edges: 5" in out
    assert "bipartite_edges: 11" in out


def test_stats_json_and_files(toy_file, tmp_path, capsys):
    out_dir = tmp_path / "out"
    assert main(["stats", toy_file, "--json", "--out", str(out_dir)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["stats"]["n_nodes"] == 4
    assert payload["provenance"]["raw_edge_count"] == 5
    assert (out_dir / "stats.csv").exists()
    assert (out_dir / "provenance.json").exists()


def test_stats_on_benson_directory(tmp_path, capsys):
    (tmp_path / "ds-nverts.txt").write_text("2\n3\n")
    (tmp_path / "ds-simplices.txt").write_text("1\n2\n1\n2\n3\n")
    assert main(["stats", str(tmp_path)]) == 0
    assert "n_nodes: 3" in capsys.readouterr().out


def test_missing_file_is_parse_error(tmp_path):
    assert main(["stats", str(tmp_path / "nope.txt")]) == 3


def test_malformed_benson_is_parse_error(tmp_path):
    (tmp_path / "bad-nverts.txt").write_text("3\n")
    (tmp_path / "bad-simplices.txt").write_text("1\n")
    assert main(["stats", str(tmp_path / "bad-nverts.txt")]) == 3


def test_unknown_definition_is_usage_error(toy_file):
    assert main(["cc", toy_file, "--only", "proposed,nonsense"]) == 2


def test_bad_bin_count_is_usage_error(toy_file):
    assert main(["hist", toy_file, "--bins", "0"]) == 2


def test_cc_stdout_csv(toy_file, capsys):
    assert main(["cc", toy_file]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "node_label,c_proposed,c_opsahl,c_zhou,c_baseline"
    assert lines[-1].startswith("__average__,")
    assert len(lines) == 4 + 2


def test_cc_only_selector(toy_file, capsys):
    assert main(["cc", toy_file, "--only", "baseline"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "node_label,c_baseline"


def test_cc_writes_files_and_echoes_averages(toy_file, tmp_path, capsys):
    out_dir = tmp_path / "out"
    assert main(["cc", toy_file, "--out", str(out_dir)]) == 0
    echoed = capsys.readouterr().out
    assert "average c_proposed:" in echoed
    with open(out_dir / "cc.csv") as f:
        rows = list(csv.reader(f))
    assert rows[0][0] == "node_label"
    assert rows[-1][0] == "__average__"
    payload = json.loads((out_dir / "cc.json").read_text())
    assert set(payload["averages"]) == {
        "c_proposed", "c_opsahl", "c_zhou", "c_baseline"}


def test_cc_oracle_flag_matches_fast_path(toy_file, capsys):
    assert main(["cc", toy_file, "--json"]) == 0
    fast = json.loads(capsys.readouterr().out)
    assert main(["cc", toy_file, "--json", "--oracle"]) == 0
    slow = json.loads(capsys.readouterr().out)
    for a, b in zip(fast["records"], slow["records"]):
        assert a["node_label"] == b["node_label"]
        for key in a:
            if key != "node_label":
                assert math.isclose(a[key], b[key], abs_tol=1e-12)


def test_motifs_counts(toy_file, capsys):
    assert main(["motifs", toy_file, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["counts"]["VI"] == 1
    assert payload["counts"]["I"] == 2   # c-centered wedges with a and b
    assert payload["rule"] == "subset"


def test_empty_definition_selector_is_usage_error(toy_file):
    assert main(["cc", toy_file, "--only", ""]) == 2


def test_motifs_one_of_each_class_on_disjoint_fixtures(tmp_path, capsys):
    lines = [
        "a1 b1", "a1 c1",                                  # I
        "a2 b2", "a2 c2", "b2 c2",                         # II
        "a3 b3 c3",                                        # III
        "a4 b4 c4", "a4 b4",                               # IV
        "a5 b5 c5", "a5 b5", "a5 c5",                      # V
        "a6 b6 c6", "a6 b6", "a6 c6", "b6 c6",             # VI
    ]
    path = tmp_path / "fixtures.txt"
    path.write_text("".join(f"{line}\n" for line in lines))
    assert main(["motifs", str(path), "--no-lcc", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["counts"] == {m: 1 for m in ("I", "II", "III", "IV", "V", "VI")}


def test_motifs_intersect_rule_and_oracle(toy_file, capsys):
    assert main(["motifs", toy_file, "--motif-induction", "intersect",
                 "--json"]) == 0
    fast = json.loads(capsys.readouterr().out)
    assert main(["motifs", toy_file, "--motif-induction", "intersect",
                 "--json", "--oracle"]) == 0
    slow = json.loads(capsys.readouterr().out)
    assert fast["counts"] == slow["counts"]


def test_correlate_outputs(toy_file, tmp_path, capsys):
    out_dir = tmp_path / "out"
    assert main(["correlate", toy_file, "--json", "--out", str(out_dir)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload["correlations"]) == {"rho_op", "rho_zp", "rho_sp"}
    assert (out_dir / "scatter.csv").exists()
    assert (out_dir / "plot_scatter.py").exists()


def test_correlate_recomputation_from_scatter(medium_file, tmp_path, capsys):
    out_dir = tmp_path / "out"
    assert main(["correlate", medium_file, "--json", "--out", str(out_dir)]) == 0
    payload = json.loads(capsys.readouterr().out)
    with open(out_dir / "scatter.csv") as f:
        rows = list(csv.DictReader(f))
    cols = {key: [float(r[key]) for r in rows] for key in rows[0]
            if key != "node_label"}

    def two_pass(xs, ys):
        n = len(xs)
        mx = sum(xs) / n
        my = sum(ys) / n
        sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
        sxx = sum((x - mx) ** 2 for x in xs)
        syy = sum((y - my) ** 2 for y in ys)
        return sxy / math.sqrt(sxx * syy)

    for key, other in (("rho_op", "c_opsahl"), ("rho_zp", "c_zhou"),
                       ("rho_sp", "c_baseline")):
        want = two_pass(cols[other], cols["c_proposed"])
        assert math.isclose(payload["correlations"][key], want, abs_tol=1e-12)


def test_correlate_undefined_on_zero_variance(tmp_path, capsys):
    path = tmp_path / "tri.txt"
    path.write_text("a b\nb c\na c\n")  # every coefficient is exactly 1
    assert main(["correlate", str(path)]) == 0
    out = capsys.readouterr().out
    assert out.count("undefined") == 3


def test_correlate_equal_columns_give_one(tmp_path, capsys):
    path = tmp_path / "pairs.txt"
    path.write_text("a b\nb c\na c\nc d\n")  # pair-only: all columns equal
    assert main(["correlate", str(path), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["correlations"]["rho_sp"] == pytest.approx(1.0)


def test_hist_bins_partition_and_sum(toy_file, capsys):
    assert main(["hist", toy_file, "--bins", "5", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    for definition, bins in payload["histograms"].items():
        assert len(bins) == 5
        assert sum(b["count"] for b in bins) == 4
        assert bins[0]["bin_lo"] == 0.0
        assert bins[-1]["bin_hi"] == 1.0


def test_hist_last_bin_inclusive(tmp_path, capsys):
    path = tmp_path / "tri.txt"
    path.write_text("a b\nb c\na c\n")
    assert main(["hist", str(path), "--only", "baseline", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    bins = payload["histograms"]["baseline"]
    assert bins[-1]["count"] == 3  # value 1.0 lands in the last bin
    assert sum(b["count"] for b in bins) == 3


def test_hist_recomputed_from_cc_output(medium_file, tmp_path):
    out_dir = tmp_path / "out"
    assert main(["cc", medium_file, "--out", str(out_dir)]) == 0
    assert main(["hist", medium_file, "--bins", "20", "--out", str(out_dir)]) == 0
    with open(out_dir / "cc.csv") as f:
        cc_rows = [r for r in csv.DictReader(f) if r["node_label"] != "__average__"]
    with open(out_dir / "hist.csv") as f:
        hist_rows = list(csv.DictReader(f))
    by_def = {}
    for row in hist_rows:
        by_def.setdefault(row["definition"], []).append(row)
    for definition, bins in by_def.items():
        values = [float(r[f"c_{definition}"]) for r in cc_rows]
        for i, b in enumerate(bins):
            lo, hi = float(b["bin_lo"]), float(b["bin_hi"])
            last = i == len(bins) - 1
            want = sum(1 for v in values
                       if lo <= v < hi or (last and v == hi))
            assert int(b["count"]) == want


def test_hist_all_zero_mass_in_first_bin(tmp_path, capsys):
    path = tmp_path / "wedge.txt"
    path.write_text("a b\na c\n")
    assert main(["hist", str(path), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    for bins in payload["histograms"].values():
        assert bins[0]["count"] == 3


def test_table1_output(capsys, tmp_path):
    out_dir = tmp_path / "out"
    assert main(["table1", "--out", str(out_dir)]) == 0
    out = capsys.readouterr().out
    assert "1/3" in out and "1/2" in out
    assert "0.5" in out
    with open(out_dir / "table1.csv") as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["definition", "I", "II", "III", "IV-a", "IV-b", "V", "VI"]
    assert [r[0] for r in rows[1:]] == ["opsahl", "zhou", "baseline", "proposed"]


def test_table1_json_matches_oracle_mode(capsys):
    assert main(["table1", "--json"]) == 0
    fast = json.loads(capsys.readouterr().out)
    assert main(["table1", "--json", "--oracle"]) == 0
    slow = json.loads(capsys.readouterr().out)
    for name in fast["rows"]:
        for a, b in zip(fast["rows"][name], slow["rows"][name]):
            assert math.isclose(a, b, abs_tol=1e-12)


def _run_to_files(input_path, out_dir, threads):
    assert main(["cc", input_path, "--threads", str(threads),
                 "--out", str(out_dir)]) == 0
    assert main(["motifs", input_path, "--threads", str(threads),
                 "--out", str(out_dir)]) == 0
    assert main(["correlate", input_path, "--threads", str(threads),
                 "--out", str(out_dir)]) == 0
    assert main(["hist", input_path, "--threads", str(threads),
                 "--out", str(out_dir)]) == 0
    return {p.name: p.read_bytes() for p in sorted(out_dir.iterdir())}


def test_outputs_byte_identical_across_runs_and_threads(medium_file, tmp_path):
    first = _run_to_files(medium_file, tmp_path / "r1", 1)
    second = _run_to_files(medium_file, tmp_path / "r2", 1)
    threaded = _run_to_files(medium_file, tmp_path / "r8", 8)
    assert first == second
    assert first == threaded


def test_drop_singletons_flag(tmp_path, capsys):
    path = tmp_path / "s.txt"
    path.write_text("a b\nb\n")
    assert main(["stats", str(path), "--json"]) == 0
    kept = json.loads(capsys.readouterr().out)
    assert kept["stats"]["n_edges"] == 2
    assert main(["stats", str(path), "--drop-singletons", "--json"]) == 0
    dropped = json.loads(capsys.readouterr().out)
    assert dropped["stats"]["n_edges"] == 1
    assert dropped["provenance"]["singletons_removed"] == 1


def test_no_lcc_flag(tmp_path, capsys):
    path = tmp_path / "two.txt"
    path.write_text("a b\nx y\nx z\n")
    assert main(["stats", str(path), "--json"]) == 0
    lcc = json.loads(capsys.readouterr().out)
    assert lcc["stats"]["n_nodes"] == 3
    assert main(["stats", str(path), "--no-lcc", "--json"]) == 0
    full = json.loads(capsys.readouterr().out)
    assert full["stats"]["n_nodes"] == 5
