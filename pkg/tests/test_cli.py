import json
import subprocess
import sys

import pytest

from domguard import cli
from domguard import graphs as G


def run_cli(*argv):
    return cli.main(list(argv))


def test_params_text(capsys):
    assert run_cli("params", "--family", "cycle:6") == 0
    out = capsys.readouterr().out
    assert "m_eternal" in out and "= 2" in out


def test_params_json(capsys):
    assert run_cli("params", "--family", "cycle:5", "--format", "json") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["values"]["gamma"] == 2
    assert data["values"]["eternal"] == 3
    assert data["values"]["theta_c"] == 3


def test_params_all_ones_for_complete(capsys):
    assert run_cli("params", "--family", "complete:5", "--format", "json") == 0
    data = json.loads(capsys.readouterr().out)
    for key in ("gamma", "m_eternal", "alpha", "eternal", "theta", "theta_c", "gamma_c"):
        assert data["values"][key] == 1


def test_params_from_g6_file(tmp_path, capsys):
    cube = G.cartesian_product(G.cycle(4), G.complete(2))
    path = tmp_path / "cube.g6"
    path.write_text(G.to_graph6(cube) + "\n")
    assert run_cli("params", "--g6", str(path), "--format", "json") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["values"]["theta"] == 4
    assert data["values"]["m_eternal"] == 2  # antipodal pairs defend the cube


def test_params_from_edgelist_file(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text(G.format_edge_list(G.star(4)))
    assert run_cli("params", "--edgelist", str(path), "--format", "json") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["values"]["theta"] == 4 and data["values"]["m_eternal"] == 2


def test_parse_failures_exit_2(tmp_path, capsys):
    assert run_cli("params", "--family", "heptagon:7") == 2
    assert run_cli("params", "--family", "cycle:one") == 2
    assert run_cli("params", "--family", "cycle:2") == 2
    bad = tmp_path / "bad.g6"
    bad.write_text("A" + chr(30) + "\n")
    assert run_cli("params", "--g6", str(bad)) == 2
    assert run_cli("params", "--g6", str(tmp_path / "missing.g6")) == 2


def test_check_exit_codes(capsys):
    assert run_cli("check", "FACT1_CHAIN", "--n-max", "4") == 0
    out = capsys.readouterr().out
    assert "verified" in out
    assert run_cli("check", "NOPE") == 2
    err = capsys.readouterr().err
    assert "FACT1_CHAIN" in err  # the registry listing helps the caller


def test_check_json(capsys):
    assert run_cli("check", "GHH1", "--n-max", "4", "--format", "json") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "verified"
    assert data["checked"] == 18
    assert data["violations"] == []


def test_search_exit_codes(capsys):
    assert run_cli("search", "Q_MAIN1", "--n-max", "4") == 0
    capsys.readouterr()
    assert run_cli("search", "FIG1_WITNESS", "--n-max", "6") == 1
    out = capsys.readouterr().out
    assert "violation" in out
    assert run_cli("search", "NOPE") == 2


def test_sweep_all_trees(capsys):
    assert run_cli("sweep", "--all-trees", "6") == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 + 1 + 1 + 1 + 2 + 3 + 6


def test_sweep_json_from_file(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text("\n".join(G.to_graph6(g) for g in [G.cycle(5), G.cycle(7)]) + "\n")
    assert run_cli("sweep", "--g6", str(path), "--format", "json") == 0
    data = json.loads(capsys.readouterr().out)
    assert [r["n"] for r in data["rows"]] == [5, 7]
    assert data["rows"][1]["values"]["theta"] == 4


def test_sweep_parallel_jobs(tmp_path, capsys):
    assert run_cli("sweep", "--all-trees", "5", "--jobs", "2") == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 + 1 + 1 + 1 + 2 + 3


def test_tree_command(capsys):
    assert run_cli("tree", "--family", "path:6") == 0
    out = capsys.readouterr().out
    assert "m_eternal = 3" in out and "yes" in out
    assert run_cli("tree", "--family", "star:4") == 0
    out = capsys.readouterr().out
    assert "m_eternal = 2, theta = 4" in out and "no" in out
    assert run_cli("tree", "--family", "cycle:6") == 2


def test_tree_spider_edgelist(tmp_path, capsys):
    spider = G.from_edge_list(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    path = tmp_path / "spider222.txt"
    path.write_text(G.format_edge_list(spider))
    assert run_cli("tree", "--edgelist", str(path), "--format", "json") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["m_eternal"] == 4
    assert data["r2_to_small_star"] is True
    assert data["r2_trace"]["terminal"] == "K1,2"


def test_time_budget_exit_3(capsys):
    assert run_cli("--time-budget", "0", "check", "FACT1_CHAIN", "--n-max", "4") == 3
    assert "time budget" in capsys.readouterr().err


def _play(args, stdin_text):
    proc = subprocess.run(
        [sys.executable, "-m", "domguard.cli", *args],
        input=stdin_text, capture_output=True, text=True, timeout=300,
    )
    return proc.returncode, proc.stdout


def test_play_c6_transcript_deterministic():
    code, out = _play(["play", "--family", "cycle:6", "--k", "2", "--model", "all-guards"], "1\n4\n2\n")
    assert code == 0
    assert out.count("guards move to") == 2  # the occupied attack is rejected
    assert "occupied" in out
    code2, out2 = _play(["play", "--family", "cycle:6", "--k", "2", "--model", "all-guards"], "1\n4\n2\n")
    assert out == out2


def test_play_k3_moves_to_attack():
    code, out = _play(["play", "--family", "complete:3", "--k", "1"], "1\n")
    assert code == 0
    assert "guards move to {1}" in out


def test_play_rejects_bad_input_then_continues():
    code, out = _play(["play", "--family", "cycle:6", "--k", "2"], "x\n9\n1\n")
    assert code == 0
    assert "not a vertex" in out and "out of range" in out and "guards move to" in out


def test_play_refuses_when_family_empty():
    code, out = _play(["play", "--family", "cycle:5", "--k", "2", "--model", "one-guard"], "")
    assert code == 1
    assert "cannot defend" in out and "attack run" in out
