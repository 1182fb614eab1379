import json
import subprocess
import sys

import pytest

from cochain_tuza.cli import (
    EXIT_OK,
    EXIT_PARSE,
    EXIT_PRECONDITION,
    main,
)
from cochain_tuza.fileio import read_certificate, read_graph, write_general
from cochain_tuza.graphs import GeneralGraph, build_cochain


def run(args):
    return main(args)


def test_gen_explicit_thresholds(tmp_path):
    out = tmp_path / "g.json"
    assert run(["gen", "--l-size", "4", "--m-size", "8",
                "--thresholds", "8,5,4,2", "--out", str(out)]) == EXIT_OK
    g = read_graph(out)
    assert g.thresholds == (8, 5, 4, 2)


def test_gen_complete_and_disjoint(tmp_path):
    out = tmp_path / "k4.json"
    assert run(["gen", "--l-size", "2", "--m-size", "2", "--complete",
                "--out", str(out)]) == EXIT_OK
    assert read_graph(out).to_general().n == 4
    assert run(["gen", "--l-size", "2", "--m-size", "4", "--disjoint",
                "--out", str(out)]) == EXIT_OK
    assert read_graph(out).thresholds == (0, 0)


def test_gen_random_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        assert run(["gen", "--l-size", "8", "--m-size", "8", "--random",
                    "--seed", "7", "--out", str(out)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_gen_rejects_bad_thresholds(tmp_path):
    out = tmp_path / "g.json"
    assert run(["gen", "--l-size", "2", "--m-size", "2",
                "--thresholds", "1,2", "--out", str(out)]) == EXIT_PRECONDITION


def test_certify_figure_instance(tmp_path):
    graph = tmp_path / "g.json"
    cert = tmp_path / "c.json"
    run(["gen", "--l-size", "4", "--m-size", "8", "--thresholds", "8,5,4,2",
         "--out", str(graph)])
    assert run(["certify", str(graph), "--out", str(cert)]) == EXIT_OK
    doc = read_certificate(cert)
    assert doc["ratio_ok"] and doc["h_size"] <= 2 * doc["p_size"]
    assert doc["method"].startswith("3.1-")


def test_certify_is_byte_deterministic(tmp_path):
    graph = tmp_path / "g.json"
    run(["gen", "--l-size", "6", "--m-size", "6", "--random", "--seed", "3",
         "--out", str(graph)])
    c1, c2 = tmp_path / "c1.json", tmp_path / "c2.json"
    assert run(["certify", str(graph), "--out", str(c1)]) == EXIT_OK
    assert run(["certify", str(graph), "--out", str(c2)]) == EXIT_OK
    assert c1.read_bytes() == c2.read_bytes()


def test_certify_odd_sides_precondition_exit(tmp_path):
    graph = tmp_path / "g.json"
    run(["gen", "--l-size", "3", "--m-size", "4", "--complete", "--out", str(graph)])
    assert run(["certify", str(graph)]) == EXIT_PRECONDITION


def test_certify_exact_mode_on_k4(tmp_path):
    graph = tmp_path / "g.json"
    cert = tmp_path / "c.json"
    run(["gen", "--l-size", "2", "--m-size", "2", "--complete", "--out", str(graph)])
    assert run(["certify", str(graph), "--mode", "exact", "--out", str(cert)]) == EXIT_OK
    doc = read_certificate(cert)
    assert (doc["h_size"], doc["p_size"]) == (2, 1)


def test_certify_unparseable_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["certify", str(bad)]) == EXIT_PARSE
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"foo": 1}))
    assert run(["certify", str(wrong)]) == EXIT_PARSE


def test_certify_general_graph_via_recognition(tmp_path):
    # the certificate must be expressed in the input file's own labels
    graph = tmp_path / "g.json"
    g = build_cochain(2, 4, (4, 2)).to_general()
    perm = [3, 0, 5, 1, 4, 2]
    shuffled = GeneralGraph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges))
    write_general(graph, shuffled)
    cert = tmp_path / "c.json"
    assert run(["certify", str(graph), "--out", str(cert)]) == EXIT_OK
    doc = read_certificate(cert)
    from cochain_tuza.graphs import verify_hitting

    assert verify_hitting(shuffled, [tuple(e) for e in doc["hitting"]])


def test_certify_rejects_non_cochain_general_graph(tmp_path):
    graph = tmp_path / "c4.json"
    write_general(graph, GeneralGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
    assert run(["certify", str(graph)]) == EXIT_PRECONDITION


def test_search_cli(capsys):
    assert run(["search", "--limit", "10"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "exceptional-count=12" in out
    assert "matches-published-list=True" in out
    assert "tuple=(2,3,1,2)" in out


def test_audit_cli(capsys):
    assert run(["audit", "--max-half", "8"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "summary chains=" in out
    # paper slack in the P10' chain is reported with its anchor
    assert "chain='(x_l-l-1)*(2l-1-x_m)'" in out


def test_fuzz_cli(capsys):
    assert run(["fuzz", "--count", "100", "--max", "4", "--seed", "1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "count=100" in out and "failures=0" in out
    assert "oracle_checked=" in out


def test_fuzz_output_independent_of_workers(capsys):
    assert run(["fuzz", "--count", "40", "--max", "3", "--seed", "9",
                "--verbose"]) == EXIT_OK
    seq = capsys.readouterr().out
    assert run(["fuzz", "--count", "40", "--max", "3", "--seed", "9",
                "--verbose", "--workers", "2"]) == EXIT_OK
    par = capsys.readouterr().out
    assert seq == par


def test_entry_point_subprocess(tmp_path):
    out = tmp_path / "g.json"
    proc = subprocess.run(
        [sys.executable, "-m", "cochain_tuza.cli", "gen", "--l-size", "2",
         "--m-size", "2", "--complete", "--out", str(out)],
        capture_output=True,
    )
    assert proc.returncode == EXIT_OK


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["certify"])  # missing positional argument
    assert exc.value.code == EXIT_PARSE
