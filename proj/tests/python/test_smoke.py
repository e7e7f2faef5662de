import json
import math

import pytest

import indseq


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def test_counterexample_sequence():
    seq = indseq.ind_seq("join(union(K4,K4,K4),K37)")
    assert seq == [1, 49, 48, 64]
    assert indseq.analyze(seq)["unimodal"] is False


def test_paths_follow_fibonacci():
    for n in range(1, 31):
        assert indseq.total_count(f"path({n})") == fib(n + 2)


def test_graph6_and_builder_agree():
    assert indseq.ind_seq("Dhc") == indseq.ind_seq("cycle(5)") == [1, 5, 5]
    assert indseq.canonical_graph6("C5") == indseq.canonical_graph6("Dhc")


def test_tie_at_five_vertices():
    report = indseq.verify_max_total(5, 2)
    assert report["max_value"] == "11/1"
    assert len(report["maximizers"]) == 2
    assert report["unique"] is False
    cycle = indseq.canonical_graph6("C5")
    kbip = indseq.canonical_graph6("complete_bipartite(2,3)")
    assert sorted(report["maximizers"]) == sorted([cycle, kbip])


def test_kdn_closed_form():
    for n in range(2, 9):
        for d in range(1, n):
            assert indseq.kdn_seq(d, n) == indseq.ind_seq(f"complete_bipartite({d},{n - d})")


def test_enumeration_count():
    assert len(indseq.enumerate_graphs(4, 1)) == 7
    assert len(indseq.enumerate_graphs(6)) == 156


def test_sandwich_on_sample():
    rows = indseq.sample_bipartite(8, 0.5, seed=3, stream=1)
    report = indseq.coefficient_sandwich(8, rows)
    assert report["holds"] is True
    profile = indseq.bound_profile(8, rows)
    assert profile["n"] == 8 and len(profile["x"]) == 9


def test_thresholds_at_one():
    c, d = indseq.thresholds("1")
    assert math.isclose(c, math.log(4) / (math.log(4) - 1), rel_tol=1e-12)
    assert math.isclose(d, -2.0, rel_tol=1e-12)


def test_errors_map_to_exceptions():
    with pytest.raises(indseq.ParseError):
        indseq.ind_seq("nope(")
    with pytest.raises(indseq.PreconditionError):
        indseq.ind_seq("K65")
    with pytest.raises(indseq.BudgetExceeded):
        indseq.ind_seq("P40", budget_nodes=3)


def test_cli_round_trip_is_worker_independent():
    args = ["random", "--n", "8", "--p", "0.5", "--samples", "12", "--seed", "5"]
    code1, out1, _ = indseq.run_cli(args + ["--workers", "1"])
    code8, out8, _ = indseq.run_cli(args + ["--workers", "8"])
    assert code1 == code8 == 0
    assert out1 == out8
    data = json.loads(out1)
    assert data["schema"] == indseq.SCHEMA
    assert len(data["samples"]) == 12


def test_cli_exit_codes():
    assert indseq.run_cli(["poly", "bad("])[0] == 2
    assert indseq.run_cli(["poly", "P40", "--budget-nodes", "3"])[0] == 3
    assert indseq.run_cli(["poly", "K65"])[0] == 4
