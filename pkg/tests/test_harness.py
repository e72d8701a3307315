import csv
import io
import json
from pathlib import Path

import numpy as np
import pytest

from gsa_lab.config import parse_config
from gsa_lab.core import IterationRecord, RunResult
from gsa_lab.experiment import CellRun, run_experiment, split_seed, splitmix64
from gsa_lab.report import (
    ContractError,
    ExportError,
    compare_strategies,
    curves_csv,
    export,
    head_to_head,
    summarize,
)

GOLDEN = Path(__file__).parent / "golden"


def raw_config(runs=3, seed=1, pairing="paired"):
    return {
        "problems": [{"function": "sphere", "dimension": 3}],
        "gsa": {"population_size": 6, "iterations": 15},
        "strategies": [
            {"g0": {"kind": "FixedG0", "params": {"value": 100}}},
            {"g0": {"kind": "ProposedHeuristic", "params": {"fraction": 0.1}}},
        ],
        "runs": runs,
        "base_seed": seed,
        "pairing": pairing,
    }


def fake(function, strategy, kind, rep, final, g0=100.0, seed=0):
    records = [IterationRecord(0, final + 1.0, final + 2.0, g0, 2), IterationRecord(1, final, final + 1.0, g0 / 2, 1)]
    return CellRun(function, 2, strategy, kind, rep, RunResult(records, np.zeros(2), final, g0, seed))


class TestSummarize:
    def test_three(self):
        s = summarize([1.0, 2.0, 3.0])
        assert (s.mean, s.median, s.best, s.worst, s.count) == (2.0, 2.0, 1.0, 3.0, 3)
        assert s.std == pytest.approx((2 / 3) ** 0.5, rel=1e-12)

    def test_singleton(self):
        s = summarize([5.0])
        assert (s.mean, s.median, s.best, s.worst, s.std) == (5.0, 5.0, 5.0, 5.0, 0.0)

    def test_constant(self):
        assert summarize([2.0] * 4).std == 0.0

    def test_even_median(self):
        assert summarize([4.0, 1.0, 3.0, 2.0]).median == 2.5

    def test_empty(self):
        with pytest.raises(ContractError):
            summarize([])


class TestHeadToHead:
    def test_mixed(self):
        assert head_to_head([1, 1, 5], [2, 1, 3]) == (1, 1, 1)

    def test_identical(self):
        assert head_to_head([3.0] * 4, [3.0] * 4) == (0, 4, 0)

    def test_margin(self):
        assert head_to_head([1.0], [1.0 + 5e-13]) == (0, 1, 0)

    def test_all_better(self):
        assert head_to_head([0, 0, 0], [1, 1, 1]) == (3, 0, 0)

    def test_unpaired(self):
        with pytest.raises(ContractError):
            head_to_head([1, 2], [1])


class TestExperiment:
    def test_splitmix_reference(self):
        # first outputs of the reference SplitMix64 generator seeded with 0
        assert splitmix64(0) == 0xE220A8397B1DCDAF
        assert splitmix64(0x9E3779B97F4A7C15) == 0x6E789E6AA1B965F4

    def test_fan_out_and_pairing(self):
        cfg = parse_config(raw_config())
        results = run_experiment(cfg)
        assert len(results) == 6
        assert [(r.strategy, r.repetition) for r in results] == [
            ("FixedG0", 0), ("FixedG0", 1), ("FixedG0", 2),
            ("ProposedHeuristic", 0), ("ProposedHeuristic", 1), ("ProposedHeuristic", 2)]
        for r in range(3):
            assert results[r].result.seed == results[3 + r].result.seed == split_seed(1, 0, r)
        assert len({r.result.seed for r in results[:3]}) == 3

    def test_independent_pairing(self):
        results = run_experiment(parse_config(raw_config(pairing="independent")))
        assert results[0].result.seed != results[3].result.seed

    def test_repeatable(self):
        cfg = parse_config(raw_config())
        a = [r.result.to_dict() for r in run_experiment(cfg)]
        b = [r.result.to_dict() for r in run_experiment(cfg)]
        assert a == b

    def test_parallel_matches_sequential(self):
        cfg = parse_config(raw_config(runs=2))
        a = [r.result.to_dict() for r in run_experiment(cfg, workers=1)]
        b = [r.result.to_dict() for r in run_experiment(cfg, workers=2)]
        assert a == b

    def test_base_seed_matters(self):
        a = run_experiment(parse_config(raw_config(seed=1)))
        b = run_experiment(parse_config(raw_config(seed=2)))
        assert any(x.result.best_fitness != y.result.best_fitness for x, y in zip(a, b))

    def test_accounting(self):
        raw = raw_config(runs=4)
        raw["problems"].append({"function": "rastrigin", "dimension": 2})
        cfg = parse_config(raw)
        results = run_experiment(cfg)
        assert len(results) == 2 * 2 * 4
        table = compare_strategies(results)
        assert len(table.head_to_head) == 2
        assert all(h.wins + h.ties + h.losses == 4 for h in table.head_to_head)
        assert all(r.stats.count == 4 for r in table.rows)


def fixture_results():
    return [
        fake("sphere", "FixedG0", "FixedG0", 0, 2.0),
        fake("sphere", "FixedG0", "FixedG0", 1, 4.0),
        fake("sphere", "ProposedHeuristic", "ProposedHeuristic", 0, 1.0, g0=2.5),
        fake("sphere", "ProposedHeuristic", "ProposedHeuristic", 1, 4.0, g0=2.5),
        fake("rastrigin", "FixedG0", "FixedG0", 0, 0.5),
        fake("rastrigin", "FixedG0", "FixedG0", 1, 0.25),
    ]


class TestReport:
    def test_golden_summary(self, tmp_path):
        results = fixture_results()
        table = compare_strategies(results, strict=False)
        export(results, table, "csv", tmp_path)
        assert (tmp_path / "summary.csv").read_text() == (GOLDEN / "summary_fixture.csv").read_text()

    def test_strict_requires_pairs(self):
        with pytest.raises(ContractError):
            compare_strategies(fixture_results())

    def test_seed_mismatch(self):
        results = fixture_results()[:4]
        results[3] = fake("sphere", "ProposedHeuristic", "ProposedHeuristic", 1, 4.0, seed=99)
        with pytest.raises(ContractError):
            compare_strategies(results)
        compare_strategies(results, same_seed=False)

    def test_empty_is_header_only(self, tmp_path):
        export([], compare_strategies([]), "csv", tmp_path)
        assert (tmp_path / "summary.csv").read_text().count("\n") == 1
        assert (tmp_path / "curves.csv").read_text() == "function,dim,strategy,run,iteration,best_fitness,g_value\n"

    def test_curves_last_rows_recover_summary(self):
        results = fixture_results()
        rows = list(csv.DictReader(io.StringIO(curves_csv(results))))
        last = [float(r["best_fitness"]) for r in rows if r["function"] == "sphere"
                and r["strategy"] == "FixedG0" and r["iteration"] == "1"]
        table = compare_strategies(results, strict=False)
        assert (min(last), max(last)) == (table.rows[0].stats.best, table.rows[0].stats.worst)

    def test_json_mirrors_csv(self, tmp_path):
        results = fixture_results()
        table = compare_strategies(results, strict=False)
        export(results, table, "json", tmp_path)
        doc = json.loads((tmp_path / "results.json").read_text())
        assert [s["mean"] for s in doc["summary"]] == [3.0, 2.5, 0.375]
        assert doc["head_to_head"] == [{"function": "sphere", "dim": 2, "proposed": "ProposedHeuristic",
                                        "fixed": "FixedG0", "wins": 1, "ties": 1, "losses": 0}]
        assert len(doc["runs"]) == 6 and len(doc["runs"][0]["records"]) == 2

    def test_round_trip_numbers(self):
        results = [fake("sphere", "FixedG0", "FixedG0", 0, 0.1 + 0.2)]
        text = curves_csv(results)
        assert "0.30000000000000004" in text

    def test_io_error_has_path(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("")
        with pytest.raises(ExportError) as info:
            export([], compare_strategies([]), "csv", blocker / "sub")
        assert str(blocker) in str(info.value)
