import json

import pytest

from gsa_lab.cli import main

CONFIG = """
problems:
  - {function: rastrigin, dimension: 2}
gsa: {population_size: 5, iterations: 10}
strategies:
  - g0: {kind: FixedG0, params: {value: 100}}
  - g0: {kind: ProposedHeuristic, params: {fraction: 0.2}}
runs: 2
base_seed: 3
"""


@pytest.fixture
def config(tmp_path):
    path = tmp_path / "exp.yaml"
    path.write_text(CONFIG)
    return path


def test_list_functions(capsys):
    assert main(["list-functions"]) == 0
    assert capsys.readouterr().out.split() == ["ackley", "griewank", "rastrigin", "rosenbrock",
                                               "schwefel222", "schwefel226", "sphere"]


def test_eval(capsys):
    assert main(["eval", "--function", "sphere", "--point", "1,2,3"]) == 0
    assert float(capsys.readouterr().out) == 14.0


def test_eval_unknown_function(capsys):
    assert main(["eval", "--function", "nosuch", "--point", "1"]) == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "registry"


def test_run_csv(config, tmp_path, capsys):
    out = tmp_path / "out"
    assert main(["run", "--config", str(config), "--out", str(out)]) == 0
    assert (out / "summary.csv").exists() and (out / "curves.csv").exists()
    assert "wins=" in capsys.readouterr().out


def test_run_json_and_seed_override(config, tmp_path):
    assert main(["run", "--config", str(config), "--out", str(tmp_path / "a"), "--format", "json"]) == 0
    assert main(["run", "--config", str(config), "--out", str(tmp_path / "b"), "--format", "json",
                 "--seed", "4"]) == 0
    a = json.loads((tmp_path / "a" / "results.json").read_text())
    b = json.loads((tmp_path / "b" / "results.json").read_text())
    assert a["runs"][0]["seed"] != b["runs"][0]["seed"]


def test_run_invalid_config(tmp_path, capsys):
    path = tmp_path / "bad.yaml"
    path.write_text(CONFIG.replace("runs: 2", "runs: 0"))
    assert main(["run", "--config", str(path)]) == 1
    err = json.loads(capsys.readouterr().err)
    assert (err["error"], err["key"]) == ("config", "runs")


def test_bad_seed_is_usage_error(config):
    with pytest.raises(SystemExit) as info:
        main(["run", "--config", str(config), "--seed", "-3"])
    assert info.value.code == 2
