import json
import math

import pytest

from qbound.cli import main
from qbound.scenarios import (SCENARIOS, InvalidConfigError, Report,
                              ScenarioConfig, UnknownScenarioError, emit_report,
                              run_scenario)

SMALL = {
    "bound-chain": dict(dim=2, trials=5),
    "saturation-classical": dict(dim=3, trials=5),
    "uniform-theorem": dict(dim=2, trials=400),
    "distorted-ensemble": dict(dim=2, trials=4000),
    "eqspec-recovery": dict(dim=2, trials=2, params={"opt_budget": 400}),
    "inefficient-violation": dict(dim=2, trials=1, params={"grid": 21}),
    "two-state-accinfo": dict(dim=2, trials=1,
                              params={"budget": 4000, "restarts": 2,
                                      "opt_tol": 1e-3}),
    "subentropy-corollary": dict(dim=2, trials=5),
    "optimize": dict(dim=2, trials=1, params={"budget": 400, "restarts": 2}),
    "haar": dict(dim=2, trials=2000),
}


def small_config(name, seed=0, **over):
    kw = dict(SMALL[name])
    kw.update(over)
    return ScenarioConfig(name=name, seed=seed, **kw)


def test_every_registered_scenario_runs_clean():
    for name in SCENARIOS:
        report = run_scenario(small_config(name))
        assert isinstance(report, Report)
        assert report.summary["failures"] == 0, (name, report.summary)
        assert report.records


def test_unknown_scenario():
    with pytest.raises(UnknownScenarioError):
        run_scenario(ScenarioConfig(name="nope"))


def test_invalid_config():
    with pytest.raises(InvalidConfigError):
        run_scenario(ScenarioConfig(name="bound-chain", trials=0))
    with pytest.raises(InvalidConfigError):
        run_scenario(ScenarioConfig(name="bound-chain", tol=0.0))
    with pytest.raises(InvalidConfigError):
        run_scenario(ScenarioConfig(name="bound-chain", units="decibans"))


def test_json_round_trip(tmp_path):
    report = run_scenario(small_config("saturation-classical"))
    path = tmp_path / "report.json"
    text = emit_report(report, fmt="json", path=path)
    parsed = json.loads(path.read_text())
    assert parsed == json.loads(text) == report.to_dict()
    assert set(parsed) == {"scenario", "config", "records", "summary",
                           "walltime_ms"}


def test_csv_row_count(tmp_path):
    report = run_scenario(small_config("bound-chain"))
    text = emit_report(report, fmt="csv")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    assert len(lines) == len(report.records) + 1


def test_csv_handles_heterogeneous_records():
    report = run_scenario(small_config("inefficient-violation"))
    text = emit_report(report, fmt="csv")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    assert len(lines) == len(report.records) + 1
    assert "target_dev" in lines[0]


def test_bits_conversion():
    cfg = small_config("bound-chain", units="bits")
    report = run_scenario(cfg)
    nats = report.records[0]["chi"]
    bits = report.to_dict()["records"][0]["chi"]
    assert abs(bits - nats / math.log(2)) <= 1e-15
    # non-information fields are untouched
    assert report.to_dict()["records"][0]["n_states"] == report.records[0]["n_states"]


def test_reports_are_deterministic():
    for name in ("bound-chain", "uniform-theorem", "two-state-accinfo"):
        r1 = run_scenario(small_config(name, seed=3))
        r2 = run_scenario(small_config(name, seed=3))
        d1, d2 = r1.to_dict(), r2.to_dict()
        d1.pop("walltime_ms"), d2.pop("walltime_ms")
        assert json.dumps(d1, sort_keys=True) == json.dumps(d2, sort_keys=True)


def test_inefficient_violation_content():
    report = run_scenario(small_config("inefficient-violation"))
    assert report.summary["violations"] >= 1
    grouped = [r for r in report.records if r["kind"] == "grouped-x"]
    assert len(grouped) == 1
    assert abs(grouped[0]["info_f"] + 0.130812) <= 1e-6
    assert abs(grouped[0]["info_i"]) <= 1e-12


def test_cli_verify_stdout(capsys):
    code = main(["verify", "--dim", "2", "--trials", "3", "--seed", "1"])
    out = capsys.readouterr().out
    assert code == 0
    parsed = json.loads(out)
    assert parsed["scenario"] == "bound-chain"
    assert parsed["summary"]["failures"] == 0


def test_cli_scenario_to_file(tmp_path, capsys):
    out_path = tmp_path / "r.json"
    code = main(["scenario", "saturation-classical", "--dim", "3",
                 "--trials", "4", "--seed", "2", "--out", str(out_path)])
    assert code == 0
    parsed = json.loads(out_path.read_text())
    assert parsed["scenario"] == "saturation-classical"
    capsys.readouterr()


def test_cli_scenario_param_passthrough(capsys):
    code = main(["scenario", "inefficient-violation", "--trials", "1",
                 "--param", "grid=11"])
    parsed = json.loads(capsys.readouterr().out)
    assert code == 0
    assert parsed["config"]["params"]["grid"] == 11
    sweep = [r for r in parsed["records"] if r["kind"] == "sweep"]
    assert len(sweep) == 11


def test_cli_unknown_scenario(capsys):
    code = main(["scenario", "bogus"])
    assert code == 2
    assert "unknown scenario" in capsys.readouterr().err


def test_cli_optimize_with_ensemble_file(tmp_path, capsys):
    from qbound.qobjects import Ensemble, ensemble_to_json, pure_state
    ens = Ensemble([0.5, 0.5], [pure_state([1, 0]), pure_state([0, 1])])
    path = tmp_path / "ens.json"
    path.write_text(json.dumps(ensemble_to_json(ens)))
    code = main(["optimize", "--ensemble", str(path), "--budget", "2000",
                 "--restarts", "2", "--seed", "3"])
    parsed = json.loads(capsys.readouterr().out)
    assert code == 0
    rec = parsed["records"][0]
    assert rec["opt_value"] >= math.log(2) - 1e-3
    assert rec["opt_value"] <= rec["chi"] + 1e-8


def test_cli_haar_and_units(capsys):
    code = main(["haar", "--dim", "2", "--trials", "2000", "--seed", "4",
                 "--units", "bits", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[0].startswith("trials")
