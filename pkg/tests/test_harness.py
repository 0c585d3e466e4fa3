import json

import pytest

from cubicdom.generators import CorpusSpec
from cubicdom.harness import properties
from cubicdom.harness.cli import main
from cubicdom.harness.findings import Finding, ResultCache, RunConfig, read_findings
from cubicdom.harness.report import ReplayError, build_report, report_from_cache, verify_finding
from cubicdom.harness.sweep import run_sweep

SMALL = (CorpusSpec("exhaustive", n_min=4, n_max=10),)
C4_INJECTION = {"x": [0, 2], "u_subset": [[0, 1], [1, 2]]}


def _c4_config():
    return RunConfig(corpus=(CorpusSpec("named", names=("c4",)),), properties=("fact_u_literal",),
                     fact_u_injection=C4_INJECTION)


def test_sweep_and_cache_rerun(tmp_path):
    cfg = RunConfig(corpus=SMALL, properties=("reed_bound", "theorem_2_1"))
    path = tmp_path / "cache.jsonl"
    first = run_sweep(cfg, ResultCache(path))
    assert len(first.findings) == 54 and first.graphs_evaluated == 27
    assert all(f.verdict == "Holds" for f in first.findings)
    assert first.exit_code == 0
    second = run_sweep(cfg, ResultCache(path))
    assert second.cache_hits == 54 and second.graphs_evaluated == 0
    assert [f.to_line() for f in second.findings] == [f.to_line() for f in first.findings]
    assert len(path.read_text().splitlines()) == 54


def test_config_hash():
    a = RunConfig(corpus=SMALL, properties=("reed_bound", "theorem_2_1"))
    b = RunConfig(corpus=SMALL, properties=("theorem_2_1", "reed_bound"), workers=4)
    c = RunConfig(corpus=SMALL, properties=("reed_bound",))
    assert a.config_hash() == b.config_hash() != c.config_hash()
    assert RunConfig.from_json(json.loads(json.dumps(a.to_json()))) == a
    with pytest.raises(ValueError):
        RunConfig(corpus=SMALL, properties=("nonsense",))


def test_c4_injection_violated_and_replays():
    res = run_sweep(_c4_config())
    (f,) = res.findings
    assert f.verdict == "Violated" and f.certificates["undominated"] == [1]
    verify_finding(f)
    assert res.exit_code == 0  # the literal U-deletion probe is non-blocking


def test_verify_finding_catches_tampering():
    (f,) = run_sweep(_c4_config()).findings
    bad = Finding(f.graph_key, f.property_id, f.verdict,
                  {**f.certificates, "undominated": [0]}, f.solver_stats, f.config_hash)
    with pytest.raises(ReplayError):
        verify_finding(bad)
    wrong_key = Finding("C~", f.property_id, f.verdict, f.certificates, {}, f.config_hash)
    with pytest.raises(ReplayError):
        verify_finding(wrong_key)


def test_findings_replay_for_every_property():
    cfg = RunConfig(corpus=(CorpusSpec("exhaustive", n_min=4, n_max=8),
                            CorpusSpec("named", names=("p5", "c4", "k13"))))
    for f in run_sweep(cfg).findings:
        verify_finding(f)


def test_report_tables(tmp_path):
    cfg = RunConfig(corpus=SMALL, properties=("reed_bound", "theorem_2_1"))
    path = tmp_path / "c.jsonl"
    run_sweep(cfg, ResultCache(path))
    files, errors = report_from_cache(path, tmp_path / "out")
    assert errors == []
    assert len(files["graphs.csv"].splitlines()) == 27 + 1
    assert (tmp_path / "out" / "report.md").read_text() == files["report.md"]
    assert files == report_from_cache(path)[0]


def test_report_empty_and_violations(tmp_path):
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    files, errors = report_from_cache(empty)
    assert errors == [] and len(files["graphs.csv"].splitlines()) == 1
    md = build_report(run_sweep(_c4_config()).findings)["report.md"]
    assert "## Violated findings (1)" in md and "fact_u_literal" in md


def test_corrupt_cache_lines_reported(tmp_path):
    path = tmp_path / "c.jsonl"
    run_sweep(_c4_config(), ResultCache(path))
    with open(path, "a") as fh:
        fh.write("{not json\n")
    findings, errors = read_findings(path)
    assert len(findings) == 1 and errors[0][0] == 2
    assert "line 2" in report_from_cache(path)[0]["report.md"]


def test_last_writer_wins(tmp_path):
    path = tmp_path / "c.jsonl"
    f = Finding("C~", "reed_bound", "Holds", {}, {}, "h")
    g = Finding("C~", "reed_bound", "Violated", {}, {}, "h")
    ResultCache(path).append([f])
    ResultCache(path).append([g])
    assert ResultCache(path).get(f.key).verdict == "Violated"


def test_budget_exhaustion_is_recorded():
    cfg = RunConfig(corpus=(CorpusSpec("random", n=40, count=1, seed=1),),
                    properties=("reed_bound",), node_limit=3)
    res = run_sweep(cfg)
    assert res.budget_errors == 1 and res.exit_code == 3
    assert res.findings[0].verdict == "NotApplicable"


def test_blocking_violation_exit_code(monkeypatch):
    monkeypatch.setitem(properties.CHECKS, "peel_safety", lambda ctx: ("Violated", {}))
    res = run_sweep(RunConfig(corpus=(CorpusSpec("named", names=("k4",)),),
                              properties=("peel_safety",)))
    assert res.exit_code == 1


# ------------------------------------------------------------------ CLI

def test_cli_solve_json(capsys):
    assert main(["solve", "petersen", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert (out["gamma"]["size"], out["i"]["size"], out["bound"]) == (3, 3, 4)


def test_cli_solve_text_and_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("E{Sw\n"))
    assert main(["solve", "k33", "--input", "-"]) == 0
    out = capsys.readouterr().out
    assert "gamma=2 i=3 bound=2" in out


def test_cli_usage_errors(capsys):
    assert main(["solve", "C"]) == 2
    assert main(["solve"]) == 2
    assert main(["check", "lemma", "c6", "--x", "0"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_cli_budget_exit(capsys):
    assert main(["sweep", "--mode", "random", "--n", "40", "--count", "1", "--seed", "1",
                 "--properties", "reed_bound", "--budget-nodes", "3"]) == 3


def test_cli_check_kinds(capsys):
    assert main(["check", "claim", "k4", "--x", "0", "--peel-policy", "any"]) == 0
    assert "Claim-holds" in capsys.readouterr().out
    assert main(["check", "independentize", "p4", "--x", "1,2", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["vertices"] == [0, 2]
    assert main(["check", "lemma", "p4", "--x", "1,2"]) == 0
    assert "NotApplicable" in capsys.readouterr().out
    assert main(["check", "fact-u", "c4", "--x", "0,2", "--u", "0-1,1-2"]) == 0
    assert capsys.readouterr().out.startswith("Violated")
    for kind in ("fact-t-dom", "theorem", "peel"):
        assert main(["check", kind, "petersen"]) == 0
    assert main(["check", "fact-t-dset", "p5", "--x", "1,4", "--s", "2"]) == 0
    assert main(["check", "reduce", "c6", "--x", "0,3", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out.splitlines()[-1])["y"] == [1]


def test_cli_gen_and_report(tmp_path, capsys):
    assert main(["gen", "--mode", "exhaustive", "--n", "8"]) == 0
    assert len(capsys.readouterr().out.split()) == 5
    cache = tmp_path / "c.jsonl"
    out = tmp_path / "f.jsonl"
    assert main(["sweep", "--mode", "named", "--names", "c4", "--properties", "fact_u_literal",
                 "--inject-x", "0,2", "--inject-u", "0-1,1-2", "--cache", str(cache),
                 "--output", str(out)]) == 0
    assert out.read_text() == cache.read_text()
    capsys.readouterr()
    assert main(["report", str(cache)]) == 0
    assert "Violated findings (1)" in capsys.readouterr().out
    assert main(["report", str(tmp_path / "missing.jsonl")]) == 2
