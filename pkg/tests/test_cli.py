import json
import time

import pytest

from riemann_susy import __version__, config
from riemann_susy.cli import Report, main
from riemann_susy.errors import RiemannSusyError


def documents(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


@pytest.fixture(autouse=True)
def restore_seed(monkeypatch):
    monkeypatch.setitem(config.config["sampling"], "seed", config.get_str("sampling", "seed"))


def test_config_keys():
    assert not config.config.has_option("reduction", "prolong_depth")
    assert config.get_int("reduction", "parameter_draws") == 3
    assert config.get_int("reduction", "relation_points") == 20
    assert config.get_int("sampling", "workers") == 1


def test_report_statuses():
    report = Report("unit", 42)
    report.run("b", lambda: {"status": "pass"})
    report.run("a", lambda: {"status": "fail", "witness": "w"}, erratum="printed entry")

    def broken():
        raise RiemannSusyError("boom")

    report.run("c", broken)
    report.run("d", lambda: {"status": "fail", "witness": "w"}, control=True)
    report.run("e", lambda: {"status": "pass"}, control=True)
    items = {item["id"]: item for item in report.items}
    assert items["a"]["status"] == "erratum"
    assert items["a"]["notes"] == ["printed entry"]
    assert items["c"]["status"] == "fail"
    assert items["c"]["witness"] == "boom"
    assert items["d"]["status"] == "pass"
    assert items["e"]["status"] == "fail"
    assert report.counts() == {"pass": 2, "fail": 2, "erratum": 1, "manual-review": 0, "skipped": 0}
    assert report.exit_code() == 1
    assert [item["id"] for item in report.sorted_items()] == ["a", "b", "c", "d", "e"]
    assert "timing" not in items["b"]


def test_summary_closes_the_output(capsys):
    assert main(["solutions", "--id", "as4"]) == 0
    docs = documents(capsys.readouterr().out)
    assert [d["id"] for d in docs[:-1]] == ["solution:as4"]
    summary = docs[-1]
    assert summary["kind"] == "summary"
    assert summary["suite"] == "solutions"
    assert summary["version"] == __version__
    assert summary["counts"]["pass"] == 1
    assert summary["status"] == "pass"


def test_printed_conservation_laws_fail(capsys):
    assert main(["conservation", "--kmax", "2", "--convention", "paper"]) == 1
    docs = documents(capsys.readouterr().out)
    assert [d["id"] for d in docs[:-1]] == ["conservation:paper:k01", "conservation:paper:k02"]
    assert docs[-1]["counts"]["fail"] == 2


def test_usage_errors():
    assert main(["bogus"]) == 2
    assert main(["hydro", "invert", "--point", "2.5"]) == 2
    assert main(["reduce", "--label", "L99"]) == 2


def test_hydro_invert(capsys):
    assert main(["hydro", "invert", "--point", "2.5,3.0", "--guess", "0.9,2.1"]) == 0
    item = documents(capsys.readouterr().out)[0]
    assert item["id"] == "hydro:invert"
    assert item["R"] == pytest.approx(1.0, abs=1e-10)
    assert item["S"] == pytest.approx(2.0, abs=1e-10)


def test_hydro_grid_csv(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("RIEMANN_SUSY_OUT", str(tmp_path))
    argv = ["hydro", "grid", "--grid", "2.5,2.6,3,2.9,3.0,2", "--csv", "grid.csv", "--out", "report.jsonl"]
    assert main(argv) == 0
    assert capsys.readouterr().out == ""
    assert (tmp_path / "grid.csv").read_text().startswith("x,t,R,S")
    docs = documents((tmp_path / "report.jsonl").read_text())
    assert docs[0]["converged"] == 6


def test_grid_help_mentions_flagged_nodes(capsys):
    assert main(["hydro", "--help"]) == 0
    text = " ".join(capsys.readouterr().out.split())
    assert "nodes without a real preimage are flagged as failed" in text


def test_runs_are_deterministic(capsys):
    outputs = []
    for _ in range(2):
        assert main(["hydro", "roundtrip", "--points", "50", "--seed", "7"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert documents(outputs[0])[-1]["seed"] == 7


def test_timing_is_optional(capsys):
    main(["conservation", "--kmax", "1", "--timing"])
    docs = documents(capsys.readouterr().out)
    assert "timing" in docs[0]
    assert "timing" in docs[-1]


def test_pretty_output(capsys):
    assert main(["conservation", "--kmax", "2", "--pretty"]) == 0
    out = capsys.readouterr().out
    assert "conservation:corrected:k02" in out
    assert "2 pass" in out


def test_catalog_subcommand(capsys):
    assert main(["catalog", "--format", "markdown"]) == 0
    assert "### solutions" in capsys.readouterr().out


@pytest.mark.slow
def test_tables_against_reference(capsys):
    assert main(["tables", "--reference", "paper"]) == 0
    docs = documents(capsys.readouterr().out)
    assert docs[-1]["counts"]["fail"] == 0


@pytest.mark.slow
def test_solution_suite_runtime(capsys):
    start = time.perf_counter()
    assert main(["solutions"]) == 0
    assert time.perf_counter() - start < 300
    docs = documents(capsys.readouterr().out)
    ids = [d["id"] for d in docs[:-1]]
    assert "relation:as6B" in ids
    assert {d["status"] for d in docs if d["id"] == "relation:as6B"} == {"erratum"}
