from __future__ import annotations

import json
import math
import subprocess
import sys

import pytest

from spexlab.families import FamilyError, FamilySpec
from spexlab.oracles import EnumerationCapError
from spexlab.graphs import build_atlas, join
from spexlab.graphs.atlas import complete, cycle, empty, matching
from spexlab.workbench import (
    ScenarioError,
    load_scenario,
    parse_n_range,
    parse_scenario,
    resolve_family,
    scenario_csv,
    scenario_paths,
    stability_probe,
    substitute,
    verify_scenario,
)
from spexlab.workbench.cli import main
from spexlab.workbench.scenario import OracleAssertionError


def K(*p):
    return build_atlas("K", p)


# -- scenario format ---------------------------------------------------------

def test_substitute():
    assert substitute("K:2,{n-2}", 9) == "K:2,7"
    assert substitute("WHM(n={n},r=2,s=1)", 6) == "WHM(n=6,r=2,s=1)"
    assert substitute("M:{(n-1)//2}", 8) == "M:3"
    for bad in ["{__import__('os')}", "{n**2}", "{m}", "{n-}"]:
        with pytest.raises(ScenarioError):
            substitute(bad, 5)


def test_n_range():
    assert parse_n_range("6..9") == (6, 7, 8, 9)
    assert parse_n_range("9, 5,7") == (5, 7, 9)
    for bad in ["9..6", "a..b", "", "1,,x"]:
        with pytest.raises(ScenarioError):
            parse_n_range(bad)


def test_parse_inline_family():
    s = parse_scenario("name: t\nfamily.member: M:2\nfamily.member: K:3\nobjective: spex\nn_range: 5..6\n"
                       "expected: S:{n}\n")
    assert s.family == FamilySpec.of([matching(2), complete(3)])
    assert [g.num_edges for g in s.expected_graphs(6)] == [5]


def test_parse_errors():
    base = "family: m2k3\nn_range: 5..6\nexpected: S:{n}\n"
    with pytest.raises(ScenarioError):
        parse_scenario(base + "objective: area\n")
    with pytest.raises(ScenarioError):
        parse_scenario("family: m2k3\nobjective: spex\nexpected: S:{n}\n")
    with pytest.raises(ScenarioError):
        parse_scenario("family: nosuchfamily\nobjective: spex\nn_range: 5\nexpected: S:{n}\n")
    with pytest.raises(ScenarioError):
        parse_scenario(base + "objective: spex\ncolour: blue\n")


def test_resolve_family(tmp_path):
    assert resolve_family("m3k3") == resolve_family("m3k3.fam")
    (tmp_path / "mine.fam").write_text("member: C:4\n")
    assert resolve_family("mine.fam", base=tmp_path) == FamilySpec.of([cycle(4)])


def test_shipped_scenarios_present():
    names = [p.stem for p in scenario_paths()]
    assert names == ["a1-m3k3", "a3-k4p6", "a4-c5k4", "friendship-c4", "whm-m2k3"]


def test_verify_whm_agrees_and_is_deterministic():
    s = load_scenario("whm-m2k3")
    a = verify_scenario(s, workers=1)
    b = verify_scenario(s, workers=2)
    assert all(r.verdict == "AGREE" for r in a.rows)
    assert a.frontier == 6
    assert scenario_csv(a) == scenario_csv(b)
    assert scenario_csv(a).splitlines()[1].startswith("6,lambda,2.236067977500,AGREE,E?Bw,E?Bw,")


def test_verify_records_difference_without_failing():
    s = parse_scenario("name: wrong\nfamily: m2k3\nobjective: spex\nn_range: 5..6\nexpected: K:1,{n-2}\n")
    with pytest.raises(ScenarioError):
        verify_scenario(s)  # wrong order is a malformed scenario
    s = parse_scenario("name: wrong\nfamily: c4\nobjective: ex\nn_range: 5..6\nexpected: S:{n}\n")
    v = verify_scenario(s)
    assert [r.verdict for r in v.rows] == ["DIFFER", "DIFFER"] and v.frontier is None


def test_verify_rejects_non_free_expectation():
    s = parse_scenario("name: bad\nfamily: c4\nobjective: spex\nn_range: 5\nexpected: K:{n}\n")
    with pytest.raises(OracleAssertionError):
        verify_scenario(s)


def test_verify_caps():
    s = parse_scenario("name: big\nfamily: c4\nobjective: spex\nn_range: 8..10\nexpected: Fr:{(n-1)//2}\n")
    with pytest.raises(EnumerationCapError):
        verify_scenario(s)
    with pytest.raises(ScenarioError):
        verify_scenario(load_scenario("whm-m2k3"), max_n=7)


# -- probe -------------------------------------------------------------------

def test_probe_examples():
    c5k4 = FamilySpec.of([complete(4)], cycles_at_least=5)
    r = stability_probe(join(complete(2), empty(6)), c5k4)
    assert list(r.core_set) == [0, 1] and r.t == 6
    assert r.min_core_entry == pytest.approx(1.0) and r.max_noncore_entry == pytest.approx(0.5)
    assert r.lam == pytest.approx(4)
    m3k3 = FamilySpec.of([matching(3), complete(3)])
    r = stability_probe(K(2, 7), m3k3)
    assert r.t == 7 and r.max_noncore_entry == pytest.approx(2 / math.sqrt(14))
    r = stability_probe(empty(8), m3k3)
    assert r.lam == 0 and "no edges" in r.flags
    r = stability_probe(complete(4), m3k3)
    assert "graph is not F-free" in r.flags
    with pytest.raises(FamilyError):
        stability_probe(complete(4), FamilySpec.of([complete(3)]))


# -- CLI ---------------------------------------------------------------------

def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_atlas_stats_beta(tmp_path, capsys):
    assert run(capsys, "atlas", "K", "3", "--out", str(tmp_path))[:2] == (0, "Bw\n")
    code, out, _ = run(capsys, "atlas", "--recipe", "join(K:2,union(K:2,I:3))", "--dot", "g.dot", "--out", str(tmp_path))
    assert code == 0 and (tmp_path / "g.dot").read_text().startswith("graph")
    code, out, _ = run(capsys, "stats", "C:7", "--out", str(tmp_path))
    assert "circumference 7" in out and "bipartition absent" in out
    code, out, _ = run(capsys, "beta", "C:5", "--out", str(tmp_path))
    assert out.strip() == "beta=3 beta'=inf"


def test_cli_derive(tmp_path, capsys):
    code, out, _ = run(capsys, "derive", "--family", "m3k3", "-n", "9", "--out", str(tmp_path))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "β=2, β′=3" and lines[1] == "M={A_}, H={A_}"
    assert lines[2] == "G0(n=9)={H???F~}}"  # K_{2,7}


def test_cli_spex_and_csv(tmp_path, capsys):
    code, out, _ = run(capsys, "spex", "-n", "6", "--family", "m2k3", "--out", str(tmp_path), "--threads", "1")
    assert code == 0
    assert "lambda=2.236067977500" in out and "witnesses: E?Bw" in out
    csv = (tmp_path / "spex_m2k3_6.csv").read_text().splitlines()
    assert csv[0] == "n,objective,value,witnesses,scanned,seconds"
    assert csv[1].startswith("6,lambda,2.236067977500,E?Bw,")


def test_cli_exh_slope_blockpair(tmp_path, capsys):
    code, out, _ = run(capsys, "exh", "-n", "8", "--family", "c5k4", "--cross-check", "--out", str(tmp_path))
    assert code == 0 and "ex_H=13" in out and "MISMATCH" not in out
    code, out, _ = run(capsys, "slope", "--family", "c4", "--n-range", "7..11", "--out", str(tmp_path))
    assert code == 0 and "r = 1/2" in out
    code, out, _ = run(capsys, "blockpair", "-t", "2", "--family", "c5k4", "--out", str(tmp_path))
    assert out.strip() == "p=2 q=2"


def test_cli_probe_bounds(tmp_path, capsys):
    code, out, _ = run(capsys, "probe", "--graph", "join(K:2,I:6)", "--family", "c5k4", "--out", str(tmp_path))
    assert code == 0 and "t 6" in out and "max_noncore_entry 0.500000000000" in out
    code, out, _ = run(capsys, "bounds", "-n", "7", "--out", str(tmp_path))
    assert code == 0 and out.strip().endswith("0 violations")


def test_cli_exit_codes(tmp_path, capsys):
    assert run(capsys, "ex", "-n", "11", "--family", "c4", "--out", str(tmp_path))[0] == 2
    assert run(capsys, "ex", "-n", "5", "--family", "nosuch", "--out", str(tmp_path))[0] == 2
    assert run(capsys, "stats", "join(", "--out", str(tmp_path))[0] == 2
    assert run(capsys, "derive", "--family", "c4", "--out", str(tmp_path))[0] == 0
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    bad = tmp_path / "bad.scn"
    bad.write_text("name: bad\nfamily: c4\nobjective: spex\nn_range: 5\nexpected: K:{n}\n")
    assert run(capsys, "verify", str(bad), "--out", str(tmp_path))[0] == 1
    differ = tmp_path / "differ.scn"
    differ.write_text("name: differ\nfamily: c4\nobjective: ex\nn_range: 5\nexpected: S:{n}\n")
    assert run(capsys, "verify", str(differ), "--out", str(tmp_path))[0] == 0
    assert run(capsys, "verify", str(differ), "--strict", "--out", str(tmp_path))[0] == 1


def test_cli_verify_manifest(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "friendship-c4", "--out", str(tmp_path), "--threads", "2")
    assert code == 0 and "friendship-c4: frontier" in out
    man = json.loads((tmp_path / "friendship-c4.manifest.json").read_text())
    assert man["family_sha256"] == resolve_family("c4").digest()
    assert set(man["verdicts"].values()) == {"AGREE"}


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "spexlab", "atlas", "C", "4", "--out", str(tmp_path)],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "Cl"
