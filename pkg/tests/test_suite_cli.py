"""End-to-end checks of the verification suite and the command line."""

import json

import pytest

from reflect_gkm.cli import main
from reflect_gkm.suite import (
    NotReflectionGenerated,
    VerificationReport,
    run_suite,
)

MINUS_IDENTITY = {
    "name": "center2",
    "dimension": 2,
    "conductor": 1,
    "variables": ["x1", "x2"],
    "generators": [["-1", "0", "0", "-1"]],
}


# ---------------------------------------------------------------------------
# run_suite


def test_z2_dimension_rows():
    report = run_suite("z2", dmax=4, trials=2, seed=0)
    assert [(r.predicted, r.image, r.nullspace) for r in report.rows] == [
        (1, 1, 1),
        (2, 2, 2),
        (2, 2, 2),
        (2, 2, 2),
        (2, 2, 2),
    ]
    assert report.ok


def test_s3_dimension_rows():
    report = run_suite("s3", dmax=4, trials=2, seed=0, sections=("theorem",))
    assert [r.predicted for r in report.rows] == [1, 4, 9, 15, 21]
    assert all(r.ok for r in report.rows)


def test_report_byte_identical_across_runs():
    a = run_suite("z3", dmax=3, trials=4, seed=11)
    b = run_suite("z3", dmax=3, trials=4, seed=11)
    assert a.to_json() == b.to_json()
    # a different seed really does change the sampled data, not the verdict
    c = run_suite("z3", dmax=3, trials=4, seed=12)
    assert c.ok and c.to_json() != ""


def test_report_json_round_trip():
    report = run_suite("z3", dmax=3, trials=2, seed=0, naive_control=True)
    blob = report.to_json()
    back = VerificationReport.from_json_dict(json.loads(blob))
    assert back == report
    assert back.to_json() == blob
    assert back.timings == {}


def test_thread_count_does_not_change_report(monkeypatch):
    base = run_suite("z3", dmax=4, trials=2, seed=5, sections=("theorem",))
    monkeypatch.setenv("REFLECT_GKM_THREADS", "3")
    threaded = run_suite("z3", dmax=4, trials=2, seed=5, sections=("theorem",))
    assert threaded.to_json() == base.to_json()


def test_naive_control_differs_for_order_three():
    report = run_suite("z3", dmax=3, trials=2, seed=0, naive_control=True,
                       sections=("lemmas",))
    control = report.control
    assert control.pairwise[1] == 3
    assert control.membership[1] == 2
    assert not control.agrees and not control.all_order_two
    assert control.ok and report.ok


def test_naive_control_agrees_for_order_two():
    report = run_suite("z2", dmax=3, trials=2, seed=0, naive_control=True,
                       sections=("lemmas",))
    control = report.control
    assert control.agrees and control.all_order_two and control.ok


def test_refuses_group_not_generated_by_reflections(tmp_path):
    path = tmp_path / "center2.json"
    path.write_text(json.dumps(MINUS_IDENTITY))
    with pytest.raises(NotReflectionGenerated):
        run_suite(str(path), dmax=2, trials=1)


def test_lemma_sections_pass_everywhere_small():
    for name in ("z2", "z3", "z4"):
        report = run_suite(name, dmax=3, trials=2, seed=3)
        assert report.ok, report.text()
        assert {r.name for r in report.lemmas} == {
            "constant_maps",
            "action_closure",
            "orbit_decomposition",
            "leibniz",
            "localization_commutes",
            "operator_closure",
        }
        assert report.hypergraph is not None and report.hypergraph.ok


# ---------------------------------------------------------------------------
# command line


def test_cli_verify_theorem_passes(capsys):
    code = main(["verify", "theorem", "--group", "z2", "--trials", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "overall: PASS" in out
    assert "1" in out and "2" in out


def test_cli_verify_lemmas_naive_control(capsys):
    code = main([
        "verify", "lemmas", "--group", "z3",
        "--trials", "2", "--max-degree", "3", "--naive-control",
    ])
    out = capsys.readouterr().out
    assert code == 0
    assert "differ" in out
    assert "[1, 3, 3, 3]" in out and "[1, 2, 3, 3]" in out


def test_cli_json_report_to_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main([
        "verify", "theorem", "--group", "z2",
        "--trials", "2", "--json", str(target),
    ])
    capsys.readouterr()
    assert code == 0
    data = json.loads(target.read_text())
    assert data["pass"] is True
    assert [r["predicted"] for r in data["theorem"]["rows"]] == [1, 2, 2, 2, 2]


def test_cli_json_report_to_stdout(capsys):
    code = main(["verify", "theorem", "--group", "z2", "--trials", "2", "--json"])
    out = capsys.readouterr().out
    assert code == 0
    data = json.loads(out)
    assert data["group"] == "z2" and data["pass"] is True


def test_cli_member_exit_codes(tmp_path, capsys):
    import random

    from reflect_gkm.equivariant import dump_group_map
    from reflect_gkm.groups import load_group
    from reflect_gkm.sampling import random_member, random_nonmember

    g = load_group("z3")
    rng = random.Random(2)
    good = tmp_path / "good.json"
    bad = tmp_path / "bad.json"
    good.write_text(json.dumps(dump_group_map(random_member(rng, g))))
    bad.write_text(json.dumps(dump_group_map(random_nonmember(rng, g))))

    assert main(["member", "--group", "z3", "--input", str(good)]) == 0
    assert "member" in capsys.readouterr().out
    assert main(["member", "--group", "z3", "--input", str(bad)]) == 1
    assert "NOT a member" in capsys.readouterr().out
    assert main(["hypergraph", "member", "--group", "z3", "--input", str(good)]) == 0
    capsys.readouterr()


def test_cli_usage_errors(capsys):
    assert main(["verify", "theorem", "--group", "nosuch"]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["member", "--group", "z2", "--input", "/nonexistent.json"]) == 2
    capsys.readouterr()


def test_cli_refusal_without_force(tmp_path, capsys):
    path = tmp_path / "center2.json"
    path.write_text(json.dumps(MINUS_IDENTITY))
    code = main(["verify", "theorem", "--group", str(path), "--trials", "1"])
    err = capsys.readouterr().err
    assert code == 2
    assert "not generated by pseudo-reflections" in err


def test_cli_hypergraph_export(tmp_path, capsys):
    dot = tmp_path / "g.dot"
    assert main([
        "hypergraph", "export", "--group", "z4", "--format", "dot",
        "--out", str(dot),
    ]) == 0
    capsys.readouterr()
    assert dot.read_text().startswith("graph")

    assert main(["hypergraph", "export", "--group", "z3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["group"] == "z3" and len(data["edges"]) == 1


def test_cli_group_info_json(capsys):
    assert main(["group", "info", "--group", "g312", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["order"] == 18
    assert data["reflections"] == 7
    assert data["degrees"] == [3, 6]


def test_cli_molien_text(capsys):
    assert main(["molien", "--group", "z3"]) == 0
    out = capsys.readouterr().out
    assert "0:1" in out and "3:1" in out and "1:0" in out
