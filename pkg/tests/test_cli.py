"""Workspace JSON round trips and the CLI surface with its exit codes."""

import json
import os

import pytest

from grumod.cli import main, parse_subset_literal
from grumod.workspace import (
    DanglingReference,
    SchemaError,
    parse_file,
    parse_workspace,
)

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name)


def load_fixture(name):
    with open(fixture_path(name)) as fh:
        return json.load(fh)


@pytest.mark.parametrize("name", ["pair2_qq.json", "t2_gf2.json", "s0_gf2.json"])
def test_round_trip(name):
    doc = load_fixture(name)
    ws = parse_workspace(doc)
    again = parse_workspace(json.loads(ws.serialize().decode()))
    assert again.serialize() == ws.serialize()
    assert again.content_hash() == ws.content_hash()


def test_bad_version():
    doc = load_fixture("s0_gf2.json")
    doc["format_version"] = 2
    with pytest.raises(SchemaError):
        parse_workspace(doc)


def test_dangling_ring_reference():
    doc = load_fixture("s0_gf2.json")
    doc["modules"]["N"]["ring"] = "X"
    with pytest.raises(DanglingReference):
        parse_workspace(doc)


def test_bad_scalar():
    doc = load_fixture("pair2_qq.json")
    doc["rings"]["R"]["mult"][0]["out"]["(1,1)"]["0"] = "not-a-number"
    with pytest.raises(SchemaError):
        parse_workspace(doc)


def test_schema_error_names_path():
    doc = load_fixture("pair2_qq.json")
    doc["rings"]["R"]["components"]["(1,1)"] = {"basis": ["x"]}
    with pytest.raises(SchemaError) as err:
        parse_workspace(doc)
    assert "$.rings.R.components" in str(err.value)


def test_find_target():
    ws = parse_file(fixture_path("pair2_qq.json"))
    kind, _ = ws.find_target("R")
    assert kind == "ring"
    kind, _ = ws.find_target("col1")
    assert kind == "module"
    with pytest.raises(DanglingReference):
        ws.find_target("missing")


def test_parse_subset_literal():
    assert parse_subset_literal("{(1,2)}") == ["(1,2)"]
    assert parse_subset_literal("{(1,2),(2,1)}") == ["(1,2)", "(2,1)"]
    assert parse_subset_literal("{g0, g1}") == ["g0", "g1"]


# -- CLI end to end -------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_cli_validate(capsys):
    code, report = run_cli(capsys, "validate", fixture_path("pair2_qq.json"))
    assert code == 0
    assert report["counts"]["rings"] == 1
    assert report["counts"]["sequences"] == 1


def test_cli_validate_missing_file(capsys):
    code, report = run_cli(capsys, "validate", "/nonexistent.json")
    assert code == 2
    assert report["error"] == "FileNotFoundError"


def test_cli_analyze_ring(capsys):
    code, report = run_cli(
        capsys,
        "analyze",
        fixture_path("pair2_qq.json"),
        "--target",
        "R",
        "--checks",
        "object-unital,unital,support",
    )
    assert code == 0
    verdicts = {r["property"]: r["verdict"] for r in report["results"]}
    assert verdicts == {
        "object-unital": "yes",
        "unital": "yes",
        "support-subgroupoid": "yes",
    }
    units = report["results"][0]["certificate"]["units"]
    assert set(units) == {"(1,1)", "(2,2)"}


def test_cli_analyze_module_negative_exit(capsys):
    code, report = run_cli(
        capsys,
        "analyze",
        fixture_path("t2_gf2.json"),
        "--target",
        "Ke12",
        "--checks",
        "injective",
    )
    assert code == 1
    assert report["results"][0]["verdict"] == "no"
    assert report["results"][0]["certificate"]["counterexample_ideal"] == {
        "(1,2)": [["1"]]
    }


def test_cli_analyze_unknown_check(capsys):
    code, report = run_cli(
        capsys,
        "analyze",
        fixture_path("t2_gf2.json"),
        "--target",
        "Ke12",
        "--checks",
        "bogus",
    )
    assert code == 2
    assert report["error"] == "UsageError"


def test_cli_hom(capsys):
    code, report = run_cli(
        capsys,
        "hom",
        fixture_path("s0_gf2.json"),
        "--from",
        "N",
        "--to",
        "N",
    )
    assert code == 0
    assert report["graded_dim"] == 2
    assert report["hom_dim"] == 4
    assert report["inclusion_strict"]
    code, report = run_cli(
        capsys,
        "hom",
        fixture_path("pair2_qq.json"),
        "--from",
        "M",
        "--to",
        "M",
        "--degree",
        "(2,2)",
    )
    assert code == 0
    assert report["dim"] == 1


def test_cli_suspend(capsys):
    code, report = run_cli(
        capsys,
        "suspend",
        fixture_path("pair2_qq.json"),
        "--target",
        "M",
        "--sigma",
        "(1,2)",
    )
    assert code == 0
    assert report["degree_dims"] == {"(1,1)": 1, "(2,1)": 1}


def test_cli_tensor(capsys):
    code, report = run_cli(
        capsys,
        "tensor",
        fixture_path("pair2_qq.json"),
        "--left",
        "M",
        "--right",
        "col1",
    )
    # the regular module fixture is one-sided; tensor needs a right module
    assert code == 2
    assert report["error"] == "SideMismatch"


def test_cli_star_exit_codes(capsys):
    code, report = run_cli(
        capsys,
        "star",
        fixture_path("pair2_qq.json"),
        "--sets",
        "{(1,2)}",
        "{(2,1)}",
    )
    assert code == 0
    assert report["product"] == ["(1,1)"]
    code, report = run_cli(
        capsys,
        "star",
        fixture_path("pair2_qq.json"),
        "--sets",
        "{(1,2)}",
        "{(1,2)}",
    )
    assert code == 1
    assert report["error"] == "EmptyProduct"


def test_cli_props_and_determinism(capsys):
    code1 = main(["props", "--suite", "paper", "--seed", "42", "--field", "gf2"])
    out1 = capsys.readouterr().out
    code2 = main(["props", "--suite", "paper", "--seed", "42", "--field", "gf2"])
    out2 = capsys.readouterr().out
    assert code1 == 0 and code2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert [s["suite"] for s in report["results"]] == list(
        __import__("grumod.props", fromlist=["SUITE_NAMES"]).SUITE_NAMES
    )


def test_cli_verify_cert_round_trip(tmp_path, capsys):
    code, report = run_cli(
        capsys,
        "analyze",
        fixture_path("t2_gf2.json"),
        "--target",
        "Ke12",
        "--checks",
        "free,projective,injective",
    )
    assert code == 1  # injectivity fails
    saved = tmp_path / "report.json"
    saved.write_text(json.dumps(report, sort_keys=True, indent=2))
    code, verdict = run_cli(capsys, "verify-cert", str(saved))
    assert code == 0
    assert verdict["verified"]
    assert verdict["certificates_valid"]
    # verify against the original workspace file as well
    code, verdict = run_cli(
        capsys, "verify-cert", str(saved), "--workspace", fixture_path("t2_gf2.json")
    )
    assert code == 0 and verdict["external_file_matches"]


def test_cli_verify_cert_detects_tampering(tmp_path, capsys):
    code, report = run_cli(
        capsys,
        "analyze",
        fixture_path("t2_gf2.json"),
        "--target",
        "Ke12",
        "--checks",
        "injective",
    )
    report["results"][0]["verdict"] = "yes"
    saved = tmp_path / "forged.json"
    saved.write_text(json.dumps(report, sort_keys=True, indent=2))
    code, verdict = run_cli(capsys, "verify-cert", str(saved))
    assert code == 1
    assert not verdict["verified"]


def test_cli_verify_cert_detects_mutated_workspace(tmp_path, capsys):
    code, report = run_cli(
        capsys,
        "analyze",
        fixture_path("t2_gf2.json"),
        "--target",
        "Ke12",
        "--checks",
        "injective",
    )
    # mutate the embedded workspace without updating the recorded hash
    report["input"]["workspace"]["rings"]["T2"]["components"]["(1,2)"]["basis"] = ["z"]
    saved = tmp_path / "mutated.json"
    saved.write_text(json.dumps(report, sort_keys=True, indent=2))
    code, verdict = run_cli(capsys, "verify-cert", str(saved))
    assert code == 1
    assert not verdict["hash_matches"]


def test_cli_figures(tmp_path, capsys):
    out = tmp_path / "figs"
    code = main(
        [
            "--figures",
            str(out),
            "analyze",
            fixture_path("pair2_qq.json"),
            "--target",
            "M",
            "--checks",
            "graded-unital,projective",
        ]
    )
    capsys.readouterr()
    assert code == 0
    names = sorted(p.name for p in out.iterdir())
    assert "analyze-verdicts.png" in names
    assert "analyze-verdicts.csv" in names
    assert "analyze-components.png" in names
    content = (out / "analyze-verdicts.csv").read_text().splitlines()
    assert content[0] == "check,verdict"


def test_cli_props_figures(tmp_path, capsys):
    out = tmp_path / "figs"
    code = main(["--figures", str(out), "props", "--seed", "42", "--field", "gf2"])
    capsys.readouterr()
    assert code == 0
    names = sorted(p.name for p in out.iterdir())
    assert names == ["props-suites.csv", "props-suites.png"]
