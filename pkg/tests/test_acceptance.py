"""Acceptance criteria, one test per criterion, exact tolerances.

Each test prints one `criterion N (<name>): PASS` line (visible with -s or
in the captured output); the assertions pin the stated values exactly.
"""

import json

import pytest

from grumod import props
from grumod.cli import main


@pytest.fixture(scope="module")
def suite_results():
    return {s["suite"]: s for s in props.run_paper_suite(seed=42)}


def _done(n, name):
    print(f"criterion {n} ({name}): PASS")


def test_criterion_01_subset_monoid(suite_results):
    s = suite_results["subset-monoid"]
    d = s["details"]
    for g in ("pair(2)", "pair(3)"):
        assert d[g]["associative"] is True
        assert d[g]["neutral"] is True
        assert d[g]["invertibility_criterion"] is True
        assert d[g]["sigma_sets_invertible"] is True
        assert d[g]["library_table_agree"] is True
    assert d["pair(2)"]["subsets"] == 15
    assert d["pair(3)"]["subsets"] == 511
    # the 2^16 - 1 subset count is exercised on the 16-element pair groupoid
    assert d["pair(4)"]["subsets_checked"] == 65535
    assert d["pair(4)"]["criterion_vs_inverse_product"] is True
    assert s["passed"]
    _done(1, "subset-monoid")


def test_criterion_02_groupoid_algebra(suite_results):
    s = suite_results["groupoid-algebra"]
    d = s["details"]
    assert d["total_dim"] == 4
    assert d["matrix_unit_relations"] is True
    assert d["object_unital"] is True
    assert d["unit_count"] == 2
    assert d["unital"] is True
    assert d["identity_is_sum_of_local_units"] is True
    assert s["passed"]
    _done(2, "groupoid-algebra")


def test_criterion_03_suspension(suite_results):
    s = suite_results["suspension"]
    d = s["details"]
    assert d["subset_pairs_checked"] == 225  # all non-empty subset pairs
    assert d["modules"] == ["regular", "col1", "col2"]
    assert d["functor_composition"] is True
    assert d["principal_ideal_law"] is True
    assert d["cyclic_law"] is True
    assert s["passed"]
    _done(3, "suspension")


def test_criterion_04_hom(suite_results):
    s = suite_results["hom"]
    d = s["details"]
    assert d["s0"]["graded_dim"] == 2
    assert d["s0"]["hom_dim"] == 4
    assert d["s0"]["strict"] is True
    assert d["s0"]["swap_is_hom_not_HOM"] is True
    assert d["pair2_end"] == {"graded_dim": 4, "hom_dim": 4}
    for name in ("regular", "col1", "col2"):
        assert d[f"eta_{name}"]["iso"] is True
    for name in ("regular", "col1", "col2"):
        assert d[f"left_exact_Q={name}"]["injective"] is True
        assert d[f"left_exact_Q={name}"]["exact_middle"] is True
    assert d["direct_sum_law"] is True
    assert d["graded_factorization"] is True
    assert d["adjunction"]["iso"] is True
    assert s["passed"]
    _done(4, "hom")


def test_criterion_05_freeness(suite_results):
    s = suite_results["freeness"]
    d = s["details"]
    assert d["free_verdict"] == "yes"
    assert d["free_multiset"] == ["(1,2)"]
    assert d["basis_verdict"] == "no"
    assert len(d["nonzero_annihilator_dims"]) == 3
    assert all(dim > 0 for dim in d["nonzero_annihilator_dims"])
    assert d["regular_free"] == "yes"
    assert d["zero_module_basis"] == "yes"
    assert s["passed"]
    _done(5, "freeness")


def test_criterion_06_projectivity(suite_results):
    s = suite_results["projectivity"]
    d = s["details"]
    assert d["modules_checked"] >= 8
    for key, entry in d.items():
        if isinstance(entry, dict) and "graded_eq_ungraded" in entry:
            assert entry["graded_eq_ungraded"] is True, key
            if entry["free"] == "yes":
                assert entry["projective"] == "yes", key
    assert d["Ke12_certificate"]["projective"] == "yes"
    assert d["Ke12_certificate"]["free_multiset"] == ["(2,1)"]
    assert s["passed"]
    _done(6, "projectivity")


def test_criterion_07_injectivity(suite_results):
    s = suite_results["injectivity"]
    d = s["details"]
    battery_keys = [k for k in d if k.startswith("pair2/")]
    assert len(battery_keys) >= 6
    assert all(d[k] == "yes" for k in battery_keys)
    assert d["t2/Ke12"]["verdict"] == "no"
    assert d["t2/Ke12"]["counterexample_ideal"] == {"(1,2)": [["1"]]}
    assert s["passed"]
    _done(7, "injectivity")


def test_criterion_08_semisimplicity(suite_results):
    s = suite_results["semisimplicity"]
    d = s["details"]
    assert d["pair2_regular"]["verdict"] == "yes"
    assert d["pair2_regular"]["factors"] == 2
    assert d["pair2_regular"]["factor_degrees"] == [
        ["(1,1)", "(2,1)"],
        ["(1,2)", "(2,2)"],
    ]
    assert d["t2_regular"]["verdict"] == "no"
    assert d["t2_regular"]["witness"] is not None
    assert d["t2_regular"]["Ke12_is_summand"] == "no"
    assert d["z2_regular"]["graded_semisimple"] == "yes"
    assert d["z2_regular"]["ungraded_not_semisimple"] is True
    for label in ("pair2", "t2", "z2"):
        assert d["five_way"][label]["consistent"] is True, label
    assert s["passed"]
    _done(8, "semisimplicity")


def test_criterion_09_splitting(suite_results):
    s = suite_results["splitting"]
    d = s["details"]
    assert d["count"] == 20
    fields = {json.dumps(e["field"], sort_keys=True) for e in d["sequences"]}
    assert len(fields) == 2  # GF(2) and GF(3)
    assert all(e["agree"] for e in d["sequences"])
    assert s["passed"]
    _done(9, "splitting")


def test_criterion_10_determinism(capsys):
    code1 = main(["props", "--suite", "paper", "--seed", "42"])
    out1 = capsys.readouterr().out
    code2 = main(["props", "--suite", "paper", "--seed", "42"])
    out2 = capsys.readouterr().out
    assert code1 == 0 and code2 == 0
    assert out1 == out2  # byte-identical reports
    _done(10, "determinism")


def test_meta_suite_registry_matches_criteria():
    """Every suite must be pinned to an acceptance criterion; adding a suite
    without an acceptance entry fails here."""
    expected = (
        "subset-monoid",
        "groupoid-algebra",
        "suspension",
        "hom",
        "freeness",
        "projectivity",
        "injectivity",
        "semisimplicity",
        "splitting",
    )
    assert props.SUITE_NAMES == expected
