"""Structural decision procedures: splitting, summands, freeness, bases,
projectivity, injectivity, simplicity, semisimplicity, maximal submodules."""

from itertools import product

import pytest

from grumod.fields import GF2, QQ
from grumod.linalg import Matrix
from grumod.ring import groupoid_algebra
from grumod.groupoid import cyclic_group_groupoid
from grumod.module import (
    GradedSubmodule,
    direct_sum,
    annihilator,
    quotient,
    regular_module,
    submodule_generated,
    suspension,
    zero_module,
)
from grumod.hom import inclusion_map, quotient_map
from grumod.analysis import (
    EnumerationGate,
    InfiniteFieldNeedsIdealList,
    NotExact,
    ShortExactSequence,
    ZeroModule,
    enumerate_graded_left_ideals,
    enumerate_graded_submodules,
    free_by_suspension,
    has_homogeneous_basis,
    is_direct_summand,
    is_injective_baer,
    is_projective,
    is_semisimple,
    is_simple,
    maximal_graded_submodule,
    ring_semisimple_report,
    split_check,
)
from grumod.fixtures import (
    column_module,
    column_submodule,
    pair2_battery,
    pair_algebra,
    t2_arrow_module,
    t2_arrow_submodule,
    t2_battery,
    t2_ring,
    t2_top_submodule,
    z2_battery,
)


def make_ses(module, sub):
    sub_mod = sub.to_module()
    incl = inclusion_map(sub, sub_mod)
    quot, proj = quotient_map(module, sub)
    return ShortExactSequence(incl, proj)


# -- splitting ---------------------------------------------------------------


def test_split_semisimple_column():
    ring = pair_algebra(QQ)
    reg = regular_module(ring, "left")
    rep = split_check(make_ses(reg, column_submodule(reg, 1)))
    assert rep.verdict == "yes"
    assert set(rep.certificate) == {"retraction", "section", "iso"}


def test_split_fails_t2_arrow():
    ring = t2_ring(GF2)
    reg = regular_module(ring, "left")
    rep = split_check(make_ses(reg, t2_arrow_submodule(reg)))
    assert rep.verdict == "no"
    assert "retraction_dual" in rep.certificate["infeasible"]
    assert "section_dual" in rep.certificate["infeasible"]


def test_split_trivial_zero_left():
    ring = pair_algebra(QQ)
    reg = regular_module(ring, "left")
    from grumod.module import zero_submodule

    rep = split_check(make_ses(reg, zero_submodule(reg)))
    assert rep.verdict == "yes"


def test_not_exact_rejected():
    ring = pair_algebra(QQ)
    reg = regular_module(ring, "left")
    sub = column_submodule(reg, 1)
    sub_mod = sub.to_module()
    incl = inclusion_map(sub, sub_mod)
    with pytest.raises(NotExact):
        # proj onto a quotient by a different submodule is not exact with incl
        _, proj = quotient_map(reg, column_submodule(reg, 2))
        ShortExactSequence(incl, proj)


# -- direct summands -----------------------------------------------------------


def test_column_is_summand_with_complement():
    ring = pair_algebra(QQ)
    reg = regular_module(ring, "left")
    rep = is_direct_summand(column_submodule(reg, 1))
    assert rep.verdict == "yes"
    assert rep.details["graded"] and rep.details["ungraded"]
    comp = rep.details["complement_dims"]
    assert comp == {"(1,1)": 0, "(1,2)": 1, "(2,1)": 0, "(2,2)": 1}


def test_arrow_not_summand():
    ring = t2_ring(GF2)
    reg = regular_module(ring, "left")
    rep = is_direct_summand(t2_arrow_submodule(reg))
    assert rep.verdict == "no"
    assert not rep.details["graded"] and not rep.details["ungraded"]


def test_full_submodule_is_summand():
    from grumod.module import full_submodule

    ring = pair_algebra(QQ)
    reg = regular_module(ring, "left")
    rep = is_direct_summand(full_submodule(reg))
    assert rep.verdict == "yes"
    assert all(v == 0 for v in rep.details["complement_dims"].values())


# -- freeness --------------------------------------------------------------------


def test_suspension_free_with_own_degree():
    ring = pair_algebra(GF2)
    reg = regular_module(ring, "left")
    rep = free_by_suspension(suspension(reg, "(1,2)"))
    assert rep.verdict == "yes"
    assert rep.certificate["multiset"] == ["(1,2)"]


def test_regular_free_with_unit_multiset():
    ring = pair_algebra(QQ)
    rep = free_by_suspension(regular_module(ring, "left"))
    assert rep.verdict == "yes"
    assert rep.certificate["multiset"] == ["(1,1)", "(2,2)"]


def test_arrow_free_iso_to_suspension():
    ring = t2_ring(GF2)
    rep = free_by_suspension(t2_arrow_module(ring))
    assert rep.verdict == "yes"
    assert rep.certificate["multiset"] == ["(2,1)"]


def test_simple_quotient_not_free():
    ring = t2_ring(GF2)
    reg = regular_module(ring, "left")
    s2, _ = quotient(reg, t2_top_submodule(reg))
    rep = free_by_suspension(s2)
    assert rep.verdict == "no"


def test_zero_module_free():
    ring = pair_algebra(QQ)
    rep = free_by_suspension(zero_module(ring, "left"))
    assert rep.verdict == "yes"
    assert rep.certificate["multiset"] == []


# -- homogeneous bases --------------------------------------------------------------


def test_column_has_no_homogeneous_basis_structural():
    ring = pair_algebra(GF2)
    reg = regular_module(ring, "left")
    sus = suspension(reg, "(1,2)")
    rep = has_homogeneous_basis(sus)
    assert rep.verdict == "no"
    assert rep.mode["kind"] == "structural"
    # oracle: every nonzero element of the module has nonzero annihilator
    f = ring.field
    for a in (0, 1):
        for b in (0, 1):
            if not (a or b):
                continue
            coords = {}
            if a:
                coords["(1,1)"] = (f.one(),)
            if b:
                coords["(2,1)"] = (f.one(),)
            assert annihilator(sus, sus.element(coords)).dim() > 0


def test_group_algebra_regular_has_basis():
    ring = groupoid_algebra(GF2, cyclic_group_groupoid(2))
    rep = has_homogeneous_basis(regular_module(ring, "left"))
    assert rep.verdict == "yes"
    assert len(rep.certificate["basis"]) == 1


def test_basis_implies_free():
    ring = groupoid_algebra(GF2, cyclic_group_groupoid(2))
    reg = regular_module(ring, "left")
    assert has_homogeneous_basis(reg).verdict == "yes"
    assert free_by_suspension(reg).verdict == "yes"
    shifted = suspension(reg, "g1")
    assert has_homogeneous_basis(shifted).verdict == "yes"
    assert free_by_suspension(shifted).verdict == "yes"


def test_zero_module_has_empty_basis():
    ring = pair_algebra(QQ)
    rep = has_homogeneous_basis(zero_module(ring, "left"))
    assert rep.verdict == "yes"
    assert rep.certificate["basis"] == []


def test_pair2_regular_has_no_homogeneous_basis():
    # every homogeneous element is killed by a non-composable component, so
    # not even the regular module admits a homogeneous basis here
    ring = pair_algebra(QQ)
    rep = has_homogeneous_basis(regular_module(ring, "left"))
    assert rep.verdict == "no"
    assert rep.mode["kind"] == "structural"


# -- projectivity --------------------------------------------------------------------


def test_suspensions_projective():
    ring = pair_algebra(QQ)
    reg = regular_module(ring, "left")
    for sigma in ring.groupoid.elements:
        rep = is_projective(suspension(reg, sigma))
        assert rep.verdict == "yes"
        assert rep.details["graded"] and rep.details["ungraded"]


def test_arrow_projective_over_t2():
    ring = t2_ring(GF2)
    rep = is_projective(t2_arrow_module(ring))
    assert rep.verdict == "yes"


def test_simple_s2_not_projective():
    ring = t2_ring(GF2)
    reg = regular_module(ring, "left")
    s2, _ = quotient(reg, t2_top_submodule(reg))
    rep = is_projective(s2)
    assert rep.verdict == "no"
    assert not rep.details["graded"] and not rep.details["ungraded"]


def test_free_implies_projective_battery():
    for ring, battery in (pair2_battery(GF2), t2_battery(GF2)):
        for name, mod in battery:
            if free_by_suspension(mod).verdict == "yes":
                assert is_projective(mod).verdict == "yes", name


# -- injectivity ----------------------------------------------------------------------


def test_t2_arrow_not_injective_with_oracle():
    ring = t2_ring(GF2)
    arrow = t2_arrow_module(ring)
    rep = is_injective_baer(arrow)
    assert rep.verdict == "no"
    assert rep.certificate["counterexample_ideal"] == {"(1,2)": [["1"]]}
    # oracle: enumerate all 8 linear maps T2 -> Ke12; the module maps kill e12
    reg = regular_module(ring, "left")
    module_maps = []
    for entries in product((0, 1), repeat=3):
        mat = Matrix(GF2, [list(entries)])
        linear = True
        for _, _, r in ring.basis_elements():
            a = reg.left_action_total_matrix(r)
            b = arrow.left_action_total_matrix(r)
            if mat @ a != b @ mat:
                linear = False
        if linear:
            module_maps.append(mat)
    e12_index = reg.offset("(1,2)")
    assert module_maps
    for mat in module_maps:
        assert mat[0, e12_index] == 0  # the identity on Ke12 cannot extend


def test_pair2_battery_injective():
    ring, battery = pair2_battery(GF2)
    for name, mod in battery:
        assert is_injective_baer(mod).verdict == "yes", name


def test_zero_module_injective():
    ring = pair_algebra(GF2)
    assert is_injective_baer(zero_module(ring, "left")).verdict == "yes"


def test_injectivity_over_rationals_needs_ideals():
    ring = pair_algebra(QQ)
    reg = regular_module(ring, "left")
    with pytest.raises(InfiniteFieldNeedsIdealList):
        is_injective_baer(reg)
    ideals = [column_submodule(reg, 1), column_submodule(reg, 2)]
    rep = is_injective_baer(reg, ideals=ideals)
    assert rep.verdict == "yes"
    assert rep.details["relative"]
    assert rep.mode["kind"] == "relative-to-supplied-ideals"


# -- simplicity -----------------------------------------------------------------------


def test_column_simple_exhaustive():
    ring = pair_algebra(GF2)
    col = column_module(ring, 2)
    rep = is_simple(col)
    assert rep.verdict == "yes"
    assert rep.mode["kind"] == "exhaustive"
    # oracle: both nonzero homogeneous elements generate everything
    for t in ("(1,2)", "(2,2)"):
        gen = submodule_generated(col, [col.basis_element(t, 0)])
        assert gen.total_dim() == col.total_dim


def test_group_algebra_graded_simple():
    ring = groupoid_algebra(GF2, cyclic_group_groupoid(2))
    rep = is_simple(regular_module(ring, "left"))
    assert rep.verdict == "yes"


def test_t2_regular_not_simple():
    ring = t2_ring(GF2)
    rep = is_simple(regular_module(ring, "left"))
    assert rep.verdict == "no"
    assert rep.certificate["proper_submodule"]


def test_simple_zero_module_rejected():
    ring = pair_algebra(GF2)
    with pytest.raises(ZeroModule):
        is_simple(zero_module(ring, "left"))


def test_simple_probabilistic_over_rationals():
    ring = pair_algebra(QQ)
    col = column_module(ring, 1)
    doubled = direct_sum(col, col)
    rep = is_simple(doubled, seed=3)
    assert rep.verdict == "no"  # a proper cyclic submodule is found exactly


# -- semisimplicity -------------------------------------------------------------------


def test_pair2_semisimple_two_columns():
    ring = pair_algebra(GF2)
    rep = is_semisimple(regular_module(ring, "left"))
    assert rep.verdict == "yes"
    decomposition = rep.certificate["decomposition"]
    assert len(decomposition) == 2
    degrees = sorted(tuple(sorted(d)) for d in decomposition)
    assert degrees == [("(1,1)", "(2,1)"), ("(1,2)", "(2,2)")]


def test_t2_not_semisimple():
    ring = t2_ring(GF2)
    rep = is_semisimple(regular_module(ring, "left"))
    assert rep.verdict == "no"
    assert rep.certificate["witness_submodule"]


def test_zero_semisimple():
    ring = pair_algebra(GF2)
    rep = is_semisimple(zero_module(ring, "left"))
    assert rep.verdict == "yes"


def test_semisimple_probabilistic_over_rationals():
    ring = pair_algebra(QQ)
    rep = is_semisimple(regular_module(ring, "left"), seed=5)
    assert rep.verdict == "yes"
    assert rep.mode["kind"] == "probabilistic"


def test_simple_fixture_is_semisimple():
    ring = pair_algebra(GF2)
    col = column_module(ring, 1)
    assert is_simple(col).verdict == "yes"
    assert is_semisimple(col).verdict == "yes"


def test_ungraded_semisimple_transfers_down():
    # over the semisimple GF(2)[pair(2)] every fixture module is graded
    # semisimple, matching the ungraded picture of M_2(GF(2))
    ring, battery = pair2_battery(GF2)
    for name, mod in battery:
        assert is_semisimple(mod).verdict == "yes", name


# -- maximal graded submodules ---------------------------------------------------------


def test_maximal_t2():
    ring = t2_ring(GF2)
    reg = regular_module(ring, "left")
    rep = maximal_graded_submodule(reg)
    assert rep.verdict == "yes"
    assert rep.details["codimension"] == 1
    sub = GradedSubmodule(
        reg,
        {
            t: [[GF2.parse(x) for x in row] for row in rows]
            for t, rows in rep.certificate["submodule"].items()
        },
    )
    # maximality: adding any homogeneous element outside fills the module
    from grumod.analysis import homogeneous_vectors, submodule_sum

    for tau in ring.groupoid.elements:
        for vec in homogeneous_vectors(reg, tau):
            x = reg.element({tau: vec})
            if sub.contains(x):
                continue
            grown = submodule_sum(sub, submodule_generated(reg, [x]))
            assert grown.total_dim() == reg.total_dim


def test_maximal_of_simple_is_zero():
    ring = pair_algebra(GF2)
    rep = maximal_graded_submodule(column_module(ring, 1))
    assert rep.verdict == "yes"
    assert rep.details["codimension"] == 2


def test_maximal_of_semisimple_regular_is_first_column():
    # both columns are maximal; the component-order greedy lands on column 1
    ring = pair_algebra(GF2)
    rep = maximal_graded_submodule(regular_module(ring, "left"))
    assert rep.details["codimension"] == 2
    assert rep.details["dims"] == {"(1,1)": 1, "(1,2)": 0, "(2,1)": 1, "(2,2)": 0}


def test_maximal_zero_module_rejected():
    ring = pair_algebra(GF2)
    with pytest.raises(ZeroModule):
        maximal_graded_submodule(zero_module(ring, "left"))


# -- enumeration gates -------------------------------------------------------------------


def test_ideal_enumeration_counts():
    # T2 has exactly 6 graded left ideals: 0, Ke12, Ke11, Ke11+Ke12,
    # Ke12+Ke22, and T2 itself
    ring = t2_ring(GF2)
    ideals = enumerate_graded_left_ideals(ring)
    assert len(ideals) == 6
    dims = sorted(i.total_dim() for i in ideals)
    assert dims == [0, 1, 1, 2, 2, 3]


def test_enumeration_gate_rational():
    ring = pair_algebra(QQ)
    with pytest.raises(EnumerationGate):
        enumerate_graded_submodules(regular_module(ring, "left"))


def test_enumeration_gate_env_override(monkeypatch):
    ring = pair_algebra(GF2)
    reg = regular_module(ring, "left")
    doubled = direct_sum(reg, reg)  # dim 8: inside the default gate
    assert len(enumerate_graded_submodules(doubled)) > 2
    monkeypatch.setenv("GRUMOD_MAX_ENUM", "4")
    with pytest.raises(EnumerationGate):
        enumerate_graded_submodules(doubled)


# -- the five-way ring report --------------------------------------------------------------


def test_ring_reports_consistent():
    for label, (ring, battery) in (
        ("pair2", pair2_battery(GF2)),
        ("t2", t2_battery(GF2)),
        ("z2", z2_battery(GF2)),
    ):
        rep = ring_semisimple_report(ring, battery)
        assert rep["consistent"], label


def test_t2_report_negative_details():
    ring, battery = t2_battery(GF2)
    rep = ring_semisimple_report(ring, battery)
    assert not rep["verdicts"]["ring_semisimple"]
    assert rep["ideal_witness"] is not None
    assert not rep["verdicts"]["battery_all_injective"]
    assert not rep["verdicts"]["battery_all_projective"]


def test_splitting_battery_seeded():
    from grumod.props import suite_splitting

    result = suite_splitting(seed=42)
    assert result["passed"]
    assert result["details"]["count"] == 20
