"""Groupoid axioms, standard constructions, and the subset monoid."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from grumod.groupoid import (
    AxiomViolation,
    CompositionDomainMismatch,
    DuplicateId,
    EmptyProduct,
    NotAGroup,
    SubsetElement,
    UnknownId,
    build_groupoid,
    cyclic_group_groupoid,
    disjoint_union,
    group_groupoid,
    pair_groupoid,
    sigma_set,
    star_set,
    subset_is_invertible,
    subset_star,
    trivial_groupoid,
    unit_subset,
)


def pair2_table():
    ids = [f"({i},{j})" for i in (1, 2) for j in (1, 2)]
    inverse = {f"({i},{j})": f"({j},{i})" for i in (1, 2) for j in (1, 2)}
    triples = [
        [f"({i},{j})", f"({j},{l})", f"({i},{l})"]
        for i in (1, 2)
        for j in (1, 2)
        for l in (1, 2)
    ]
    return ids, inverse, triples


def test_build_pair_groupoid_from_table():
    ids, inverse, triples = pair2_table()
    g = build_groupoid(ids, inverse, triples)
    assert set(g.units) == {"(1,1)", "(2,2)"}
    assert len(g.composable) == 8


def test_pair2_composable_count_brute_force():
    # oracle: count pairs with d(s) = r(t) directly
    g = pair_groupoid(2)
    count = sum(
        1 for s in g.elements for t in g.elements if g.d[s] == g.r[t]
    )
    assert count == 8
    assert len(g.composable) == count


def test_single_unit_trivial_group():
    g = build_groupoid(["e"], {"e": "e"}, [["e", "e", "e"]])
    assert g.units == ("e",)
    assert g.is_group()


def test_axiom_i_violation():
    # inverse is not an involution: e^-1 = a but a^-1 = a
    with pytest.raises(AxiomViolation) as err:
        build_groupoid(
            ["e", "a"],
            {"e": "a", "a": "a"},
            [["e", "e", "e"], ["a", "a", "e"], ["e", "a", "a"], ["a", "e", "a"]],
        )
    assert err.value.axiom == "i"


def test_missing_domain_is_axiom_iii():
    with pytest.raises(AxiomViolation) as err:
        build_groupoid(["e", "a"], {"e": "e", "a": "a"}, [["e", "e", "e"]])
    assert err.value.axiom == "iii"


def test_composition_domain_mismatch():
    # z2 with the composable pair (g,g) removed: d(g) = r(g) = e but gg missing
    with pytest.raises((CompositionDomainMismatch, AxiomViolation)):
        build_groupoid(
            ["e", "g"],
            {"e": "e", "g": "g"},
            [["e", "e", "e"], ["e", "g", "g"], ["g", "e", "g"]],
        )


def test_duplicate_and_unknown_ids():
    with pytest.raises(DuplicateId):
        build_groupoid(["e", "e"], {"e": "e"}, [["e", "e", "e"]])
    with pytest.raises(UnknownId):
        build_groupoid(["e"], {"e": "e"}, [["e", "x", "e"]])


def test_groupoid_axiom_reverify():
    g = pair_groupoid(3)
    g.verify_axioms()


def test_pair_n_shape():
    g = pair_groupoid(3)
    assert len(g.elements) == 9
    assert len(g.units) == 3
    assert len(g.composable) == 27


def test_group_groupoid_z2():
    g = cyclic_group_groupoid(2)
    assert len(g.elements) == 2
    assert len(g.units) == 1


def test_not_a_group():
    table = {("a", "a"): "a", ("a", "b"): "a", ("b", "a"): "a", ("b", "b"): "b"}
    with pytest.raises(NotAGroup):
        group_groupoid(["a", "b"], table)


def test_disjoint_union():
    g = disjoint_union(cyclic_group_groupoid(2), trivial_groupoid())
    assert len(g.elements) == 3
    assert len(g.units) == 2
    for a in g.elements:
        for b in g.elements:
            if a.startswith("0:") != b.startswith("0:"):
                assert (a, b) not in g.compose


def test_unit_subset_is_neutral():
    g = pair_groupoid(2)
    units = unit_subset(g)
    for members in _nonempty_subsets(g):
        s = SubsetElement(g, members)
        assert subset_star(units, s).members == s.members
        assert subset_star(s, units).members == s.members


def _nonempty_subsets(g):
    n = len(g.elements)
    for mask in range(1, 1 << n):
        yield frozenset(g.elements[i] for i in range(n) if mask >> i & 1)


def test_star_examples():
    g = pair_groupoid(2)
    prod = subset_star(SubsetElement(g, {"(1,2)"}), SubsetElement(g, {"(2,1)"}))
    assert prod.members == {"(1,1)"}
    with pytest.raises(EmptyProduct):
        subset_star(SubsetElement(g, {"(1,2)"}), SubsetElement(g, {"(1,2)"}))


def test_star_associative_pair2_exhaustive():
    g = pair_groupoid(2)
    subsets = list(_nonempty_subsets(g))
    for a in subsets:
        for b in subsets:
            ab = star_set(g, a, b)
            for c in subsets:
                bc = star_set(g, b, c)
                assert star_set(g, ab, c) == star_set(g, a, bc)


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_star_associative_pair3_random(seed):
    g = pair_groupoid(3)
    rng = random.Random(seed)
    def pick():
        k = rng.randint(1, 9)
        return frozenset(rng.sample(list(g.elements), k))
    a, b, c = pick(), pick(), pick()
    assert star_set(g, star_set(g, a, b), c) == star_set(g, a, star_set(g, b, c))


def test_invertibility_criterion_vs_scan_pair2():
    # oracle: scan all candidate inverses
    g = pair_groupoid(2)
    units = frozenset(g.units)
    subsets = list(_nonempty_subsets(g))
    for members in subsets:
        invertible = any(
            star_set(g, members, t) == units and star_set(g, t, members) == units
            for t in subsets
        )
        verdict, inverse, witness = subset_is_invertible(SubsetElement(g, members))
        assert verdict == invertible
        if verdict:
            assert star_set(g, members, inverse.members) == units
            assert star_set(g, inverse.members, members) == units
            assert len(members) == len(g.units)
        else:
            assert witness["kind"] in ("missed", "repeated")


def test_invertibility_witness_example():
    g = pair_groupoid(2)
    verdict, _, witness = subset_is_invertible(SubsetElement(g, {"(1,2)"}))
    assert not verdict
    assert witness == {"map": "d", "unit": "(1,1)", "kind": "missed"}


def test_sigma_set_examples():
    g = pair_groupoid(2)
    assert sigma_set(g, "(1,2)").members == {"(1,2)", "(2,1)"}
    z = cyclic_group_groupoid(2)
    assert sigma_set(z, "g1").members == {"g1"}
    assert sigma_set(g, "(1,1)").members == set(g.units)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(min_value=0, max_value=10**6))
def test_sigma_set_always_invertible(n, seed):
    g = pair_groupoid(n)
    rng = random.Random(seed)
    sigma = rng.choice(list(g.elements))
    subset = sigma_set(g, sigma)
    verdict, inverse, _ = subset_is_invertible(subset)
    assert verdict
    assert star_set(g, subset.members, inverse.members) == frozenset(g.units)
    assert len(subset.members) == len(g.units)


def test_subset_inverse_of_units():
    g = pair_groupoid(2)
    u = unit_subset(g)
    verdict, inverse, _ = subset_is_invertible(u)
    assert verdict and inverse.members == u.members


def test_groupoid_json_round_trip():
    from grumod.groupoid import groupoid_from_json

    g = pair_groupoid(2)
    assert groupoid_from_json(g.to_json()) == g
