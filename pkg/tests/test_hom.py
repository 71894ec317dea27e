"""HOM spaces, bimodule actions on HOM, eta, factorization, exactness."""

from itertools import product

import pytest

from grumod.fields import GF2, QQ
from grumod.linalg import Matrix, rowspace_basis, subspace_contains
from grumod.module import direct_sum, regular_module, zero_module
from grumod.hom import (
    ConfigurationMismatch,
    GradedMap,
    HomError,
    RingMismatch,
    eta_check,
    factor_through,
    factor_through_left,
    graded_map_space,
    hom_action,
    hom_degree,
    hom_left_exactness,
    hom_total,
    identity_map,
    inclusion_map,
    quotient_map,
    zero_map,
)
from grumod.fixtures import column_module, column_submodule, pair_algebra, s0_ring


@pytest.fixture
def ring():
    return pair_algebra(QQ)


@pytest.fixture
def reg(ring):
    return regular_module(ring, "left")


def test_end_degree_22_is_right_multiplication(reg, ring):
    basis = hom_degree(reg, reg, "(2,2)")
    assert len(basis) == 1
    f = basis[0]
    # oracle: right multiplication by e22 on the regular module
    e22 = ring.basis_element("(2,2)", 0)
    cols = [ring.flatten(x * e22) for _, _, x in ring.basis_elements()]
    right_mult = Matrix(QQ, cols).transpose()
    scaled = rowspace_basis(QQ, [f.flat()])
    assert subspace_contains(QQ, scaled, tuple(x for row in right_mult.data for x in row))


def test_s0_hom_by_enumeration():
    """Oracle: enumerate all 16 GF(2) matrices; the module maps are all of
    them (every action is zero), the graded ones span the diagonals."""
    s0 = s0_ring(GF2)
    n = regular_module(s0, "left")
    linear_count = 0
    module_maps = []
    for entries in product((0, 1), repeat=4):
        mat = Matrix(GF2, [[entries[0], entries[1]], [entries[2], entries[3]]])
        ok = True
        for _, _, r in s0.basis_elements():
            a = n.left_action_total_matrix(r)
            if mat @ a != a @ mat:
                ok = False
        if ok:
            linear_count += 1
            module_maps.append(mat)
    assert linear_count == 16  # dim hom = 4 over GF(2)
    hs = hom_total(n, n)
    assert hs.hom_dim == 4
    assert hs.graded_dim == 2
    assert hs.strict
    assert hs.degree_dims() == {"(1,1)": 1, "(2,2)": 1}
    # the swap lies in hom but outside HOM
    span = rowspace_basis(GF2, [f.flat() for maps in hs.per_degree.values() for f in maps])
    swap = (0, 1, 1, 0)
    assert not subspace_contains(GF2, span, swap)
    assert hs.witness is not None
    assert not subspace_contains(GF2, span, hs.witness.flat())


def test_hom_degree_zero_on_s0():
    s0 = s0_ring(GF2)
    n = regular_module(s0, "left")
    assert hom_degree(n, n, "(1,2)") == []
    assert hom_degree(n, n, "(2,1)") == []


def test_hom_zero_module(reg, ring):
    z = zero_module(ring, "left")
    hs = hom_total(z, z)
    assert hs.graded_dim == 0 and hs.hom_dim == 0 and not hs.strict


def test_hom_needs_common_ring(reg):
    other = regular_module(pair_algebra(QQ), "left")
    with pytest.raises(RingMismatch):
        hom_degree(reg, other, "(1,1)")


def test_hom_action_unit_fixes_map(ring):
    bi = regular_module(ring, "bimodule")
    left = regular_module(ring, "left")
    basis = hom_degree(bi, left, "(2,2)")
    assert basis
    f = basis[0]
    # acting by the identity fixes every map
    identity = ring.basis_element("(1,1)", 0) + ring.basis_element("(2,2)", 0)
    acted = hom_action("a", f, identity)
    assert acted.matrix == f.matrix
    zero_acted = hom_action("a", f, ring.zero())
    assert zero_acted.is_zero()


def test_hom_action_degree_shift(ring):
    bi = regular_module(ring, "bimodule")
    left = regular_module(ring, "left")
    f = hom_degree(bi, left, "(2,2)")[0]
    x = ring.basis_element("(1,2)", 0)
    acted = hom_action("a", f, x)
    # degree {(1,2)} * {(2,2)} = {(1,2)}
    assert acted.degree == frozenset({"(1,2)"})
    assert acted.computed_degrees() <= acted.degree


def test_hom_action_configuration_mismatch(ring, reg):
    f = hom_degree(reg, reg, "(2,2)")[0]
    with pytest.raises(ConfigurationMismatch):
        hom_action("a", f, ring.basis_element("(1,1)", 0))
    with pytest.raises(ConfigurationMismatch):
        hom_action("x", f, ring.basis_element("(1,1)", 0))


def test_eta_regular_and_columns(ring, reg):
    for mod in (reg, column_module(ring, 1), column_module(ring, 2)):
        rep = eta_check(mod)
        assert rep["iso"]
        assert rep["rhom_dim"] == mod.total_dim
    z = zero_module(ring, "left")
    rep = eta_check(z)
    assert rep["iso"] and rep["rhom_dim"] == 0


def test_eta_naturality(ring, reg):
    # eta commutes with post-composition by a degree-preserving map
    col = column_module(ring, 1)
    maps = graded_map_space(col, reg)
    regmod = regular_module(ring, "left")
    for gmap in maps:
        for t, j, x in col.basis_elements():
            m_img = gmap.apply(x)
            eta_of_image_cols = [
                reg.flatten(reg.act_left(rb, m_img)) for _, _, rb in ring.basis_elements()
            ]
            g_after_eta_cols = [
                reg.flatten(gmap.apply(col.unflatten(col.flatten(col.act_left(rb, x)))))
                for _, _, rb in ring.basis_elements()
            ]
            assert eta_of_image_cols == g_after_eta_cols


def test_degree_parts_unique(reg, ring):
    f = hom_degree(reg, reg, "(1,1)")[0] + hom_degree(reg, reg, "(2,2)")[0]
    parts = f.degree_parts()
    assert set(parts) == {"(1,1)", "(2,2)"}
    total = zero_map(reg, reg, f.degree)
    for part in parts.values():
        total = total + part
    assert total.matrix == f.matrix


def test_identity_and_composition(reg):
    ident = identity_map(reg)
    assert ident.compose(ident).matrix == ident.matrix
    assert ident.is_bijective()


def test_factorization_both_sides(reg, ring):
    sub = column_submodule(reg, 1)
    quot, proj = quotient_map(reg, sub)
    for h in graded_map_space(reg, reg):
        f = proj.compose(h)
        hprime = factor_through(f, proj)
        assert hprime is not None
        assert proj.compose(hprime).matrix == f.matrix
    sub_mod = sub.to_module("col1")
    incl = inclusion_map(sub, sub_mod)
    for h in graded_map_space(sub_mod, reg):
        gprime = factor_through_left(h, incl)
        # the inclusion is injective, so every graded h extends
        assert gprime is not None
        assert gprime.compose(incl).matrix == h.matrix


def test_left_exactness(reg, ring):
    sub = column_submodule(reg, 1)
    sub_mod = sub.to_module("col1")
    incl = inclusion_map(sub, sub_mod)
    quot, proj = quotient_map(reg, sub)
    for q in (reg, column_module(ring, 1), column_module(ring, 2)):
        rep = hom_left_exactness(incl, proj, q)
        assert rep["injective"]
        assert rep["exact_middle"]


def test_direct_sum_hom_law(reg, ring):
    col1 = column_module(ring, 1)
    col2 = column_module(ring, 2)
    both = direct_sum(col1, col2)
    for s in ring.groupoid.elements:
        assert len(hom_degree(both, reg, s)) == len(hom_degree(col1, reg, s)) + len(
            hom_degree(col2, reg, s)
        )


def test_suspension_functor_on_maps(reg, ring):
    from grumod.hom import suspension_functor_on_map
    from grumod.module import suspension_functor

    degrees = {"(1,2)", "(2,2)"}
    src = suspension_functor(reg, degrees)
    ident = identity_map(reg)
    lifted = suspension_functor_on_map(ident, degrees, source=src, target=src)
    assert lifted.matrix == Matrix.identity(QQ, src.total_dim)
    # functoriality on composites
    maps = graded_map_space(reg, reg)
    for f in maps:
        for g in maps:
            t_f = suspension_functor_on_map(f, degrees, source=src, target=src)
            t_g = suspension_functor_on_map(g, degrees, source=src, target=src)
            t_gf = suspension_functor_on_map(g.compose(f), degrees, source=src, target=src)
            assert t_g.compose(t_f).matrix == t_gf.matrix


def test_map_json_round_trip(reg, ring):
    from grumod.workspace import map_from_json

    f = hom_degree(reg, reg, "(2,1)")[0]
    doc = f.to_json()
    rebuilt = map_from_json(reg, reg, doc)
    assert rebuilt.matrix == f.matrix
    assert rebuilt.degree == f.degree


def test_map_degree_validation(reg, ring):
    bad = Matrix.zeros(QQ, 4, 4)
    rows = [list(r) for r in bad.data]
    # hit (1,2) from (1,1): only degree (1,2) allows that, so declaring
    # degree {(1,1)} must fail
    rows[reg.offset("(1,2)")][reg.offset("(1,1)")] = 1
    with pytest.raises(HomError):
        GradedMap(reg, reg, Matrix(QQ, rows), frozenset({"(1,1)"}))
