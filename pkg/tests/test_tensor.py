"""Graded tensor products and the hom-tensor adjunction."""

import pytest

from grumod.fields import QQ
from grumod.ring import build_graded_ring
from grumod.module import build_graded_module, is_graded_unital, regular_module, zero_module
from grumod.tensor import (
    SideMismatch,
    UnitSetMismatch,
    adjunction_check,
    tensor_graded,
    tensor_module,
    unitary_hom_module,
)
from grumod.fixtures import pair_algebra


@pytest.fixture
def ring():
    return pair_algebra(QQ)


def row_module(ring, row, n=2):
    g = ring.groupoid
    one = ring.field.one()
    dims = {f"({row},{j})": 1 for j in range(1, n + 1)}
    ract = {}
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            t = f"({row},{j})"
            s = f"({j},{k})"
            if (t, s) in g.compose:
                ract[(t, 0, s, 0)] = (one,)
    return build_graded_module(ring, "right", dims, ract=ract, name=f"row({row})")


def column_module_left(ring, col, n=2):
    from grumod.fixtures import column_module

    return column_module(ring, col, n)


def test_regular_tensor_regular(ring):
    t = tensor_graded(regular_module(ring, "right"), regular_module(ring, "left"))
    assert t.dims_report() == {s: 1 for s in ring.groupoid.elements}
    assert t.total_dim == 4


def test_tensor_with_zero(ring):
    t = tensor_graded(regular_module(ring, "right"), zero_module(ring, "left"))
    assert t.total_dim == 0
    assert t.dims_report() == {}


def test_row_tensor_column_corner(ring):
    # frozen by hand: the relations collapse row(1) (x) col(1) to one
    # dimension in the corner degree (1,1)
    t = tensor_graded(row_module(ring, 1), column_module_left(ring, 1))
    assert t.dims_report() == {"(1,1)": 1}
    t2 = tensor_graded(row_module(ring, 1), column_module_left(ring, 2))
    assert t2.dims_report() == {"(1,2)": 1}


def test_side_mismatch(ring):
    left = regular_module(ring, "left")
    with pytest.raises(SideMismatch):
        tensor_graded(left, left)


def test_tensor_module_structure(ring):
    mr = regular_module(ring, "right")
    nb = regular_module(ring, "bimodule")
    module, t = tensor_module(mr, nb)
    assert module.side == "right"
    assert module.total_dim == 4
    ok, _ = is_graded_unital(module)
    assert ok
    # pure tensor classes multiply like the ring: class(e12 (x) e21) = e11 class
    e12 = mr.basis_element("(1,2)", 0)
    e21 = nb.basis_element("(2,1)", 0)
    coords = t.class_coords(t.pure_tensor_vec(e12, e21))
    assert module.element(coords).support() == ("(1,1)",)


def test_unitary_hom_module(ring):
    nb = regular_module(ring, "bimodule")
    pr = regular_module(ring, "right")
    hmod, basis = unitary_hom_module(nb, pr)
    assert hmod.total_dim == 4
    ok, _ = is_graded_unital(hmod)
    assert ok


def test_adjunction_regular(ring):
    mr = regular_module(ring, "right")
    nb = regular_module(ring, "bimodule")
    pr = regular_module(ring, "right")
    rep = adjunction_check(mr, nb, pr)
    assert rep["iso"]
    assert all(entry["lhs"] == entry["rhs"] for entry in rep["per_degree"].values())


def test_adjunction_zero_target(ring):
    mr = regular_module(ring, "right")
    nb = regular_module(ring, "bimodule")
    pz = zero_module(ring, "right")
    rep = adjunction_check(mr, nb, pz)
    assert rep["iso"]
    assert rep["per_degree"] == {}


def test_adjunction_unit_set_mismatch(ring):
    # a second ring over the same groupoid whose local identities have
    # different coordinates (products carry a factor of 2)
    g = ring.groupoid
    two = QQ.coerce(2)
    mult = {}
    for (s, t), st in g.compose.items():
        mult[(s, 0, t, 0)] = (two,)
    ring2 = build_graded_ring(g, QQ, {s: 1 for s in g.elements}, mult, name="scaled")
    mr = regular_module(ring, "right")
    nb = zero_module(ring, "bimodule", second_ring=ring2)
    pz = zero_module(ring2, "right")
    with pytest.raises(UnitSetMismatch):
        adjunction_check(mr, nb, pz)
