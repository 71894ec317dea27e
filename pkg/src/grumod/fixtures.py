"""Canonical structures used by the property suites and the test battery:
the pair-groupoid algebras, the upper-triangular ring T2, the
zero-multiplication ring S0, column modules, and quotient simples.
"""

from __future__ import annotations

from .fields import Field, GF2
from .groupoid import Groupoid, cyclic_group_groupoid, pair_groupoid
from .ring import GradedRing, build_graded_ring, groupoid_algebra
from .module import (
    GradedModule,
    GradedSubmodule,
    build_graded_module,
    direct_sum,
    quotient,
    regular_module,
)


def pair2() -> Groupoid:
    return pair_groupoid(2)


def pair3() -> Groupoid:
    return pair_groupoid(3)


def z2() -> Groupoid:
    return cyclic_group_groupoid(2)


def pair_algebra(field: Field, n: int = 2) -> GradedRing:
    return groupoid_algebra(field, pair_groupoid(n), name=f"K[pair({n})]")


def t2_ring(field: Field) -> GradedRing:
    """Upper triangular 2x2 matrices graded by pair(2); the (2,1) slot is 0."""
    g = pair_groupoid(2)
    dims = {"(1,1)": 1, "(1,2)": 1, "(2,2)": 1}
    basis = {"(1,1)": ["e11"], "(1,2)": ["e12"], "(2,2)": ["e22"]}
    one = field.one()
    mult = {
        ("(1,1)", 0, "(1,1)", 0): (one,),
        ("(1,1)", 0, "(1,2)", 0): (one,),
        ("(1,2)", 0, "(2,2)", 0): (one,),
        ("(2,2)", 0, "(2,2)", 0): (one,),
    }
    return build_graded_ring(g, field, dims, mult, basis=basis, name="T2")


def s0_ring(field: Field = GF2) -> GradedRing:
    """Zero multiplication on components at (1,2) and (2,1); not object unital."""
    g = pair_groupoid(2)
    dims = {"(1,2)": 1, "(2,1)": 1}
    basis = {"(1,2)": ["u"], "(2,1)": ["v"]}
    return build_graded_ring(g, field, dims, {}, basis=basis, name="S0")


def column_module(ring: GradedRing, col: int, n: int = 2) -> GradedModule:
    """Column ``col`` of a pair-groupoid algebra: components at (i,col)."""
    g = ring.groupoid
    one = ring.field.one()
    dims = {}
    basis = {}
    lact = {}
    for i in range(1, n + 1):
        t = f"({i},{col})"
        dims[t] = 1
        basis[t] = [t]
    for k in range(1, n + 1):
        for i in range(1, n + 1):
            s = f"({k},{i})"
            t = f"({i},{col})"
            if (s, t) in g.compose:
                lact[(s, 0, t, 0)] = (one,)
    return build_graded_module(
        ring, "left", dims, lact=lact, basis=basis, name=f"col({col})"
    )


def t2_arrow_submodule(regular: GradedModule) -> GradedSubmodule:
    """K e12 inside the regular left T2 module."""
    one = regular.field.one()
    return GradedSubmodule(regular, {"(1,2)": [(one,)]})


def t2_arrow_module(ring: GradedRing) -> GradedModule:
    """K e12 as a standalone left T2 module."""
    one = ring.field.one()
    return build_graded_module(
        ring,
        "left",
        {"(1,2)": 1},
        lact={("(1,1)", 0, "(1,2)", 0): (one,)},
        basis={"(1,2)": ["e12"]},
        name="Ke12",
    )


def t2_radical_submodule(regular: GradedModule) -> GradedSubmodule:
    """K e12 + K e22 inside the regular left T2 module."""
    one = regular.field.one()
    return GradedSubmodule(regular, {"(1,2)": [(one,)], "(2,2)": [(one,)]})


def t2_top_submodule(regular: GradedModule) -> GradedSubmodule:
    """K e11 + K e12 inside the regular left T2 module."""
    one = regular.field.one()
    return GradedSubmodule(regular, {"(1,1)": [(one,)], "(1,2)": [(one,)]})


def column_submodule(regular: GradedModule, col: int, n: int = 2) -> GradedSubmodule:
    one = regular.field.one()
    return GradedSubmodule(regular, {f"({i},{col})": [(one,)] for i in range(1, n + 1)})


def pair2_battery(field: Field):
    """Named graded unital modules over K[pair(2)] for the analysis suites."""
    ring = pair_algebra(field)
    reg = regular_module(ring, "left")
    col1 = column_module(ring, 1)
    col2 = column_module(ring, 2)
    q1, _ = quotient(reg, column_submodule(reg, 1))
    q2, _ = quotient(reg, column_submodule(reg, 2))
    both = direct_sum(col1, col2)
    return ring, [
        ("regular", reg),
        ("col1", col1),
        ("col2", col2),
        ("regular/col1", q1),
        ("regular/col2", q2),
        ("col1+col2", both),
    ]


def t2_battery(field: Field):
    """Named graded unital modules over T2 for the analysis suites."""
    ring = t2_ring(field)
    reg = regular_module(ring, "left")
    arrow = t2_arrow_module(ring)
    rad = t2_radical_submodule(reg)
    top = t2_top_submodule(reg)
    q_arrow, _ = quotient(reg, t2_arrow_submodule(reg))
    simple1, _ = quotient(reg, rad)
    simple2, _ = quotient(reg, top)
    return ring, [
        ("regular", reg),
        ("Ke12", arrow),
        ("rad", rad.to_module("rad")),
        ("regular/Ke12", q_arrow),
        ("S1", simple1),
        ("S2", simple2),
    ]


def z2_battery(field: Field):
    """Named graded unital modules over the Z/2 group algebra."""
    from .module import suspension

    ring = groupoid_algebra(field, z2(), name="K[Z/2]")
    reg = regular_module(ring, "left")
    shifted = suspension(reg, "g1")
    return ring, [
        ("regular", reg),
        ("regular(g)", shifted),
        ("regular+shifted", direct_sum(reg, shifted)),
    ]
