#!/usr/bin/env python3
"""Regenerate the JSON fixture workspaces under fixtures/."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from grumod.fields import GF2, QQ
from grumod import fixtures
from grumod.module import regular_module
from grumod.hom import inclusion_map, quotient_map
from grumod.analysis import ShortExactSequence
from grumod.workspace import Workspace, parse_workspace
import json

OUT = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def pair2_qq() -> Workspace:
    ws = Workspace(QQ)
    g = fixtures.pair2()
    ring = fixtures.pair_algebra(QQ)
    ws.add_groupoid("G", g)
    ws.add_ring("R", ring, "G")
    reg = regular_module(ring, "left")
    col1 = fixtures.column_submodule(reg, 1)
    col1_mod = col1.to_module("col1")
    quot, proj = quotient_map(reg, col1)
    incl = inclusion_map(col1, col1_mod)
    ws.add_module("M", reg, "R")
    ws.add_module("col1", col1_mod, "R")
    ws.add_module("col2", fixtures.column_module(ring, 2), "R")
    ws.add_module("M_mod_col1", quot, "R")
    ws.add_map("incl1", incl, "col1", "M")
    ws.add_map("proj1", proj, "M", "M_mod_col1")
    ses = ShortExactSequence(incl, proj)
    ws.add_sequence(
        "col1_sequence",
        ses,
        {"L": "col1", "M": "M", "N": "M_mod_col1", "f": "incl1", "g": "proj1"},
    )
    return ws


def t2_gf2() -> Workspace:
    ws = Workspace(GF2)
    g = fixtures.pair2()
    ring = fixtures.t2_ring(GF2)
    ws.add_groupoid("G", g)
    ws.add_ring("T2", ring, "G")
    reg = regular_module(ring, "left")
    arrow = fixtures.t2_arrow_submodule(reg)
    arrow_mod = arrow.to_module("Ke12")
    quot, proj = quotient_map(reg, arrow)
    incl = inclusion_map(arrow, arrow_mod)
    ws.add_module("M", reg, "T2")
    ws.add_module("Ke12", arrow_mod, "T2")
    ws.add_module("M_mod_Ke12", quot, "T2")
    ws.add_map("incl", incl, "Ke12", "M")
    ws.add_map("proj", proj, "M", "M_mod_Ke12")
    ses = ShortExactSequence(incl, proj)
    ws.add_sequence(
        "arrow_sequence",
        ses,
        {"L": "Ke12", "M": "M", "N": "M_mod_Ke12", "f": "incl", "g": "proj"},
    )
    return ws


def s0_gf2() -> Workspace:
    ws = Workspace(GF2)
    g = fixtures.pair2()
    ring = fixtures.s0_ring(GF2)
    ws.add_groupoid("G", g)
    ws.add_ring("S0", ring, "G")
    ws.add_module("N", regular_module(ring, "left"), "S0")
    return ws


def main():
    os.makedirs(OUT, exist_ok=True)
    for name, builder in (
        ("pair2_qq", pair2_qq),
        ("t2_gf2", t2_gf2),
        ("s0_gf2", s0_gf2),
    ):
        ws = builder()
        data = ws.serialize()
        # round-trip sanity before writing
        reparsed = parse_workspace(json.loads(data.decode("utf-8")))
        assert reparsed.serialize() == data, f"round trip failed for {name}"
        path = os.path.join(OUT, f"{name}.json")
        with open(path, "wb") as fh:
            fh.write(data)
        print(f"wrote {path} ({len(data)} bytes, sha256 {ws.content_hash()[:12]}...)")


if __name__ == "__main__":
    main()
