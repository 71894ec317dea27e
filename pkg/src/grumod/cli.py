"""Batch command line over the library: validate workspaces, run structural
checks, compute HOM/suspension/tensor reports, run the paper property suites,
and replay saved certificates.

Exit codes: 0 all verdicts positive/completed, 1 a negative verdict (with
certificate), 2 usage or schema errors. Reports are deterministic JSON on
stdout for a fixed (input, seed); wall-clock timing is only added on request
because it would break byte-identical replays.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .fields import FieldError, field_from_name
from .groupoid import EmptyProduct, GroupoidError, SubsetElement, subset_star
from .ring import is_object_unital, is_unital, support_subgroupoid
from .module import is_graded_unital, suspension, RingNotObjectUnital, ModuleError
from .hom import hom_degree, hom_total, HomError
from .tensor import TensorError, tensor_graded
from .analysis import (
    AnalysisError,
    InfiniteFieldNeedsIdealList,
    free_by_suspension,
    free_cover_for_multiset,
    has_homogeneous_basis,
    is_injective_baer,
    is_projective,
    is_semisimple,
    is_simple,
    maximal_graded_submodule,
    standard_free_cover,
)
from .workspace import (
    DanglingReference,
    SchemaError,
    Workspace,
    canonical_bytes,
    map_from_json,
    parse_file,
    parse_workspace,
)
from . import props as props_mod

REPORT_VERSION = 1

RING_CHECKS = ("object-unital", "unital", "support")
MODULE_CHECKS = (
    "graded-unital",
    "simple",
    "semisimple",
    "projective",
    "injective",
    "free",
    "homogeneous-basis",
    "maximal-submodule",
)


class UsageError(ValueError):
    pass


def _report_bytes(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def _input_block(ws: Workspace) -> dict:
    return {"sha256": ws.content_hash(), "workspace": ws.to_json()}


# -- command implementations (pure: args in, report dict + ok out) -------------


def run_validate(ws: Workspace) -> tuple:
    report = {
        "counts": {
            "groupoids": len(ws.groupoids),
            "rings": len(ws.rings),
            "modules": len(ws.modules),
            "maps": len(ws.maps),
            "sequences": len(ws.sequences),
        },
        "groupoids": {
            name: {"elements": len(g.elements), "units": list(g.units)}
            for name, g in sorted(ws.groupoids.items())
        },
        "rings": {
            name: {"total_dim": r.total_dim} for name, r in sorted(ws.rings.items())
        },
        "modules": {
            name: {"side": m.side, "total_dim": m.total_dim}
            for name, m in sorted(ws.modules.items())
        },
    }
    return report, True


def _ring_check(ring, check: str, seed: int) -> dict:
    if check == "object-unital":
        rep = is_object_unital(ring)
        return {
            "property": "object-unital",
            "verdict": "yes" if rep.is_object_unital else "no",
            "certificate": rep.to_json(),
            "mode": {"kind": "exhaustive"},
            "details": {"unit_count": len(rep.units)},
        }
    if check == "unital":
        ok, identity = is_unital(ring)
        return {
            "property": "unital",
            "verdict": "yes" if ok else "no",
            "certificate": {"identity": identity.to_json()} if ok else None,
            "mode": {"kind": "exhaustive"},
            "details": {},
        }
    if check == "support":
        sub = support_subgroupoid(ring)
        return {
            "property": "support-subgroupoid",
            "verdict": "yes",
            "certificate": sub.to_json(),
            "mode": {"kind": "exhaustive"},
            "details": {"elements": list(sub.elements)},
        }
    raise UsageError(f"check {check!r} does not apply to rings")


def _module_check(module, check: str, seed: int) -> dict:
    if check == "graded-unital":
        ok, witness = is_graded_unital(module)
        return {
            "property": "graded-unital",
            "verdict": "yes" if ok else "no",
            "certificate": None if ok else {"witness": witness},
            "mode": {"kind": "exhaustive"},
            "details": {},
        }
    if check == "simple":
        return is_simple(module, seed=seed).to_json()
    if check == "semisimple":
        return is_semisimple(module, seed=seed).to_json()
    if check == "projective":
        return is_projective(module).to_json()
    if check == "injective":
        return is_injective_baer(module).to_json()
    if check == "free":
        return free_by_suspension(module, seed=seed).to_json()
    if check == "homogeneous-basis":
        return has_homogeneous_basis(module).to_json()
    if check == "maximal-submodule":
        return maximal_graded_submodule(module).to_json()
    raise UsageError(f"check {check!r} does not apply to modules")


def run_analyze(ws: Workspace, target: str, checks: list, seed: int) -> tuple:
    kind, obj = ws.find_target(target)
    results = []
    for check in checks:
        if kind == "ring":
            results.append(_ring_check(obj, check, seed))
        else:
            results.append(_module_check(obj, check, seed))
    ok = all(r["verdict"] != "no" for r in results)
    g = obj.groupoid if kind == "ring" else obj.ring.groupoid
    dims = {t: obj.dims[t] for t in g.elements if obj.dims[t] > 0}
    report = {
        "target": target,
        "target_kind": kind,
        "component_dims": dims,
        "results": results,
    }
    return report, ok


def run_hom(ws: Workspace, src: str, tgt: str, degree) -> tuple:
    kind_a, a = ws.find_target(src)
    kind_b, b = ws.find_target(tgt)
    if kind_a != "module" or kind_b != "module":
        raise UsageError("hom needs module endpoints")
    if degree is not None:
        basis = hom_degree(a, b, degree)
        report = {
            "from": src,
            "to": tgt,
            "degree": degree,
            "dim": len(basis),
            "basis": [f.to_json() for f in basis],
        }
        return report, True
    hs = hom_total(a, b)
    report = {"from": src, "to": tgt, **hs.to_json()}
    return report, True


def run_suspend(ws: Workspace, target: str, sigma: str) -> tuple:
    kind, module = ws.find_target(target)
    if kind != "module":
        raise UsageError("suspend needs a module target")
    if module.side != "left":
        raise UsageError("suspension is defined for left modules")
    sus = suspension(module, sigma)
    g = module.ring.groupoid
    report = {
        "target": target,
        "sigma": sigma,
        "degree_dims": {t: sus.dims[t] for t in g.elements if sus.dims[t] > 0},
        "module": sus.to_json(ring_name="R"),
    }
    return report, True


def run_tensor(ws: Workspace, left: str, right: str) -> tuple:
    kind_a, a = ws.find_target(left)
    kind_b, b = ws.find_target(right)
    if kind_a != "module" or kind_b != "module":
        raise UsageError("tensor needs module endpoints")
    t = tensor_graded(a, b)
    report = {
        "left": left,
        "right": right,
        "degree_dims": t.dims_report(),
        "total_dim": t.total_dim,
        "relations_dim": len(t.relations),
    }
    return report, True


def parse_subset_literal(text: str) -> list:
    """Parse '{(1,2),(2,1)}' style subset literals (paren-aware commas)."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise UsageError(f"subset literal must be brace-delimited: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        raise UsageError("subset literal is empty")
    parts = []
    depth = 0
    current = []
    for ch in inner:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    parts.append("".join(current).strip())
    return [p for p in parts if p]


def run_star(ws: Workspace, sets: list, groupoid_name) -> tuple:
    g = ws.groupoids.get(groupoid_name) if groupoid_name else ws.single_groupoid()
    if g is None:
        raise DanglingReference(f"unknown groupoid {groupoid_name!r}")
    a = SubsetElement(g, parse_subset_literal(sets[0]))
    b = SubsetElement(g, parse_subset_literal(sets[1]))
    try:
        out = subset_star(a, b)
    except EmptyProduct as exc:
        report = {
            "sets": sets,
            "error": "EmptyProduct",
            "message": str(exc),
        }
        return report, False
    report = {"sets": sets, "product": list(out.sorted_members())}
    return report, True


def run_props(seed: int, field_name) -> tuple:
    field = field_from_name(field_name) if field_name else None
    results = props_mod.run_paper_suite(seed, field=field)
    ok = all(s["passed"] for s in results)
    return {"results": results, "suites": [s["suite"] for s in results]}, ok


# -- certificate replay -----------------------------------------------------------


def _verify_entry(ws: Workspace, target_obj, entry: dict) -> bool:
    """Targeted structural validation of an embedded certificate."""
    from .module import GradedSubmodule, annihilator, submodule_generated
    from .linalg import Matrix

    prop = entry.get("property")
    verdict = entry.get("verdict")
    cert = entry.get("certificate")
    if cert is None:
        return True
    if prop == "free-by-suspension" and verdict == "yes":
        multiset = cert.get("multiset", [])
        if not multiset:
            return target_obj.total_dim == 0
        cover, _ = free_cover_for_multiset(target_obj.ring, multiset)
        try:
            iso = map_from_json(cover, target_obj, cert["iso"])
        except (SchemaError, HomError, KeyError, ValueError):
            return False
        return iso.is_bijective()
    if prop == "projective" and verdict == "yes":
        if target_obj.total_dim == 0:
            return True
        cover, cover_map, _ = standard_free_cover(target_obj)
        try:
            section = map_from_json(target_obj, cover, cert["section"])
        except (SchemaError, HomError, KeyError, ValueError):
            return False
        composed = cover_map.matrix @ section.matrix
        return composed == Matrix.identity(target_obj.field, target_obj.total_dim)
    if prop == "semisimple" and verdict == "yes" and "decomposition" in cert:
        total = 0
        f = target_obj.field
        rows_all = []
        for sub_doc in cert["decomposition"]:
            bases = {
                t: [[f.parse(x) for x in row] for row in rows]
                for t, rows in sub_doc.items()
            }
            try:
                sub = GradedSubmodule(target_obj, bases)
            except ModuleError:
                return False
            total += sub.total_dim()
            if not sub.is_zero():
                rep = is_simple(sub.to_module(), seed=0)
                if rep.verdict != "yes":
                    return False
            for t, rows in sub.comp_bases.items():
                for row in rows:
                    flat = [f.zero()] * target_obj.total_dim
                    off = target_obj.offset(t)
                    for k, c in enumerate(row):
                        flat[off + k] = c
                    rows_all.append(tuple(flat))
        from .linalg import rowspace_basis

        return total == target_obj.total_dim and len(rowspace_basis(f, rows_all)) == total
    if prop == "simple" and verdict == "no":
        f = target_obj.field
        bases = {
            t: [[f.parse(x) for x in row] for row in rows]
            for t, rows in cert["proper_submodule"].items()
        }
        try:
            sub = GradedSubmodule(target_obj, bases)
        except ModuleError:
            return False
        return 0 < sub.total_dim() < target_obj.total_dim
    if prop == "injective" and verdict == "no":
        rep = is_injective_baer(target_obj)
        return rep.verdict == "no"
    if prop == "homogeneous-basis" and verdict == "yes":
        elements = []
        f = target_obj.field
        for doc in cert.get("basis", []):
            coords = {t: [f.parse(x) for x in vec] for t, vec in doc.items()}
            elements.append(target_obj.element(coords))
        if not elements:
            return target_obj.total_dim == 0
        for x in elements:
            if not annihilator(target_obj, x).is_zero():
                return False
        return submodule_generated(target_obj, elements).is_full()
    return True


def run_verify_cert(path: str, workspace_path=None) -> tuple:
    with open(path, "rb") as fh:
        try:
            saved = json.loads(fh.read().decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise SchemaError(f"certificate file: {exc}") from exc
    command = saved.get("command")
    details = {"command": command}
    if command == "props":
        seed = saved.get("seed", 42)
        field_name = saved.get("input", {}).get("field")
        fresh, ok = run_props(seed, field_name)
        match = canonical_bytes(fresh["results"]) == canonical_bytes(
            saved.get("results")
        )
        details["replay_matches"] = match
        return {"verified": match, **details}, match
    if command in ("validate", "analyze", "hom", "suspend", "tensor", "star"):
        embedded = saved.get("input", {}).get("workspace")
        recorded_hash = saved.get("input", {}).get("sha256")
        if embedded is None:
            raise SchemaError("certificate does not embed its workspace")
        ws = parse_workspace(embedded)
        if ws.content_hash() != recorded_hash:
            details["hash_matches"] = False
            return {"verified": False, **details}, False
        details["hash_matches"] = True
        if workspace_path is not None:
            with open(workspace_path, "rb") as fh:
                file_hash = hashlib.sha256(
                    canonical_bytes(json.loads(fh.read().decode("utf-8")))
                ).hexdigest()
            details["external_file_matches"] = file_hash == recorded_hash
            if file_hash != recorded_hash:
                return {"verified": False, **details}, False
        args = saved.get("args", {})
        seed = saved.get("seed", 0)
        if command == "validate":
            fresh, _ = run_validate(ws)
        elif command == "analyze":
            fresh, _ = run_analyze(ws, args["target"], args["checks"], seed)
            kind, obj = ws.find_target(args["target"])
            cert_ok = all(
                _verify_entry(ws, obj, entry) for entry in fresh["results"]
            ) if kind == "module" else True
            details["certificates_valid"] = cert_ok
            if not cert_ok:
                return {"verified": False, **details}, False
        elif command == "hom":
            fresh, _ = run_hom(ws, args["from"], args["to"], args.get("degree"))
        elif command == "suspend":
            fresh, _ = run_suspend(ws, args["target"], args["sigma"])
        elif command == "tensor":
            fresh, _ = run_tensor(ws, args["left"], args["right"])
        else:
            fresh, _ = run_star(ws, args["sets"], args.get("groupoid"))
        saved_core = {k: v for k, v in saved.items() if k not in ("input", "timing_ms")}
        fresh_core = dict(fresh)
        fresh_core.update(
            {
                "format_version": saved.get("format_version"),
                "command": command,
                "args": args,
                "ok": saved.get("ok"),
            }
        )
        if "seed" in saved_core:
            fresh_core["seed"] = seed
        match = canonical_bytes(saved_core) == canonical_bytes(fresh_core)
        details["replay_matches"] = match
        return {"verified": match, **details}, match
    raise SchemaError(f"unknown command in certificate: {command!r}")


# -- entry point --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grumod",
        description="groupoid graded rings and graded unital modules: "
        "validation, structural analysis, and the paper property suites",
    )
    parser.add_argument("--figures", metavar="DIR", help="render figures and CSV summaries to DIR")
    parser.add_argument(
        "--timing", action="store_true", help="include wall-clock timing (breaks determinism)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a workspace file")
    p.add_argument("file")

    p = sub.add_parser("analyze", help="run structural checks on a named target")
    p.add_argument("file")
    p.add_argument("--target", required=True)
    p.add_argument(
        "--checks",
        required=True,
        help=f"comma list; rings: {','.join(RING_CHECKS)}; modules: {','.join(MODULE_CHECKS)}",
    )
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("hom", help="HOM spaces between two modules")
    p.add_argument("file")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="tgt", required=True)
    p.add_argument("--degree")

    p = sub.add_parser("suspend", help="suspend a module by a groupoid element")
    p.add_argument("file")
    p.add_argument("--target", required=True)
    p.add_argument("--sigma", required=True)

    p = sub.add_parser("tensor", help="graded tensor product of two modules")
    p.add_argument("file")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = sub.add_parser("star", help="star product of two subset literals")
    p.add_argument("file")
    p.add_argument("--sets", nargs=2, required=True, metavar=("S1", "S2"))
    p.add_argument("--groupoid")

    p = sub.add_parser("props", help="run the paper property suites")
    p.add_argument("--suite", default="paper", choices=["paper"])
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--field", help="q | gf2 | gf3 (parameterizes field-flexible suites)")

    p = sub.add_parser("verify-cert", help="replay a saved report and its certificates")
    p.add_argument("file")
    p.add_argument("--workspace", help="also check the hash against this workspace file")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    started = time.monotonic()
    try:
        report, ok = _dispatch(ns)
    except (
        UsageError,
        SchemaError,
        DanglingReference,
        GroupoidError,
        FieldError,
        FileNotFoundError,
        InfiniteFieldNeedsIdealList,
        RingNotObjectUnital,
        ModuleError,
        HomError,
        TensorError,
        AnalysisError,
    ) as exc:
        error_report = {
            "format_version": REPORT_VERSION,
            "command": getattr(ns, "command", None),
            "error": type(exc).__name__,
            "message": str(exc),
        }
        print(_report_bytes(error_report))
        return 2
    if ns.timing:
        report["timing_ms"] = round((time.monotonic() - started) * 1000, 3)
    print(_report_bytes(report))
    if ns.figures:
        _render_figures(ns.command, report, ns.figures)
    return 0 if ok else 1


def _dispatch(ns) -> tuple:
    command = ns.command
    if command == "props":
        body, ok = run_props(ns.seed, ns.field)
        report = {
            "format_version": REPORT_VERSION,
            "command": "props",
            "input": {"suite": ns.suite, "field": ns.field},
            "seed": ns.seed,
            **body,
            "ok": ok,
        }
        return report, ok
    if command == "verify-cert":
        body, ok = run_verify_cert(ns.file, ns.workspace)
        report = {
            "format_version": REPORT_VERSION,
            "command": "verify-cert",
            **body,
            "ok": ok,
        }
        return report, ok
    ws = parse_file(ns.file)
    if command == "validate":
        body, ok = run_validate(ws)
        args = {}
    elif command == "analyze":
        checks = [c.strip() for c in ns.checks.split(",") if c.strip()]
        if not checks:
            raise UsageError("--checks must name at least one check")
        body, ok = run_analyze(ws, ns.target, checks, ns.seed)
        args = {"target": ns.target, "checks": checks}
    elif command == "hom":
        body, ok = run_hom(ws, ns.src, ns.tgt, ns.degree)
        args = {"from": ns.src, "to": ns.tgt, "degree": ns.degree}
    elif command == "suspend":
        body, ok = run_suspend(ws, ns.target, ns.sigma)
        args = {"target": ns.target, "sigma": ns.sigma}
    elif command == "tensor":
        body, ok = run_tensor(ws, ns.left, ns.right)
        args = {"left": ns.left, "right": ns.right}
    elif command == "star":
        body, ok = run_star(ws, ns.sets, ns.groupoid)
        args = {"sets": list(ns.sets), "groupoid": ns.groupoid}
    else:
        raise UsageError(f"unknown command {command!r}")
    report = {
        "format_version": REPORT_VERSION,
        "command": command,
        "args": args,
        "input": _input_block(ws),
        **body,
        "ok": ok,
    }
    if command == "analyze":
        report["seed"] = ns.seed
    return report, ok


def _render_figures(command: str, report: dict, outdir: str):
    from . import reporting

    if command == "props":
        reporting.render_props(report, outdir)
    elif command == "analyze":
        reporting.render_analyze(report, outdir)
    elif command in ("hom", "suspend", "tensor"):
        reporting.render_degree_dims(report, outdir, command, f"{command} degree dimensions")


if __name__ == "__main__":
    sys.exit(main())
