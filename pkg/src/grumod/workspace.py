"""JSON workspace files: named groupoids, rings, modules, maps and exact
sequences, with exact string scalars on the wire.

Round trip contract: ``parse(serialize(w))`` reproduces the same canonical
JSON; every cross reference must resolve at parse time.
"""

from __future__ import annotations

import hashlib
import json

from .fields import Field, FieldError, field_from_spec
from .groupoid import Groupoid, GroupoidError, groupoid_from_json
from .ring import GradedRing, RingError
from .module import GradedModule, ModuleError
from .hom import GradedMap, HomError
from .analysis import NotExact, ShortExactSequence
from .linalg import Matrix

FORMAT_VERSION = 1


class SchemaError(ValueError):
    """Malformed workspace document; the message carries a JSON-ish path."""


class DanglingReference(SchemaError):
    pass


class Workspace:
    def __init__(self, field: Field):
        self.field = field
        self.groupoids: dict[str, Groupoid] = {}
        self.rings: dict[str, GradedRing] = {}
        self.modules: dict[str, GradedModule] = {}
        self.maps: dict[str, GradedMap] = {}
        self.sequences: dict[str, ShortExactSequence] = {}
        self._ring_groupoid: dict[str, str] = {}
        self._module_ring: dict[str, str] = {}
        self._module_second_ring: dict[str, str] = {}
        self._map_endpoints: dict[str, tuple] = {}
        self._sequence_refs: dict[str, dict] = {}

    # -- lookup -------------------------------------------------------------

    def find_target(self, name: str):
        """Resolve an analysis target name to ('ring'|'module', object)."""
        if name in self.modules:
            return "module", self.modules[name]
        if name in self.rings:
            return "ring", self.rings[name]
        raise DanglingReference(f"no ring or module named {name!r}")

    def single_groupoid(self) -> Groupoid:
        if len(self.groupoids) != 1:
            raise SchemaError("workspace has multiple groupoids; name one explicitly")
        return next(iter(self.groupoids.values()))

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        doc = {
            "format_version": FORMAT_VERSION,
            "field": self.field.to_spec(),
            "groupoids": {name: g.to_json() for name, g in sorted(self.groupoids.items())},
            "rings": {
                name: r.to_json(self._ring_groupoid[name]) for name, r in sorted(self.rings.items())
            },
            "modules": {
                name: m.to_json(
                    self._module_ring[name], self._module_second_ring.get(name)
                )
                for name, m in sorted(self.modules.items())
            },
            "maps": {
                name: dict(self.maps[name].to_json(), **{
                    "source": self._map_endpoints[name][0],
                    "target": self._map_endpoints[name][1],
                })
                for name in sorted(self.maps)
            },
            "sequences": {name: dict(self._sequence_refs[name]) for name in sorted(self.sequences)},
        }
        return doc

    def serialize(self) -> bytes:
        return canonical_bytes(self.to_json())

    def content_hash(self) -> str:
        return hashlib.sha256(self.serialize()).hexdigest()

    # -- registration (used by the builders and fixture generators) ----------

    def add_groupoid(self, name: str, g: Groupoid):
        self.groupoids[name] = g

    def add_ring(self, name: str, ring: GradedRing, groupoid_name: str):
        self.rings[name] = ring
        self._ring_groupoid[name] = groupoid_name

    def add_module(self, name: str, module: GradedModule, ring_name: str, second_ring=None):
        self.modules[name] = module
        self._module_ring[name] = ring_name
        if second_ring:
            self._module_second_ring[name] = second_ring

    def add_map(self, name: str, gmap: GradedMap, source_name: str, target_name: str):
        self.maps[name] = gmap
        self._map_endpoints[name] = (source_name, target_name)

    def add_sequence(self, name: str, ses: ShortExactSequence, refs: dict):
        self.sequences[name] = ses
        self._sequence_refs[name] = refs


def canonical_bytes(doc) -> bytes:
    return (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode("utf-8")


def parse_workspace(doc: dict) -> Workspace:
    """Validate and materialize a workspace document."""
    if not isinstance(doc, dict):
        raise SchemaError("$: workspace must be an object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise SchemaError(f"$.format_version: expected {FORMAT_VERSION}, got {version!r}")
    try:
        field = field_from_spec(doc.get("field", {}))
    except FieldError as exc:
        raise SchemaError(f"$.field: {exc}") from exc
    ws = Workspace(field)
    for name, gdoc in sorted(doc.get("groupoids", {}).items()):
        try:
            ws.add_groupoid(name, groupoid_from_json(gdoc))
        except (GroupoidError, KeyError, TypeError) as exc:
            raise SchemaError(f"$.groupoids.{name}: {exc}") from exc
    for name, rdoc in sorted(doc.get("rings", {}).items()):
        ws.add_ring(name, _parse_ring(ws, name, rdoc), rdoc.get("groupoid", ""))
    for name, mdoc in sorted(doc.get("modules", {}).items()):
        module = _parse_module(ws, name, mdoc)
        ws.add_module(name, module, mdoc.get("ring", ""), mdoc.get("second_ring"))
    for name, fdoc in sorted(doc.get("maps", {}).items()):
        gmap, src, tgt = _parse_map(ws, name, fdoc)
        ws.add_map(name, gmap, src, tgt)
    for name, sdoc in sorted(doc.get("sequences", {}).items()):
        ws.add_sequence(name, _parse_sequence(ws, name, sdoc), sdoc)
    return ws


def parse_file(path: str) -> Workspace:
    with open(path, "rb") as fh:
        try:
            doc = json.loads(fh.read().decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise SchemaError(f"$: not a UTF-8 JSON document: {exc}") from exc
    return parse_workspace(doc)


def _parse_components(field, where, cdoc):
    dims = {}
    basis = {}
    if not isinstance(cdoc, dict):
        raise SchemaError(f"{where}: components must be an object")
    for sigma, spec in cdoc.items():
        try:
            dims[sigma] = int(spec["dim"])
            names = spec.get("basis")
            if names is not None:
                basis[sigma] = list(names)
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"{where}.{sigma}: {exc}") from exc
    return dims, basis


def _parse_out(field, where, out, groupoid, s, t):
    if (s, t) not in groupoid.compose:
        raise SchemaError(f"{where}: pair ({s},{t}) is not composable")
    st = groupoid.compose[(s, t)]
    if list(out.keys()) != [st]:
        raise SchemaError(f"{where}: product must land in {st}")
    return st, out[st]


def _parse_ring(ws: Workspace, name: str, rdoc) -> GradedRing:
    where = f"$.rings.{name}"
    gname = rdoc.get("groupoid")
    if gname not in ws.groupoids:
        raise DanglingReference(f"{where}.groupoid: unknown groupoid {gname!r}")
    g = ws.groupoids[gname]
    field = ws.field
    if "field" in rdoc:
        try:
            field = field_from_spec(rdoc["field"])
        except FieldError as exc:
            raise SchemaError(f"{where}.field: {exc}") from exc
    dims, basis = _parse_components(field, f"{where}.components", rdoc.get("components", {}))
    mult = {}
    for k, entry in enumerate(rdoc.get("mult", [])):
        wk = f"{where}.mult[{k}]"
        try:
            s, i = entry["l"]
            t, j = entry["r"]
            st, vec = _parse_out(field, wk, entry["out"], g, s, t)
            out_dim = dims.get(st, 0)
            coords = [field.zero()] * out_dim
            for pos, scalar in vec.items():
                coords[int(pos)] = field.parse(scalar)
            mult[(s, int(i), t, int(j))] = tuple(coords)
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise SchemaError(f"{wk}: {exc}") from exc
    try:
        return GradedRing(g, field, dims, basis, mult, name=name)
    except RingError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def _parse_module(ws: Workspace, name: str, mdoc) -> GradedModule:
    where = f"$.modules.{name}"
    rname = mdoc.get("ring")
    if rname not in ws.rings:
        raise DanglingReference(f"{where}.ring: unknown ring {rname!r}")
    ring = ws.rings[rname]
    side = mdoc.get("side", "left")
    second = None
    if side == "bimodule":
        sname = mdoc.get("second_ring")
        if sname not in ws.rings:
            raise DanglingReference(f"{where}.second_ring: unknown ring {sname!r}")
        second = ws.rings[sname]
    dims, basis = _parse_components(ring.field, f"{where}.components", mdoc.get("components", {}))
    g = ring.groupoid

    def parse_tensors(entries, left: bool, wk_base: str):
        out = {}
        for k, entry in enumerate(entries):
            wk = f"{wk_base}[{k}]"
            try:
                s, i = entry["r"]
                t, j = entry["m"]
                first, second_ = (s, t) if left else (t, s)
                st, vec = _parse_out(ring.field, wk, entry["out"], g, first, second_)
                coords = [ring.field.zero()] * dims.get(st, 0)
                for pos, scalar in vec.items():
                    coords[int(pos)] = ring.field.parse(scalar)
                key = (s, int(i), t, int(j)) if left else (t, int(j), s, int(i))
                out[key] = tuple(coords)
            except (KeyError, TypeError, ValueError, IndexError) as exc:
                raise SchemaError(f"{wk}: {exc}") from exc
        return out

    lact = parse_tensors(mdoc.get("action", []), True, f"{where}.action") if side != "right" else None
    ract = (
        parse_tensors(mdoc.get("right_action", []), False, f"{where}.right_action")
        if side != "left"
        else None
    )
    try:
        return GradedModule(
            ring, side, dims, basis, lact=lact, ract=ract, second_ring=second, name=name
        )
    except ModuleError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def map_from_json(source: GradedModule, target: GradedModule, fdoc: dict) -> GradedMap:
    """Rebuild a map from its JSON form relative to known endpoints."""
    field = source.field
    g = source.ring.groupoid
    degree = fdoc.get("degree")
    if degree is None:
        mat = Matrix(
            field,
            [[field.parse(x) for x in row] for row in fdoc["matrix"]],
            cols=source.total_dim,
        )
        return GradedMap(source, target, mat, None)
    degree = list(degree)
    rows = [[field.zero()] * source.total_dim for _ in range(target.total_dim)]
    from .hom import default_linearity

    linearity = default_linearity(source)
    for lam, stacked in fdoc.get("blocks", {}).items():
        targets = []
        for sigma in sorted(degree, key=lambda e: g.index[e]):
            if linearity == "left":
                if (lam, sigma) in g.compose:
                    targets.append(g.compose[(lam, sigma)])
            else:
                if (sigma, lam) in g.compose:
                    targets.append(g.compose[(sigma, lam)])
        expected_rows = sum(target.dims[mu] for mu in targets)
        if len(stacked) != expected_rows:
            raise SchemaError(
                f"blocks.{lam}: expected {expected_rows} rows, got {len(stacked)}"
            )
        r = 0
        for mu in targets:
            for i in range(target.dims[mu]):
                for j in range(source.dims[lam]):
                    rows[target.offset(mu) + i][source.offset(lam) + j] = field.parse(
                        stacked[r][j]
                    )
                r += 1
    return GradedMap(source, target, Matrix(field, rows), frozenset(degree))


def _parse_map(ws: Workspace, name: str, fdoc):
    where = f"$.maps.{name}"
    src_name = fdoc.get("source")
    tgt_name = fdoc.get("target")
    if src_name not in ws.modules:
        raise DanglingReference(f"{where}.source: unknown module {src_name!r}")
    if tgt_name not in ws.modules:
        raise DanglingReference(f"{where}.target: unknown module {tgt_name!r}")
    source = ws.modules[src_name]
    target = ws.modules[tgt_name]
    try:
        gmap = map_from_json(source, target, fdoc)
    except (HomError, KeyError, TypeError, ValueError, IndexError) as exc:
        raise SchemaError(f"{where}: {exc}") from exc
    return gmap, src_name, tgt_name


def _parse_sequence(ws: Workspace, name: str, sdoc) -> ShortExactSequence:
    where = f"$.sequences.{name}"
    for key in ("f", "g"):
        if sdoc.get(key) not in ws.maps:
            raise DanglingReference(f"{where}.{key}: unknown map {sdoc.get(key)!r}")
    fmap = ws.maps[sdoc["f"]]
    gmap = ws.maps[sdoc["g"]]
    for key, mod in (("L", fmap.source), ("M", fmap.target), ("N", gmap.target)):
        ref = sdoc.get(key)
        if ref is not None and ws.modules.get(ref) is not mod:
            raise SchemaError(f"{where}.{key}: does not match the endpoints of f/g")
    try:
        return ShortExactSequence(fmap, gmap)
    except NotExact as exc:
        raise SchemaError(f"{where}: {exc}") from exc
