"""Graded tensor products M (x)_R N and the hom-tensor adjunction.

The tensor is computed as the quotient of the componentwise tensor space by
the balancing relations ``mr (x) n - m (x) rn``; the grading is inherited from
the degrees of pure tensors with composable factors, and the relation subspace
is verified to be homogeneous for that grading before any quotient is taken.
"""

from __future__ import annotations

from .groupoid import star_set
from .linalg import Matrix, reduce_mod, rowspace_basis
from .module import GradedModule, ModuleElement, object_unit_report
from .hom import GradedMap, hom_degree


class TensorError(ValueError):
    pass


class SideMismatch(TensorError):
    pass


class UnitSetMismatch(TensorError):
    pass


class TensorProduct:
    """The graded space M (x)_R N, with quotient coordinates per degree.

    ``pairs`` indexes the ambient tensor space by (source position in M,
    source position in N); composable pure-tensor degrees give the grading,
    non-composable pairs are checked to die in the quotient.
    """

    def __init__(self, m: GradedModule, n: GradedModule):
        if m.side not in ("right", "bimodule"):
            raise SideMismatch("left factor must be a right module")
        if n.side not in ("left", "bimodule"):
            raise SideMismatch("right factor must be a left module")
        if m.ring is not n.ring:
            raise SideMismatch("tensor factors must share the balancing ring")
        self.m = m
        self.n = n
        ring = m.ring
        g = ring.groupoid
        f = m.field
        self.field = f
        self.groupoid = g

        deg_of_m = []
        for t in g.elements:
            deg_of_m.extend([t] * m.dims[t])
        deg_of_n = []
        for t in g.elements:
            deg_of_n.extend([t] * n.dims[t])
        self.pairs = [(a, b) for a in range(m.total_dim) for b in range(n.total_dim)]
        self.pair_pos = {p: k for k, p in enumerate(self.pairs)}
        self.grade = []
        for a, b in self.pairs:
            ta, tb = deg_of_m[a], deg_of_n[b]
            self.grade.append(g.compose.get((ta, tb)))

        # balancing relations over homogeneous basis triples
        rel_rows = []
        for a in range(m.total_dim):
            ea = _unit_vec(f, m.total_dim, a)
            mel = m.unflatten(ea)
            for _, _, r in ring.basis_elements():
                mr = m.flatten(m.act_right(mel, r))
                for b in range(n.total_dim):
                    eb = _unit_vec(f, n.total_dim, b)
                    nel = n.unflatten(eb)
                    rn = n.flatten(n.act_left(r, nel))
                    vec = [f.zero()] * len(self.pairs)
                    for aa, c in enumerate(mr):
                        if c != f.zero():
                            vec[self.pair_pos[(aa, b)]] = f.add(vec[self.pair_pos[(aa, b)]], c)
                    for bb, c in enumerate(rn):
                        if c != f.zero():
                            k = self.pair_pos[(a, bb)]
                            vec[k] = f.sub(vec[k], c)
                    if any(x != f.zero() for x in vec):
                        rel_rows.append(tuple(vec))
        self.relations = rowspace_basis(f, rel_rows)

        # verify the relation subspace is homogeneous for the pair grading
        parts: dict = {}
        for k, w in enumerate(self.grade):
            parts.setdefault(w, []).append(k)
        slice_dims = 0
        for w, positions in parts.items():
            rows = []
            for rel in self.relations:
                piece = [rel[k] if k in positions else f.zero() for k in range(len(self.pairs))]
                if any(x != f.zero() for x in piece):
                    rows.append(tuple(piece))
            slice_dims += len(rowspace_basis(f, rows))
        if slice_dims != len(self.relations):
            raise TensorError("balancing relations are not homogeneous; grading undefined")

        # the non-composable part must die in the quotient
        pivots = set()
        for rel in self.relations:
            for k, x in enumerate(rel):
                if x != f.zero():
                    pivots.add(k)
                    break
        for k, w in enumerate(self.grade):
            if w is None and k not in pivots:
                raise TensorError("a non-composable pure tensor survives the quotient")

        self.free_positions: dict = {}
        for w in g.elements:
            self.free_positions[w] = [
                k for k, gw in enumerate(self.grade) if gw == w and k not in pivots
            ]
        self.component_dims = {w: len(self.free_positions[w]) for w in g.elements}
        self.total_dim = sum(self.component_dims.values())

    def reduce(self, vec) -> tuple:
        return reduce_mod(self.field, self.relations, vec)

    def class_coords(self, vec) -> dict:
        """Quotient coordinates (degree -> tuple) of an ambient tensor vector."""
        red = self.reduce(vec)
        out = {}
        for w, positions in self.free_positions.items():
            if positions:
                out[w] = tuple(red[k] for k in positions)
        return out

    def pure_tensor_vec(self, mel: ModuleElement, nel: ModuleElement) -> tuple:
        f = self.field
        mf = self.m.flatten(mel)
        nf = self.n.flatten(nel)
        vec = [f.zero()] * len(self.pairs)
        for a, ca in enumerate(mf):
            if ca == f.zero():
                continue
            for b, cb in enumerate(nf):
                if cb != f.zero():
                    vec[self.pair_pos[(a, b)]] = f.mul(ca, cb)
        return tuple(vec)

    def dims_report(self) -> dict:
        return {w: d for w, d in self.component_dims.items() if d > 0}


def _unit_vec(field, length, pos):
    v = [field.zero()] * length
    v[pos] = field.one()
    return tuple(v)


def tensor_graded(m: GradedModule, n: GradedModule) -> TensorProduct:
    """The graded space M (x)_R N (no module structure required)."""
    return TensorProduct(m, n)


def tensor_module(m: GradedModule, n: GradedModule, name: str = ""):
    """M (x)_R N as a graded right module over the right ring of N.

    Needs N to be an (R, S)-bimodule; returns ``(module, tensor)`` where the
    tensor object converts elements via ``class_coords``.
    """
    if n.side != "bimodule":
        raise SideMismatch("module structure on the tensor needs a bimodule right factor")
    t = TensorProduct(m, n)
    s_ring = n.second_ring
    g = t.groupoid
    f = t.field
    ract = {}
    for w in g.elements:
        for k, pos in enumerate(t.free_positions[w]):
            a, b = t.pairs[pos]
            nel = n.unflatten(_unit_vec(f, n.total_dim, b))
            for s, i, r in s_ring.basis_elements():
                if (w, s) not in g.compose:
                    continue
                ws = g.compose[(w, s)]
                ns = n.act_right(nel, r)
                vec = [f.zero()] * len(t.pairs)
                for bb, c in enumerate(n.flatten(ns)):
                    if c != f.zero():
                        vec[t.pair_pos[(a, bb)]] = c
                coords = t.class_coords(tuple(vec))
                out = coords.get(ws)
                if out is not None and any(x != f.zero() for x in out):
                    ract[(w, k, s, i)] = out
                for other, val in coords.items():
                    if other != ws and any(x != f.zero() for x in val):
                        raise TensorError("tensor action leaves its graded component")
    module = GradedModule(
        s_ring,
        "right",
        dict(t.component_dims),
        {},
        ract=ract or None,
        name=name or f"({m.name})(x)({n.name})",
    )
    return module, t


# -- adjunction ----------------------------------------------------------------


def _check_unit_sets(r, s):
    if r is s:
        return
    rep_r = object_unit_report(r)
    rep_s = object_unit_report(s)
    if r.groupoid != s.groupoid or r.field != s.field:
        raise UnitSetMismatch("rings live over different groupoids or fields")
    units_r = {e: u.coords for e, u in rep_r.units.items()}
    units_s = {e: u.coords for e, u in rep_s.units.items()}
    if units_r != units_s:
        raise UnitSetMismatch("the graded unit sets differ")


def unitary_hom_module(n: GradedModule, p: GradedModule, name: str = "") -> tuple:
    """HOM_S(N, P)R as a graded right R-module.

    N is an (R, S)-bimodule and P a right S-module; the action is
    ``(h . r)(x) = h(r x)``. Returns ``(module, basis_by_degree)`` where the
    basis entries are total matrices N -> P.
    """
    if n.side != "bimodule":
        raise SideMismatch("unitary hom module needs a bimodule first argument")
    if p.side not in ("right", "bimodule"):
        raise SideMismatch("unitary hom module needs a right-module second argument")
    r_ring = n.ring
    g = r_ring.groupoid
    f = n.field
    raw = {s: hom_degree(n, p, s, linearity="right") for s in g.elements}
    # the unitary part: span of h . r over all h and ring basis r
    acted_by_degree: dict = {s: [] for s in g.elements}
    for s in g.elements:
        for h in raw[s]:
            for _, _, r in r_ring.basis_elements():
                lop = n.left_action_total_matrix(r)
                acted = h.matrix @ lop
                if acted.is_zero():
                    continue
                for w in star_set(g, frozenset([s]), r.support()):
                    acted_by_degree[w].append(tuple(x for row in acted.data for x in row))
    basis_by_degree = {}
    for w in g.elements:
        basis_by_degree[w] = rowspace_basis(f, acted_by_degree[w])
    dims = {w: len(basis_by_degree[w]) for w in g.elements}

    def as_matrix(flat):
        rows = []
        it = iter(flat)
        for _ in range(p.total_dim):
            rows.append([next(it) for _ in range(n.total_dim)])
        return Matrix(f, rows)

    ract = {}
    for w in g.elements:
        for j, flat in enumerate(basis_by_degree[w]):
            hmat = as_matrix(flat)
            for s, i, r in r_ring.basis_elements():
                if (w, s) not in g.compose:
                    continue
                ws = g.compose[(w, s)]
                acted = hmat @ n.left_action_total_matrix(r)
                if acted.is_zero():
                    continue
                target = basis_by_degree[ws]
                coeffs = Matrix(f, target).transpose().solve(
                    tuple(x for row in acted.data for x in row)
                )
                if coeffs is None:
                    raise TensorError("hom action leaves the unitary hom module")
                ract[(w, j, s, i)] = coeffs
    module = GradedModule(
        r_ring,
        "right",
        dims,
        {},
        ract=ract or None,
        name=name or "HOM(N,P)R",
    )
    return module, basis_by_degree


def adjunction_check(m: GradedModule, n: GradedModule, p: GradedModule) -> dict:
    """Verify HOM_S(M (x)_R N, P) = HOM_R(M, HOM_S(N, P)R) degree by degree
    via the canonical map ``phi_f(m)(x) = f(m (x) x)``.
    """
    if m.side != "right":
        raise SideMismatch("first argument must be a right R-module")
    if n.side != "bimodule":
        raise SideMismatch("second argument must be an (R,S)-bimodule")
    if p.side not in ("right", "bimodule"):
        raise SideMismatch("third argument must be a right S-module")
    _check_unit_sets(m.ring, n.second_ring if n.second_ring is not None else n.ring)
    tmod, t = tensor_module(m, n)
    hmod, hom_basis = unitary_hom_module(n, p)
    g = m.ring.groupoid
    f = m.field
    per_degree = {}
    iso = True
    for sigma in g.elements:
        lhs = hom_degree(tmod, p, sigma, linearity="right")
        rhs = hom_degree(m, hmod, sigma, linearity="right")
        images = []
        for fmap in lhs:
            # build phi_f column by column over M's total coordinates
            phi_cols = []
            for a in range(m.total_dim):
                mel = m.unflatten(_unit_vec(f, m.total_dim, a))
                # the map x -> f(mel (x) x) as a total matrix N -> P
                cols = []
                for b in range(n.total_dim):
                    nel = n.unflatten(_unit_vec(f, n.total_dim, b))
                    coords = t.class_coords(t.pure_tensor_vec(mel, nel))
                    tel = tmod.element(coords)
                    cols.append(p.flatten(fmap.apply(tel)))
                nm = Matrix(f, cols).transpose() if cols else Matrix.zeros(f, p.total_dim, 0)
                flat = tuple(x for row in nm.data for x in row)
                coeffs = _express_in_hom_basis(f, hmod, hom_basis, flat)
                phi_cols.append(coeffs)
            phi_matrix = Matrix(f, phi_cols).transpose() if phi_cols else Matrix.zeros(
                f, hmod.total_dim, 0
            )
            phi = GradedMap(m, hmod, phi_matrix, frozenset([sigma]), linearity="right")
            images.append(phi)
        # compare the span of phi images with the full RHS space
        img_rows = [phi.flat() for phi in images]
        rhs_rows = [h.flat() for h in rhs]
        img_rank = len(rowspace_basis(f, img_rows))
        ok = (
            len(lhs) == len(rhs)
            and img_rank == len(lhs)
            and rowspace_basis(f, img_rows) == rowspace_basis(f, rhs_rows)
        )
        if len(lhs) or len(rhs):
            per_degree[sigma] = {"lhs": len(lhs), "rhs": len(rhs), "bijective": ok}
        if not ok:
            iso = False
    return {"iso": iso, "per_degree": per_degree, "tensor_dims": t.dims_report()}


def _express_in_hom_basis(f, hmod, hom_basis, flat):
    """Coordinates of a flattened map in the unitary hom module's basis."""
    rows = []
    for w in hmod.ring.groupoid.elements:
        rows.extend(hom_basis[w])
    if not rows:
        if any(x != f.zero() for x in flat):
            raise TensorError("map lies outside the unitary hom module")
        return ()
    sol = Matrix(f, rows).transpose().solve(flat)
    if sol is None:
        raise TensorError("map lies outside the unitary hom module")
    return sol
