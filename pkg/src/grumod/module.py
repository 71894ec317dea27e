"""Graded left/right/bi-modules over groupoid graded rings.

Suspensions are represented as *views*: a suspended module remembers its base
module and, per degree, the ordered set of base degrees whose components are
summed there. Composing suspension functors then collapses repeated base
degrees exactly like the underlying subspaces of the base module do, which is
what makes the functor composition law hold on the nose.
"""

from __future__ import annotations

from .fields import Field
from .linalg import (
    Matrix,
    reduce_mod,
    rowspace_basis,
    subspace_contains,
    subspace_equal,
    subspace_sum,
)
from .ring import GradedRing, RingElement, is_object_unital


class ModuleError(ValueError):
    pass


class GradingViolation(ModuleError):
    pass


class ActionNotAssociative(ModuleError):
    def __init__(self, witness, message):
        self.witness = witness
        super().__init__(message)


class RingNotObjectUnital(ModuleError):
    pass


class NotHomogeneous(ModuleError):
    pass


class ShapeMismatch(ModuleError):
    pass


def object_unit_report(ring: GradedRing):
    """Cached object-unitality report of a ring."""
    cached = getattr(ring, "_object_unit_report", None)
    if cached is None:
        cached = is_object_unital(ring)
        ring._object_unit_report = cached
    return cached


class ModuleElement:
    """Sparse degree -> coordinate-vector element of a graded module."""

    __slots__ = ("module", "coords")

    def __init__(self, module: "GradedModule", coords):
        self.module = module
        f = module.field
        z = f.zero()
        clean = {}
        for tau, vec in coords.items():
            if tau not in module.ring.groupoid.index:
                raise ModuleError(f"unknown degree {tau!r}")
            vec = tuple(f.coerce(x) for x in vec)
            if len(vec) != module.dims[tau]:
                raise ModuleError(f"component {tau} expects length {module.dims[tau]}")
            if any(x != z for x in vec):
                clean[tau] = vec
        self.coords = clean

    def is_zero(self) -> bool:
        return not self.coords

    def support(self) -> tuple:
        return tuple(t for t in self.module.ring.groupoid.elements if t in self.coords)

    def is_homogeneous(self) -> bool:
        return len(self.coords) <= 1

    def degree(self):
        if len(self.coords) != 1:
            raise NotHomogeneous("element is zero or has mixed degrees")
        return next(iter(self.coords))

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        f = self.module.field
        out = dict(self.coords)
        for t, vec in other.coords.items():
            cur = out.get(t, (f.zero(),) * len(vec))
            out[t] = tuple(f.add(a, b) for a, b in zip(cur, vec))
        return ModuleElement(self.module, out)

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + other.scale(self.module.field.neg(self.module.field.one()))

    def scale(self, c) -> "ModuleElement":
        f = self.module.field
        c = f.coerce(c)
        return ModuleElement(
            self.module, {t: tuple(f.mul(c, x) for x in v) for t, v in self.coords.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and self.module is other.module
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash(tuple(sorted(self.coords.items())))

    def to_json(self) -> dict:
        f = self.module.field
        return {t: [f.render(x) for x in self.coords[t]] for t in self.support()}

    def __repr__(self):
        if self.is_zero():
            return "ModuleElement(0)"
        f = self.module.field
        parts = []
        for t in self.support():
            for i, x in enumerate(self.coords[t]):
                if x != f.zero():
                    name = self.module.basis[t][i]
                    parts.append(name if x == f.one() else f"{f.render(x)}*{name}")
        return "ModuleElement(" + " + ".join(parts) + ")"


class GradedModule:
    """Graded module with sparse action tensors.

    ``lact[(sigma, i, tau, j)]`` is the coordinate vector of
    ``b^R_{sigma,i} . b^M_{tau,j}`` in ``M_{sigma tau}``; ``ract`` mirrors it
    for right actions ``b^M_{tau,j} . b^S_{rho,k}`` landing in ``M_{tau rho}``.
    """

    def __init__(
        self,
        ring: GradedRing,
        side: str,
        dims,
        basis,
        lact=None,
        ract=None,
        second_ring: GradedRing | None = None,
        name: str = "",
        _skip_checks: bool = False,
    ):
        if side not in ("left", "right", "bimodule"):
            raise ModuleError(f"bad side {side!r}")
        self.ring = ring
        self.side = side
        self.field: Field = ring.field
        self.second_ring = second_ring if side == "bimodule" else None
        if side == "bimodule":
            if second_ring is None:
                raise ModuleError("bimodule needs a second ring")
            if second_ring.field != ring.field:
                raise ModuleError("bimodule rings must share the scalar field")
        g = ring.groupoid
        self.dims = {t: int(dims.get(t, 0)) for t in g.elements}
        self.basis = {}
        for t in g.elements:
            names = list(basis.get(t, [])) if basis else []
            if not names:
                names = [f"{t}[{i}]" for i in range(self.dims[t])]
            if len(names) != self.dims[t]:
                raise ModuleError(f"component {t}: basis names do not match dim")
            self.basis[t] = tuple(names)
        self.lact = {}
        self.ract = {}
        if side in ("left", "bimodule"):
            self._load_action(lact or {}, left=True)
        elif lact:
            raise ModuleError("right module with a left action")
        if side in ("right", "bimodule"):
            self._load_action(ract or {}, left=False)
        elif ract:
            raise ModuleError("left module with a right action")
        self.name = name
        self._offsets = {}
        off = 0
        for t in g.elements:
            self._offsets[t] = off
            off += self.dims[t]
        self.total_dim = off
        # suspension-view metadata; None for plain modules
        self.base = None
        self.degree_sets = None
        if not _skip_checks:
            self._check_action()

    def _load_action(self, tensors, left: bool):
        g = self.ring.groupoid
        acting = self.ring if left else (self.second_ring or self.ring)
        f = self.field
        store = self.lact if left else self.ract
        for key, vec in tensors.items():
            if left:
                s, i, t, j = key
                if (s, t) not in g.compose:
                    raise GradingViolation(f"left action tensor on non-composable ({s},{t})")
                out = g.compose[(s, t)]
                if not (0 <= i < acting.dims[s] and 0 <= j < self.dims[t]):
                    raise ModuleError(f"action index out of range at {key}")
            else:
                t, j, s, i = key
                if (t, s) not in g.compose:
                    raise GradingViolation(f"right action tensor on non-composable ({t},{s})")
                out = g.compose[(t, s)]
                if not (0 <= j < self.dims[t] and 0 <= i < acting.dims[s]):
                    raise ModuleError(f"action index out of range at {key}")
            vec = tuple(f.coerce(x) for x in vec)
            if len(vec) != self.dims[out]:
                raise ModuleError(f"action tensor at {key} must land in M_{out}")
            if any(x != f.zero() for x in vec):
                store[key] = vec

    def _check_action(self):
        g = self.ring.groupoid
        if self.side in ("left", "bimodule"):
            self._check_assoc_left()
        if self.side in ("right", "bimodule"):
            self._check_assoc_right()
        if self.side == "bimodule":
            self._check_bimodule_compat()

    def _iter_chain(self, first_dims, second_dims, third_dims):
        g = self.ring.groupoid
        for s in g.elements:
            if first_dims[s] == 0:
                continue
            for t in g.elements:
                if second_dims[t] == 0 or (s, t) not in g.compose:
                    continue
                for u in g.elements:
                    if third_dims[u] == 0 or (t, u) not in g.compose:
                        continue
                    yield s, t, u

    def _check_assoc_left(self):
        r = self.ring
        f = self.field
        z = f.zero()
        g = r.groupoid
        for s, t, u in self._iter_chain(r.dims, r.dims, self.dims):
            st = g.compose[(s, t)]
            stu = g.compose[(st, u)]
            for i in range(r.dims[s]):
                for j in range(r.dims[t]):
                    ab = r.mult.get((s, i, t, j))
                    for k in range(self.dims[u]):
                        left = [z] * self.dims[stu]
                        if ab is not None:
                            for m, c in enumerate(ab):
                                if c == z:
                                    continue
                                v = self.lact.get((st, m, u, k))
                                if v is None:
                                    continue
                                for q, x in enumerate(v):
                                    left[q] = f.add(left[q], f.mul(c, x))
                        bm = self.lact.get((t, j, u, k))
                        right = [z] * self.dims[stu]
                        if bm is not None:
                            tu = g.compose[(t, u)]
                            for m, c in enumerate(bm):
                                if c == z:
                                    continue
                                v = self.lact.get((s, i, tu, m))
                                if v is None:
                                    continue
                                for q, x in enumerate(v):
                                    right[q] = f.add(right[q], f.mul(c, x))
                        if left != right:
                            w = ((s, i), (t, j), (u, k))
                            raise ActionNotAssociative(w, f"(ab)m != a(bm) at {w}")

    def _check_assoc_right(self):
        r = self.second_ring if self.side == "bimodule" else self.ring
        f = self.field
        z = f.zero()
        g = self.ring.groupoid
        for t, s, u in self._iter_chain(self.dims, r.dims, r.dims):
            ts = g.compose[(t, s)]
            tsu = g.compose[(ts, u)]
            for j in range(self.dims[t]):
                for i in range(r.dims[s]):
                    ma = self.ract.get((t, j, s, i))
                    for k in range(r.dims[u]):
                        left = [z] * self.dims[tsu]
                        if ma is not None:
                            for m, c in enumerate(ma):
                                if c == z:
                                    continue
                                v = self.ract.get((ts, m, u, k))
                                if v is None:
                                    continue
                                for q, x in enumerate(v):
                                    left[q] = f.add(left[q], f.mul(c, x))
                        ab = r.mult.get((s, i, u, k))
                        right = [z] * self.dims[tsu]
                        if ab is not None:
                            su = g.compose[(s, u)]
                            for m, c in enumerate(ab):
                                if c == z:
                                    continue
                                v = self.ract.get((t, j, su, m))
                                if v is None:
                                    continue
                                for q, x in enumerate(v):
                                    right[q] = f.add(right[q], f.mul(c, x))
                        if left != right:
                            w = ((t, j), (s, i), (u, k))
                            raise ActionNotAssociative(w, f"(ma)b != m(ab) at {w}")

    def _check_bimodule_compat(self):
        r = self.ring
        s_ring = self.second_ring
        f = self.field
        z = f.zero()
        g = r.groupoid
        for s, t, u in self._iter_chain(r.dims, self.dims, s_ring.dims):
            st = g.compose[(s, t)]
            stu = g.compose[(st, u)]
            for i in range(r.dims[s]):
                for j in range(self.dims[t]):
                    am = self.lact.get((s, i, t, j))
                    for k in range(s_ring.dims[u]):
                        left = [z] * self.dims[stu]
                        if am is not None:
                            for m, c in enumerate(am):
                                if c == z:
                                    continue
                                v = self.ract.get((st, m, u, k))
                                if v is None:
                                    continue
                                for q, x in enumerate(v):
                                    left[q] = f.add(left[q], f.mul(c, x))
                        ms = self.ract.get((t, j, u, k))
                        right = [z] * self.dims[stu]
                        if ms is not None:
                            tu = g.compose[(t, u)]
                            for m, c in enumerate(ms):
                                if c == z:
                                    continue
                                v = self.lact.get((s, i, tu, m))
                                if v is None:
                                    continue
                                for q, x in enumerate(v):
                                    right[q] = f.add(right[q], f.mul(c, x))
                        if left != right:
                            w = ((s, i), (t, j), (u, k))
                            raise ActionNotAssociative(w, f"(am)s != a(ms) at {w}")

    # -- elements and coordinates ----------------------------------------

    def zero(self) -> ModuleElement:
        return ModuleElement(self, {})

    def element(self, coords) -> ModuleElement:
        return ModuleElement(self, coords)

    def basis_element(self, tau, j: int) -> ModuleElement:
        vec = [self.field.zero()] * self.dims[tau]
        vec[j] = self.field.one()
        return ModuleElement(self, {tau: vec})

    def basis_elements(self):
        for t in self.ring.groupoid.elements:
            for j in range(self.dims[t]):
                yield t, j, self.basis_element(t, j)

    def offset(self, tau) -> int:
        return self._offsets[tau]

    def flatten(self, m: ModuleElement) -> tuple:
        vec = [self.field.zero()] * self.total_dim
        for t, v in m.coords.items():
            off = self._offsets[t]
            for i, c in enumerate(v):
                vec[off + i] = c
        return tuple(vec)

    def unflatten(self, vec) -> ModuleElement:
        coords = {}
        for t in self.ring.groupoid.elements:
            n = self.dims[t]
            if n:
                off = self._offsets[t]
                coords[t] = tuple(vec[off + i] for i in range(n))
        return ModuleElement(self, coords)

    def component_slice(self, tau, vec) -> tuple:
        off = self._offsets[tau]
        return tuple(vec[off + i] for i in range(self.dims[tau]))

    def support(self) -> tuple:
        return tuple(t for t in self.ring.groupoid.elements if self.dims[t] > 0)

    # -- the actions -------------------------------------------------------

    def act_left(self, r: RingElement, m: ModuleElement) -> ModuleElement:
        if self.side == "right":
            raise ModuleError("right module has no left action")
        f = self.field
        g = self.ring.groupoid
        acc: dict = {}
        for s, vr in r.coords.items():
            for t, vm in m.coords.items():
                if (s, t) not in g.compose:
                    continue
                st = g.compose[(s, t)]
                target = acc.setdefault(st, [f.zero()] * self.dims[st])
                for i, a in enumerate(vr):
                    if a == f.zero():
                        continue
                    for j, b in enumerate(vm):
                        if b == f.zero():
                            continue
                        vec = self.lact.get((s, i, t, j))
                        if vec is None:
                            continue
                        coef = f.mul(a, b)
                        for k, c in enumerate(vec):
                            if c != f.zero():
                                target[k] = f.add(target[k], f.mul(coef, c))
        return ModuleElement(self, {t: tuple(v) for t, v in acc.items()})

    def act_right(self, m: ModuleElement, r: RingElement) -> ModuleElement:
        if self.side == "left":
            raise ModuleError("left module has no right action")
        f = self.field
        g = self.ring.groupoid
        acc: dict = {}
        for t, vm in m.coords.items():
            for s, vr in r.coords.items():
                if (t, s) not in g.compose:
                    continue
                ts = g.compose[(t, s)]
                target = acc.setdefault(ts, [f.zero()] * self.dims[ts])
                for j, b in enumerate(vm):
                    if b == f.zero():
                        continue
                    for i, a in enumerate(vr):
                        if a == f.zero():
                            continue
                        vec = self.ract.get((t, j, s, i))
                        if vec is None:
                            continue
                        coef = f.mul(b, a)
                        for k, c in enumerate(vec):
                            if c != f.zero():
                                target[k] = f.add(target[k], f.mul(coef, c))
        return ModuleElement(self, {t: tuple(v) for t, v in acc.items()})

    def left_action_total_matrix(self, r: RingElement) -> Matrix:
        cols = [self.flatten(self.act_left(r, b)) for _, _, b in self.basis_elements()]
        if not cols:
            return Matrix.zeros(self.field, self.total_dim, 0)
        return Matrix(self.field, cols).transpose()

    def right_action_total_matrix(self, r: RingElement) -> Matrix:
        cols = [self.flatten(self.act_right(b, r)) for _, _, b in self.basis_elements()]
        if not cols:
            return Matrix.zeros(self.field, self.total_dim, 0)
        return Matrix(self.field, cols).transpose()

    def to_json(self, ring_name: str = "R", second_ring_name: str | None = None) -> dict:
        f = self.field
        g = self.ring.groupoid
        doc = {
            "ring": ring_name,
            "side": self.side,
            "components": {
                t: {"dim": self.dims[t], "basis": list(self.basis[t])}
                for t in g.elements
                if self.dims[t] > 0
            },
        }
        if self.side in ("left", "bimodule"):
            action = []
            for (s, i, t, j) in sorted(
                self.lact, key=lambda k: (g.index[k[0]], k[1], g.index[k[2]], k[3])
            ):
                st = g.compose[(s, t)]
                vec = self.lact[(s, i, t, j)]
                action.append(
                    {
                        "r": [s, i],
                        "m": [t, j],
                        "out": {st: {str(k): f.render(x) for k, x in enumerate(vec) if x != f.zero()}},
                    }
                )
            doc["action"] = action
        if self.side in ("right", "bimodule"):
            action = []
            for (t, j, s, i) in sorted(
                self.ract, key=lambda k: (g.index[k[0]], k[1], g.index[k[2]], k[3])
            ):
                ts = g.compose[(t, s)]
                vec = self.ract[(t, j, s, i)]
                action.append(
                    {
                        "m": [t, j],
                        "r": [s, i],
                        "out": {ts: {str(k): f.render(x) for k, x in enumerate(vec) if x != f.zero()}},
                    }
                )
            doc["right_action"] = action
        if self.side == "bimodule":
            doc["second_ring"] = second_ring_name or ring_name
        return doc

    def __repr__(self):
        label = self.name or f"{self.side}-module"
        return f"GradedModule({label}, dims {[self.dims[t] for t in self.ring.groupoid.elements]})"


def build_graded_module(
    ring, side, dims, lact=None, ract=None, second_ring=None, basis=None, name=""
) -> GradedModule:
    return GradedModule(
        ring, side, dims, basis or {}, lact=lact, ract=ract, second_ring=second_ring, name=name
    )


def regular_module(ring: GradedRing, side: str = "left", name: str = "") -> GradedModule:
    """The ring as a module over itself (left, right, or bimodule)."""
    dims = dict(ring.dims)
    basis = {s: list(ring.basis[s]) for s in ring.groupoid.elements}
    lact = dict(ring.mult) if side in ("left", "bimodule") else None
    ract = dict(ring.mult) if side in ("right", "bimodule") else None
    return GradedModule(
        ring,
        side,
        dims,
        basis,
        lact=lact,
        ract=ract,
        second_ring=ring if side == "bimodule" else None,
        name=name or f"regular-{side}",
    )


def zero_module(ring: GradedRing, side: str = "left", second_ring=None) -> GradedModule:
    return GradedModule(ring, side, {}, {}, lact={}, ract={}, second_ring=second_ring, name="zero")


def componentwise_equal(m1: GradedModule, m2: GradedModule) -> bool:
    """Structural equality: same dims and identical action tensors."""
    return (
        m1.ring is m2.ring
        and m1.side == m2.side
        and m1.dims == m2.dims
        and m1.lact == m2.lact
        and m1.ract == m2.ract
    )


def same_dimension_profile(m1: GradedModule, m2: GradedModule) -> bool:
    return m1.dims == m2.dims


# -- graded unitality ------------------------------------------------------


def is_graded_unital(m: GradedModule):
    """Check the local-identity law componentwise; on success also verify the
    action span equals the module (the unitary conclusion).

    Returns ``(True, None)`` or ``(False, witness)``.
    """
    report = object_unit_report(m.ring)
    if not report.is_object_unital:
        raise RingNotObjectUnital("the acting ring is not object unital")
    if m.side == "bimodule":
        report2 = object_unit_report(m.second_ring)
        if not report2.is_object_unital:
            raise RingNotObjectUnital("the right acting ring is not object unital")
    g = m.ring.groupoid
    for t in g.elements:
        if m.dims[t] == 0:
            continue
        if m.side in ("left", "bimodule"):
            unit = report.units.get(g.r[t])
            for j in range(m.dims[t]):
                x = m.basis_element(t, j)
                acted = m.act_left(unit, x) if unit is not None else m.zero()
                if acted != x:
                    return False, {"side": "left", "degree": t, "basis": j}
        if m.side in ("right", "bimodule"):
            rep = object_unit_report(m.second_ring) if m.side == "bimodule" else report
            unit = rep.units.get(g.d[t])
            for j in range(m.dims[t]):
                x = m.basis_element(t, j)
                acted = m.act_right(x, unit) if unit is not None else m.zero()
                if acted != x:
                    return False, {"side": "right", "degree": t, "basis": j}
    # unitary conclusion: the action span RM (or MR) fills the module
    span_rows = []
    if m.side in ("left", "bimodule"):
        for _, _, r in m.ring.basis_elements():
            for _, _, x in m.basis_elements():
                span_rows.append(m.flatten(m.act_left(r, x)))
    else:
        for _, _, r in m.ring.basis_elements():
            for _, _, x in m.basis_elements():
                span_rows.append(m.flatten(m.act_right(x, r)))
    if len(rowspace_basis(m.field, span_rows)) != m.total_dim:
        return False, {"side": "span", "reason": "action span is a proper subspace"}
    return True, None


# -- suspension --------------------------------------------------------------


def _view_data(m: GradedModule):
    if m.base is not None:
        return m.base, m.degree_sets
    return m, {t: (t,) if m.dims[t] > 0 else () for t in m.ring.groupoid.elements}


def suspension_functor(m: GradedModule, degrees) -> GradedModule:
    """Direct sum of suspensions over a set of degrees, with the subspace
    (collapsing) semantics relative to the base module.

    ``degrees`` may be a SubsetElement or any iterable of groupoid elements;
    an empty iterable or one with no composable contribution yields the zero
    module.
    """
    from .groupoid import SubsetElement

    if isinstance(degrees, SubsetElement):
        degrees = degrees.members
    if m.side != "left":
        raise ModuleError("suspension is implemented for left modules")
    g = m.ring.groupoid
    base, dsets = _view_data(m)
    wanted = set(degrees)
    new_sets = {}
    for t in g.elements:
        acc = []
        for s in g.elements:
            if s not in wanted or (t, s) not in g.compose:
                continue
            for mu in dsets[g.compose[(t, s)]]:
                if mu not in acc:
                    acc.append(mu)
        new_sets[t] = tuple(sorted(acc, key=lambda e: g.index[e]))
    out = _module_from_view(base, new_sets)
    if m.base is None:
        # remember the multiset when suspending a plain module directly
        out.view_degrees = tuple(sorted(wanted, key=lambda e: g.index[e]))
    return out


def suspension(m: GradedModule, sigma) -> GradedModule:
    """The single-degree suspension M(sigma): component at tau is M_{tau sigma}."""
    if sigma not in m.ring.groupoid.index:
        raise ModuleError(f"unknown element {sigma!r}")
    return suspension_functor(m, [sigma])


def _module_from_view(base: GradedModule, degree_sets) -> GradedModule:
    g = base.ring.groupoid
    dims = {}
    basis = {}
    for t in g.elements:
        names = []
        for mu in degree_sets[t]:
            names.extend(f"{mu}:{n}" for n in base.basis[mu])
        dims[t] = len(names)
        basis[t] = names
    offsets = {
        t: {mu: sum(base.dims[x] for x in degree_sets[t][:k]) for k, mu in enumerate(degree_sets[t])}
        for t in g.elements
    }
    lact = {}
    for t in g.elements:
        for mu in degree_sets[t]:
            in_off = offsets[t][mu]
            for s in g.elements:
                if (s, t) not in g.compose or (s, mu) not in g.compose:
                    continue
                st = g.compose[(s, t)]
                smu = g.compose[(s, mu)]
                for i in range(base.ring.dims[s]):
                    for j in range(base.dims[mu]):
                        vec = base.lact.get((s, i, mu, j))
                        if vec is None:
                            continue
                        if smu not in degree_sets[st]:
                            # cannot happen for genuine views; guard for safety
                            raise GradingViolation("suspension view is not action-closed")
                        out_off = offsets[st][smu]
                        out = [base.field.zero()] * dims[st]
                        for k, c in enumerate(vec):
                            out[out_off + k] = c
                        lact[(s, i, t, in_off + j)] = tuple(out)
    out = GradedModule(
        base.ring,
        "left",
        dims,
        basis,
        lact=lact,
        name=f"suspension-view({base.name})",
        _skip_checks=True,
    )
    out.base = base
    out.degree_sets = dict(degree_sets)
    return out


def underlying_base_support(m: GradedModule) -> tuple:
    """Base degrees whose components appear somewhere in a suspension view."""
    base, dsets = _view_data(m)
    seen = set()
    for t, mus in dsets.items():
        seen.update(mus)
    return tuple(e for e in base.ring.groupoid.elements if e in seen and base.dims[e] > 0)


# -- submodules ----------------------------------------------------------------


class GradedSubmodule:
    """Per-component subspaces of a graded module, bases kept in RREF."""

    def __init__(self, parent: GradedModule, comp_bases, _validated=False):
        self.parent = parent
        self.comp_bases = {}
        f = parent.field
        for t in parent.ring.groupoid.elements:
            rows = comp_bases.get(t, [])
            rows = [tuple(f.coerce(x) for x in row) for row in rows]
            for row in rows:
                if len(row) != parent.dims[t]:
                    raise ShapeMismatch(f"submodule basis at {t} has wrong length")
            self.comp_bases[t] = rowspace_basis(f, rows)
        if not _validated:
            self._check_closed()

    def _check_closed(self):
        m = self.parent
        f = m.field
        g = m.ring.groupoid
        for t in g.elements:
            for row in self.comp_bases[t]:
                v = m.element({t: row})
                if m.side in ("left", "bimodule"):
                    for s, i, r in m.ring.basis_elements():
                        if (s, t) not in g.compose:
                            continue
                        st = g.compose[(s, t)]
                        image = m.act_left(r, v)
                        vec = image.coords.get(st, (f.zero(),) * m.dims[st])
                        if not subspace_contains(f, self.comp_bases[st], vec):
                            raise ModuleError(
                                f"subspaces are not closed under the action at ({s},{i})*{t}"
                            )
                if m.side in ("right", "bimodule"):
                    acting = m.second_ring if m.side == "bimodule" else m.ring
                    for s, i, r in acting.basis_elements():
                        if (t, s) not in g.compose:
                            continue
                        ts = g.compose[(t, s)]
                        image = m.act_right(v, r)
                        vec = image.coords.get(ts, (f.zero(),) * m.dims[ts])
                        if not subspace_contains(f, self.comp_bases[ts], vec):
                            raise ModuleError(
                                f"subspaces are not closed under the right action at {t}*({s},{i})"
                            )

    def dims(self) -> dict:
        return {t: len(rows) for t, rows in self.comp_bases.items()}

    def total_dim(self) -> int:
        return sum(len(rows) for rows in self.comp_bases.values())

    def contains(self, x: ModuleElement) -> bool:
        f = self.parent.field
        for t, vec in x.coords.items():
            if not subspace_contains(f, self.comp_bases[t], vec):
                return False
        return True

    def is_full(self) -> bool:
        return all(len(self.comp_bases[t]) == self.parent.dims[t] for t in self.comp_bases)

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def __eq__(self, other):
        return (
            isinstance(other, GradedSubmodule)
            and self.parent is other.parent
            and self.comp_bases == other.comp_bases
        )

    def __hash__(self):
        return hash(tuple(sorted((t, tuple(rows)) for t, rows in self.comp_bases.items())))

    def basis_elements(self):
        for t in self.parent.ring.groupoid.elements:
            for row in self.comp_bases[t]:
                yield self.parent.element({t: row})

    def to_module(self, name: str = "") -> GradedModule:
        """The submodule as a standalone graded module with induced action."""
        m = self.parent
        f = m.field
        g = m.ring.groupoid
        dims = {t: len(rows) for t, rows in self.comp_bases.items()}
        lact = {}
        ract = {}
        if m.side in ("left", "bimodule"):
            for t in g.elements:
                for j, row in enumerate(self.comp_bases[t]):
                    v = m.element({t: row})
                    for s, i, r in m.ring.basis_elements():
                        if (s, t) not in g.compose:
                            continue
                        st = g.compose[(s, t)]
                        image = m.act_left(r, v)
                        vec = image.coords.get(st)
                        if vec is None:
                            continue
                        coeffs = _express_rows(f, self.comp_bases[st], vec)
                        lact[(s, i, t, j)] = coeffs
        if m.side in ("right", "bimodule"):
            acting = m.second_ring if m.side == "bimodule" else m.ring
            for t in g.elements:
                for j, row in enumerate(self.comp_bases[t]):
                    v = m.element({t: row})
                    for s, i, r in acting.basis_elements():
                        if (t, s) not in g.compose:
                            continue
                        ts = g.compose[(t, s)]
                        image = m.act_right(v, r)
                        vec = image.coords.get(ts)
                        if vec is None:
                            continue
                        coeffs = _express_rows(f, self.comp_bases[ts], vec)
                        ract[(t, j, s, i)] = coeffs
        return GradedModule(
            m.ring,
            m.side,
            dims,
            {},
            lact=lact or None,
            ract=ract or None,
            second_ring=m.second_ring,
            name=name or "submodule",
        )

    def to_json(self) -> dict:
        f = self.parent.field
        return {
            t: [[f.render(x) for x in row] for row in rows]
            for t, rows in self.comp_bases.items()
            if rows
        }


def _express_rows(field, rows, vec):
    sol = Matrix(field, rows).transpose().solve(vec)
    if sol is None:
        raise ModuleError("vector does not lie in the claimed subspace")
    return sol


def full_submodule(m: GradedModule) -> GradedSubmodule:
    bases = {
        t: [tuple(Matrix.identity(m.field, m.dims[t]).data[i]) for i in range(m.dims[t])]
        for t in m.ring.groupoid.elements
    }
    return GradedSubmodule(m, bases, _validated=True)


def zero_submodule(m: GradedModule) -> GradedSubmodule:
    return GradedSubmodule(m, {}, _validated=True)


def submodule_generated(m: GradedModule, generators) -> GradedSubmodule:
    """Closure of homogeneous generators under the action, to a fixpoint."""
    f = m.field
    g = m.ring.groupoid
    comp: dict = {t: [] for t in g.elements}
    frontier = []
    for x in generators:
        if not isinstance(x, ModuleElement):
            raise ModuleError("generators must be module elements")
        for t, vec in x.coords.items():
            if not subspace_contains(f, comp[t], vec):
                comp[t] = subspace_sum(f, comp[t], [vec])
                frontier.append((t, vec))
    while frontier:
        t, vec = frontier.pop()
        v = m.element({t: vec})
        images = []
        if m.side in ("left", "bimodule"):
            for s, i, r in m.ring.basis_elements():
                if (s, t) in g.compose:
                    images.append(m.act_left(r, v))
        if m.side in ("right", "bimodule"):
            acting = m.second_ring if m.side == "bimodule" else m.ring
            for s, i, r in acting.basis_elements():
                if (t, s) in g.compose:
                    images.append(m.act_right(v, r))
        for image in images:
            for u, w in image.coords.items():
                if not subspace_contains(f, comp[u], w):
                    comp[u] = subspace_sum(f, comp[u], [w])
                    frontier.append((u, w))
    return GradedSubmodule(m, comp, _validated=True)


def cyclic_submodule(m: GradedModule, x: ModuleElement) -> GradedSubmodule:
    """Rm for a homogeneous x; asserts Rm = R(sigma^-1)m and x in Rm."""
    if m.side != "left":
        raise ModuleError("cyclic submodules are computed for left modules")
    if x.is_zero() or not x.is_homogeneous():
        raise NotHomogeneous("cyclic submodule needs a nonzero homogeneous element")
    sigma = x.degree()
    g = m.ring.groupoid
    f = m.field
    comp: dict = {t: [] for t in g.elements}
    restricted: dict = {t: [] for t in g.elements}
    r_sigma = g.r[sigma]
    for s, i, r in m.ring.basis_elements():
        image = m.act_left(r, x)
        for t, vec in image.coords.items():
            comp[t] = subspace_sum(f, comp[t], [vec])
            if g.d[s] == r_sigma:
                restricted[t] = subspace_sum(f, restricted[t], [vec])
    for t in g.elements:
        if not subspace_equal(f, comp[t], restricted[t]):
            raise ModuleError("Rm != R(sigma^-1)m; the module is not graded unital")
    sub = GradedSubmodule(m, comp, _validated=True)
    if not sub.contains(x):
        raise ModuleError("m not in Rm; the module is not graded unital")
    return sub


# -- module operations -----------------------------------------------------


def direct_sum(m1: GradedModule, m2: GradedModule, name: str = "") -> GradedModule:
    if m1.ring is not m2.ring or m1.side != m2.side or m1.second_ring is not m2.second_ring:
        raise ShapeMismatch("direct sum needs the same ring and side")
    g = m1.ring.groupoid
    dims = {t: m1.dims[t] + m2.dims[t] for t in g.elements}
    basis = {
        t: [f"l:{n}" for n in m1.basis[t]] + [f"r:{n}" for n in m2.basis[t]] for t in g.elements
    }
    f = m1.field

    def _shift(vec, length, offset, total):
        out = [f.zero()] * total
        for k, c in enumerate(vec):
            out[offset + k] = c
        return tuple(out)

    lact = {}
    ract = {}
    if m1.side in ("left", "bimodule"):
        for (s, i, t, j), vec in m1.lact.items():
            st = g.compose[(s, t)]
            lact[(s, i, t, j)] = _shift(vec, m1.dims[st], 0, dims[st])
        for (s, i, t, j), vec in m2.lact.items():
            st = g.compose[(s, t)]
            lact[(s, i, t, m1.dims[t] + j)] = _shift(vec, m2.dims[st], m1.dims[st], dims[st])
    if m1.side in ("right", "bimodule"):
        for (t, j, s, i), vec in m1.ract.items():
            ts = g.compose[(t, s)]
            ract[(t, j, s, i)] = _shift(vec, m1.dims[ts], 0, dims[ts])
        for (t, j, s, i), vec in m2.ract.items():
            ts = g.compose[(t, s)]
            ract[(t, m1.dims[t] + j, s, i)] = _shift(vec, m2.dims[ts], m1.dims[ts], dims[ts])
    return GradedModule(
        m1.ring,
        m1.side,
        dims,
        basis,
        lact=lact or None,
        ract=ract or None,
        second_ring=m1.second_ring,
        name=name or f"({m1.name})+({m2.name})",
        _skip_checks=True,
    )


def quotient(m: GradedModule, n: GradedSubmodule, name: str = ""):
    """Quotient module M/N with the induced grading.

    Returns ``(Q, proj)`` where ``proj`` maps component coordinates of M onto
    the canonical complement coordinates of Q (dict degree -> Matrix).
    """
    if n.parent is not m:
        raise ShapeMismatch("quotient by a submodule of a different module")
    f = m.field
    g = m.ring.groupoid
    free_cols = {}
    for t in g.elements:
        pivots = set()
        for row in n.comp_bases[t]:
            for j, x in enumerate(row):
                if x != f.zero():
                    pivots.add(j)
                    break
        free_cols[t] = [j for j in range(m.dims[t]) if j not in pivots]
    dims = {t: len(free_cols[t]) for t in g.elements}
    basis = {t: [m.basis[t][j] + "~" for j in free_cols[t]] for t in g.elements}

    def project(t, vec):
        red = reduce_mod(f, n.comp_bases[t], vec)
        return tuple(red[j] for j in free_cols[t])

    def lift(t, qvec):
        out = [f.zero()] * m.dims[t]
        for k, j in enumerate(free_cols[t]):
            out[j] = qvec[k]
        return tuple(out)

    lact = {}
    ract = {}
    if m.side in ("left", "bimodule"):
        for t in g.elements:
            for k, j in enumerate(free_cols[t]):
                v = m.element({t: lift(t, tuple(f.one() if q == k else f.zero() for q in range(dims[t])))})
                for s, i, r in m.ring.basis_elements():
                    if (s, t) not in g.compose:
                        continue
                    st = g.compose[(s, t)]
                    image = m.act_left(r, v)
                    vec = image.coords.get(st, (f.zero(),) * m.dims[st])
                    pv = project(st, vec)
                    if any(x != f.zero() for x in pv):
                        lact[(s, i, t, k)] = pv
    if m.side in ("right", "bimodule"):
        acting = m.second_ring if m.side == "bimodule" else m.ring
        for t in g.elements:
            for k, j in enumerate(free_cols[t]):
                v = m.element({t: lift(t, tuple(f.one() if q == k else f.zero() for q in range(dims[t])))})
                for s, i, r in acting.basis_elements():
                    if (t, s) not in g.compose:
                        continue
                    ts = g.compose[(t, s)]
                    image = m.act_right(v, r)
                    vec = image.coords.get(ts, (f.zero(),) * m.dims[ts])
                    pv = project(ts, vec)
                    if any(x != f.zero() for x in pv):
                        ract[(t, k, s, i)] = pv
    q = GradedModule(
        m.ring,
        m.side,
        dims,
        basis,
        lact=lact or None,
        ract=ract or None,
        second_ring=m.second_ring,
        name=name or f"{m.name}/N",
    )
    proj = {}
    for t in g.elements:
        rows = []
        for k in range(dims[t]):
            pass
        cols = []
        for j in range(m.dims[t]):
            unit = [f.zero()] * m.dims[t]
            unit[j] = f.one()
            cols.append(project(t, tuple(unit)))
        proj[t] = (
            Matrix(f, cols).transpose() if dims[t] > 0 and m.dims[t] > 0 else Matrix.zeros(f, dims[t], m.dims[t])
        )
    return q, proj


# -- annihilators ----------------------------------------------------------


class AnnihilatorResult:
    """Left annihilator of a module element inside the ring.

    ``graded`` is True when the element was homogeneous; then ``comp_bases``
    holds per-degree RREF bases of the graded left ideal. The flat basis over
    total ring coordinates is always available.
    """

    def __init__(self, ring: GradedRing, graded: bool, comp_bases, total_basis):
        self.ring = ring
        self.graded = graded
        self.comp_bases = comp_bases
        self.total_basis = total_basis

    def dim(self) -> int:
        return len(self.total_basis)

    def is_zero(self) -> bool:
        return not self.total_basis

    def to_submodule(self, regular: GradedModule) -> GradedSubmodule:
        if not self.graded:
            raise ModuleError("annihilator of a non-homogeneous element is not graded")
        return GradedSubmodule(regular, self.comp_bases, _validated=True)


def annihilator(m: GradedModule, x: ModuleElement) -> AnnihilatorResult:
    """Kernel of r -> r.x as a subspace of the ring (graded when x is)."""
    if m.side == "right":
        raise ModuleError("annihilator is computed for left modules")
    ring = m.ring
    f = m.field
    cols = [m.flatten(m.act_left(r, x)) for _, _, r in ring.basis_elements()]
    if cols:
        mat = Matrix(f, cols).transpose()
        kernel = mat.kernel_basis()
    else:
        kernel = []
    total_basis = rowspace_basis(f, kernel)
    if x.is_zero() or x.is_homogeneous():
        g = ring.groupoid
        comp = {}
        for s in g.elements:
            rows = []
            for vec in total_basis:
                off = ring.offset(s)
                piece = vec[off : off + ring.dims[s]]
                rows.append(piece)
            comp[s] = rowspace_basis(f, [r for r in rows if any(c != f.zero() for c in r)])
        # homogeneous element: the kernel is the direct sum of its parts
        if sum(len(v) for v in comp.values()) != len(total_basis):
            raise ModuleError("graded annihilator decomposition failed")
        return AnnihilatorResult(ring, True, comp, total_basis)
    return AnnihilatorResult(ring, False, None, total_basis)
