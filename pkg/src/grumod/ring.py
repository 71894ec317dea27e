"""Groupoid graded rings as per-component vector spaces with sparse structure
constants; grading and associativity are verified exhaustively at build time.

Includes the groupoid-algebra and partial-skew-groupoid-ring constructors and
the unitality checks (two-sided identity per unit component, global identity).
"""

from __future__ import annotations

from itertools import product

from .fields import Field
from .groupoid import Groupoid
from .linalg import Matrix, rowspace_basis

class RingError(ValueError):
    pass


class GradingViolation(RingError):
    pass


class NotAssociative(RingError):
    def __init__(self, witness, message):
        self.witness = witness
        super().__init__(message)


class NotCentralIdempotent(RingError):
    pass


class NotIsomorphism(RingError):
    pass


class ExtensionLawFails(RingError):
    def __init__(self, g, h):
        self.pair = (g, h)
        super().__init__(f"alpha_({g}{h}) does not extend alpha_{g} o alpha_{h}")


class RingElement:
    """Element of a graded ring, stored as a sparse degree -> vector map."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: "GradedRing", coords):
        self.ring = ring
        clean = {}
        z = ring.field.zero()
        for sigma, vec in coords.items():
            if sigma not in ring.groupoid.index:
                raise RingError(f"unknown degree {sigma!r}")
            vec = tuple(ring.field.coerce(x) for x in vec)
            if len(vec) != ring.dims[sigma]:
                raise RingError(f"component {sigma} expects length {ring.dims[sigma]}")
            if any(x != z for x in vec):
                clean[sigma] = vec
        self.coords = clean

    def is_zero(self) -> bool:
        return not self.coords

    def support(self) -> tuple:
        return tuple(s for s in self.ring.groupoid.elements if s in self.coords)

    def component(self, sigma) -> tuple:
        return self.coords.get(sigma, (self.ring.field.zero(),) * self.ring.dims[sigma])

    def __add__(self, other: "RingElement") -> "RingElement":
        f = self.ring.field
        out = dict(self.coords)
        for s, vec in other.coords.items():
            cur = out.get(s, (f.zero(),) * len(vec))
            out[s] = tuple(f.add(a, b) for a, b in zip(cur, vec))
        return RingElement(self.ring, out)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + other.scale(self.ring.field.neg(self.ring.field.one()))

    def scale(self, c) -> "RingElement":
        f = self.ring.field
        c = f.coerce(c)
        return RingElement(self.ring, {s: tuple(f.mul(c, x) for x in v) for s, v in self.coords.items()})

    def __mul__(self, other: "RingElement") -> "RingElement":
        ring = self.ring
        f = ring.field
        g = ring.groupoid
        acc: dict = {}
        for s, vs in self.coords.items():
            for t, vt in other.coords.items():
                if (s, t) not in g.compose:
                    continue
                st = g.compose[(s, t)]
                target = acc.setdefault(st, [f.zero()] * ring.dims[st])
                for i, a in enumerate(vs):
                    if a == f.zero():
                        continue
                    for j, b in enumerate(vt):
                        if b == f.zero():
                            continue
                        cvec = ring.mult.get((s, i, t, j))
                        if cvec is None:
                            continue
                        coef = f.mul(a, b)
                        for k, c in enumerate(cvec):
                            if c != f.zero():
                                target[k] = f.add(target[k], f.mul(coef, c))
        return RingElement(ring, {s: tuple(v) for s, v in acc.items()})

    def __eq__(self, other):
        return isinstance(other, RingElement) and self.ring is other.ring and self.coords == other.coords

    def __hash__(self):
        return hash(tuple(sorted((s, v) for s, v in self.coords.items())))

    def to_json(self) -> dict:
        f = self.ring.field
        return {s: [f.render(x) for x in self.coords[s]] for s in self.support()}

    def __repr__(self):
        if self.is_zero():
            return "RingElement(0)"
        f = self.ring.field
        parts = []
        for s in self.support():
            for i, x in enumerate(self.coords[s]):
                if x != f.zero():
                    name = self.ring.basis[s][i]
                    parts.append(name if x == f.one() else f"{f.render(x)}*{name}")
        return "RingElement(" + " + ".join(parts) + ")"


class ObjectUnitReport:
    """Outcome of the object-unitality check.

    ``units`` maps each unit e with a nonzero component to the two-sided
    identity of R_e when one exists; ``witnesses`` lists the failures.
    """

    def __init__(self, is_object_unital: bool, units: dict, witnesses: list):
        self.is_object_unital = is_object_unital
        self.units = units
        self.witnesses = witnesses

    @property
    def unit_set(self) -> list:
        return list(self.units.values())

    def to_json(self) -> dict:
        return {
            "object_unital": self.is_object_unital,
            "units": {e: u.to_json() for e, u in self.units.items()},
            "witnesses": self.witnesses,
        }


class GradedRing:
    """A groupoid graded ring given by component dimensions and structure
    constants ``mult[(sigma, i, tau, j)] -> vector over the basis of
    R_{sigma tau}`` (absent key = zero product).
    """

    def __init__(self, groupoid: Groupoid, field: Field, dims, basis, mult, name: str = ""):
        self.groupoid = groupoid
        self.field = field
        self.dims = {s: int(dims.get(s, 0)) for s in groupoid.elements}
        for s, n in self.dims.items():
            if n < 0:
                raise RingError(f"component {s} has negative dimension")
        self.basis = {}
        for s in groupoid.elements:
            names = list(basis.get(s, [])) if basis else []
            if not names:
                names = [f"{s}[{i}]" for i in range(self.dims[s])]
            if len(names) != self.dims[s]:
                raise RingError(f"component {s}: {len(names)} basis names for dim {self.dims[s]}")
            self.basis[s] = tuple(names)
        self.mult = {}
        for (s, i, t, j), vec in mult.items():
            if (s, t) not in groupoid.compose:
                raise GradingViolation(
                    f"structure constant on non-composable pair ({s},{t})"
                )
            st = groupoid.compose[(s, t)]
            if not (0 <= i < self.dims[s] and 0 <= j < self.dims[t]):
                raise RingError(f"structure constant index out of range at ({s},{i},{t},{j})")
            vec = tuple(field.coerce(x) for x in vec)
            if len(vec) != self.dims[st]:
                raise RingError(
                    f"product of ({s},{i}) and ({t},{j}) must live in R_{st} of dim {self.dims[st]}"
                )
            if any(x != field.zero() for x in vec):
                self.mult[(s, i, t, j)] = vec
        self.name = name
        self._offsets = {}
        off = 0
        for s in groupoid.elements:
            self._offsets[s] = off
            off += self.dims[s]
        self.total_dim = off
        self._check_associativity()

    # -- associativity ---------------------------------------------------

    def _check_associativity(self):
        g = self.groupoid
        f = self.field
        z = f.zero()
        supported = [s for s in g.elements if self.dims[s] > 0]
        for s, t in product(supported, supported):
            if (s, t) not in g.compose:
                continue
            st = g.compose[(s, t)]
            for u in supported:
                if (t, u) not in g.compose:
                    continue
                tu = g.compose[(t, u)]
                stu = g.compose[(st, u)]
                for i in range(self.dims[s]):
                    for j in range(self.dims[t]):
                        ab = self.mult.get((s, i, t, j))
                        for k in range(self.dims[u]):
                            left = [z] * self.dims[stu]
                            if ab is not None:
                                for m, c in enumerate(ab):
                                    if c == z:
                                        continue
                                    v = self.mult.get((st, m, u, k))
                                    if v is None:
                                        continue
                                    for q, x in enumerate(v):
                                        left[q] = f.add(left[q], f.mul(c, x))
                            bc = self.mult.get((t, j, u, k))
                            right = [z] * self.dims[stu]
                            if bc is not None:
                                for m, c in enumerate(bc):
                                    if c == z:
                                        continue
                                    v = self.mult.get((s, i, tu, m))
                                    if v is None:
                                        continue
                                    for q, x in enumerate(v):
                                        right[q] = f.add(right[q], f.mul(c, x))
                            if left != right:
                                w = ((s, i), (t, j), (u, k))
                                raise NotAssociative(w, f"(ab)c != a(bc) at {w}")

    # -- elements ----------------------------------------------------------

    def zero(self) -> RingElement:
        return RingElement(self, {})

    def element(self, coords) -> RingElement:
        return RingElement(self, coords)

    def basis_element(self, sigma, i: int) -> RingElement:
        vec = [self.field.zero()] * self.dims[sigma]
        vec[i] = self.field.one()
        return RingElement(self, {sigma: vec})

    def basis_elements(self):
        for s in self.groupoid.elements:
            for i in range(self.dims[s]):
                yield s, i, self.basis_element(s, i)

    def offset(self, sigma) -> int:
        return self._offsets[sigma]

    def flatten(self, x: RingElement) -> tuple:
        vec = [self.field.zero()] * self.total_dim
        for s, v in x.coords.items():
            off = self._offsets[s]
            for i, c in enumerate(v):
                vec[off + i] = c
        return tuple(vec)

    def unflatten(self, vec) -> RingElement:
        coords = {}
        for s in self.groupoid.elements:
            n = self.dims[s]
            if n:
                off = self._offsets[s]
                coords[s] = tuple(vec[off + i] for i in range(n))
        return RingElement(self, coords)

    def mult_vector(self, s, i, t, j):
        """Coordinates of b_{s,i} * b_{t,j} in R_{st}; None when zero."""
        return self.mult.get((s, i, t, j))

    def left_mult_total_matrix(self, x: RingElement) -> Matrix:
        """Total-coordinates matrix of y -> x*y."""
        cols = []
        for t, j, b in self.basis_elements():
            cols.append(self.flatten(x * b))
        if not cols:
            return Matrix.zeros(self.field, self.total_dim, 0)
        return Matrix(self.field, cols).transpose()

    def right_mult_total_matrix(self, x: RingElement) -> Matrix:
        cols = []
        for s, i, b in self.basis_elements():
            cols.append(self.flatten(b * x))
        if not cols:
            return Matrix.zeros(self.field, self.total_dim, 0)
        return Matrix(self.field, cols).transpose()

    def support(self) -> tuple:
        return tuple(s for s in self.groupoid.elements if self.dims[s] > 0)

    def to_json(self, groupoid_name: str = "G") -> dict:
        f = self.field
        mult = []
        for (s, i, t, j) in sorted(
            self.mult,
            key=lambda k: (self.groupoid.index[k[0]], k[1], self.groupoid.index[k[2]], k[3]),
        ):
            st = self.groupoid.compose[(s, t)]
            vec = self.mult[(s, i, t, j)]
            out = {str(k): f.render(x) for k, x in enumerate(vec) if x != f.zero()}
            mult.append({"l": [s, i], "r": [t, j], "out": {st: out}})
        return {
            "groupoid": groupoid_name,
            "field": f.to_spec(),
            "components": {
                s: {"dim": self.dims[s], "basis": list(self.basis[s])}
                for s in self.groupoid.elements
                if self.dims[s] > 0
            },
            "mult": mult,
        }

    def __repr__(self):
        label = self.name or "GradedRing"
        return f"{label}(total dim {self.total_dim} over {self.field!r})"


def build_graded_ring(groupoid, field, dims, mult, basis=None, name: str = "") -> GradedRing:
    return GradedRing(groupoid, field, dims, basis or {}, mult, name=name)


def groupoid_algebra(field: Field, g: Groupoid, name: str = "") -> GradedRing:
    """The groupoid algebra K[G]: one-dimensional components, sigma*tau =
    sigma tau when composable and 0 otherwise.
    """
    dims = {s: 1 for s in g.elements}
    basis = {s: [s] for s in g.elements}
    mult = {}
    one = field.one()
    for (s, t), st in g.compose.items():
        mult[(s, 0, t, 0)] = (one,)
    return GradedRing(g, field, dims, basis, mult, name=name or "groupoid-algebra")


# -- unitality ------------------------------------------------------------


def _component_identity(ring: GradedRing, e):
    """Two-sided identity of the unit component R_e, or None."""
    n = ring.dims[e]
    f = ring.field
    if n == 0:
        return None
    rows = []
    rhs = []
    z = f.zero()
    for j in range(n):
        # u * b_j = b_j   (row block over output coordinates)
        for k in range(n):
            row = []
            for i in range(n):
                vec = ring.mult.get((e, i, e, j))
                row.append(vec[k] if vec is not None else z)
            rows.append(row)
            rhs.append(f.one() if k == j else z)
        # b_j * u = b_j
        for k in range(n):
            row = []
            for i in range(n):
                vec = ring.mult.get((e, j, e, i))
                row.append(vec[k] if vec is not None else z)
            rows.append(row)
            rhs.append(f.one() if k == j else z)
    sol = Matrix(f, rows).solve(rhs)
    if sol is None:
        return None
    return RingElement(ring, {e: sol})


def is_object_unital(ring: GradedRing) -> ObjectUnitReport:
    """Find per-unit identities and verify they act as local identities on
    every homogeneous component.
    """
    g = ring.groupoid
    units = {}
    witnesses = []
    for e in g.units:
        if ring.dims[e] == 0:
            continue
        u = _component_identity(ring, e)
        if u is None:
            witnesses.append({"kind": "no-identity", "unit": e})
        else:
            units[e] = u
    for s in g.elements:
        if ring.dims[s] == 0:
            continue
        er, ed = g.r[s], g.d[s]
        left_unit = units.get(er)
        right_unit = units.get(ed)
        for i in range(ring.dims[s]):
            x = ring.basis_element(s, i)
            lhs = left_unit * x if left_unit is not None else ring.zero()
            if lhs != x:
                witnesses.append({"kind": "left-identity-fails", "degree": s, "basis": i, "unit": er})
                break
            rhs = x * right_unit if right_unit is not None else ring.zero()
            if rhs != x:
                witnesses.append({"kind": "right-identity-fails", "degree": s, "basis": i, "unit": ed})
                break
    ok = not witnesses
    return ObjectUnitReport(ok, units, witnesses)


def is_unital(ring: GradedRing):
    """Solve for a two-sided identity of the whole ring.

    Returns ``(True, identity)`` or ``(False, None)``.
    """
    f = ring.field
    n = ring.total_dim
    if n == 0:
        return True, ring.zero()
    basis = list(ring.basis_elements())
    rows = []
    rhs = []
    for _, _, b in basis:
        left_cols = [ring.flatten(x * b) for _, _, x in basis]
        right_cols = [ring.flatten(b * x) for _, _, x in basis]
        target = ring.flatten(b)
        for k in range(n):
            rows.append([col[k] for col in left_cols])
            rhs.append(target[k])
        for k in range(n):
            rows.append([col[k] for col in right_cols])
            rhs.append(target[k])
    sol = Matrix(f, rows).solve(rhs)
    if sol is None:
        return False, None
    return True, ring.unflatten(sol)


def homogeneous_decompose(x: RingElement) -> list:
    """The homogeneous parts of x in groupoid element order."""
    return [(s, RingElement(x.ring, {s: x.coords[s]})) for s in x.support()]


def support_subgroupoid(ring: GradedRing) -> Groupoid:
    """Smallest subgroupoid containing the degrees of nonzero components."""
    g = ring.groupoid
    closure = set(ring.support())
    changed = True
    while changed:
        changed = False
        for s in list(closure):
            if g.inverse[s] not in closure:
                closure.add(g.inverse[s])
                changed = True
        for s, t in product(list(closure), list(closure)):
            st = g.compose.get((s, t))
            if st is not None and st not in closure:
                closure.add(st)
                changed = True
    elements = [e for e in g.elements if e in closure]
    inverse = {e: g.inverse[e] for e in elements}
    compose = {(a, b): c for (a, b), c in g.compose.items() if a in closure and b in closure}
    return Groupoid(elements, inverse, compose)


# -- commutative coefficient algebras and partial actions ------------------


class CommutativeAlgebra:
    """Unital commutative associative algebra over a field, by structure
    constants ``mult[(i, j)] -> coordinate vector``.
    """

    def __init__(self, field: Field, dim: int, mult, basis_names=None):
        self.field = field
        self.dim = dim
        self.basis_names = tuple(basis_names or [f"a{i}" for i in range(dim)])
        z = field.zero()
        self.mult = {}
        for (i, j), vec in mult.items():
            vec = tuple(field.coerce(x) for x in vec)
            if len(vec) != dim:
                raise RingError("algebra structure constant of wrong length")
            if any(x != z for x in vec):
                self.mult[(i, j)] = vec
        for i in range(dim):
            for j in range(dim):
                if self.mult.get((i, j), (z,) * dim) != self.mult.get((j, i), (z,) * dim):
                    raise RingError(f"coefficient algebra is not commutative at ({i},{j})")
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    if self._triple(i, j, k, left=True) != self._triple(i, j, k, left=False):
                        raise NotAssociative(((i,), (j,), (k,)), "coefficient algebra not associative")
        self.identity = self._solve_identity()
        if self.identity is None:
            raise RingError("coefficient algebra has no identity")

    def _triple(self, i, j, k, left: bool):
        f = self.field
        z = f.zero()
        out = [z] * self.dim
        if left:
            ab = self.mult.get((i, j))
            if ab is None:
                return tuple(out)
            for m, c in enumerate(ab):
                if c == z:
                    continue
                v = self.mult.get((m, k))
                if v is None:
                    continue
                for q, x in enumerate(v):
                    out[q] = f.add(out[q], f.mul(c, x))
        else:
            bc = self.mult.get((j, k))
            if bc is None:
                return tuple(out)
            for m, c in enumerate(bc):
                if c == z:
                    continue
                v = self.mult.get((i, m))
                if v is None:
                    continue
                for q, x in enumerate(v):
                    out[q] = f.add(out[q], f.mul(c, x))
        return tuple(out)

    def _solve_identity(self):
        f = self.field
        z = f.zero()
        rows, rhs = [], []
        for j in range(self.dim):
            for k in range(self.dim):
                rows.append([(self.mult.get((i, j)) or (z,) * self.dim)[k] for i in range(self.dim)])
                rhs.append(f.one() if k == j else z)
        return Matrix(f, rows).solve(rhs)

    def multiply(self, u, v) -> tuple:
        f = self.field
        z = f.zero()
        out = [z] * self.dim
        for i, a in enumerate(u):
            if a == z:
                continue
            for j, b in enumerate(v):
                if b == z:
                    continue
                vec = self.mult.get((i, j))
                if vec is None:
                    continue
                c = f.mul(a, b)
                for k, x in enumerate(vec):
                    out[k] = f.add(out[k], f.mul(c, x))
        return tuple(out)


class PartialActionSpec:
    """Data of a unital partial action of a groupoid on a commutative algebra:
    a central idempotent 1_g per element and an isomorphism matrix
    ``iso[g]: A*1_{g^-1} -> A*1_g`` in the canonical RREF ideal bases.
    """

    def __init__(self, groupoid: Groupoid, algebra: CommutativeAlgebra, idempotents, iso):
        self.groupoid = groupoid
        self.algebra = algebra
        self.idempotents = {g: tuple(algebra.field.coerce(x) for x in v) for g, v in idempotents.items()}
        self.iso = dict(iso)

    def ideal_basis(self, g) -> list:
        a = self.algebra
        e = self.idempotents[g]
        rows = []
        for i in range(a.dim):
            unit_vec = [a.field.zero()] * a.dim
            unit_vec[i] = a.field.one()
            rows.append(a.multiply(tuple(unit_vec), e))
        return rowspace_basis(a.field, rows)


def _express(field, basis_rows, vec):
    if not basis_rows:
        return None if any(x != field.zero() for x in vec) else ()
    return Matrix(field, basis_rows).transpose().solve(vec)


def partial_skew_ring(spec: PartialActionSpec, name: str = "") -> GradedRing:
    """Build the partial skew groupoid ring from a validated partial action.

    Components are the ideals A*1_g; the product of basis elements u delta_g
    and v delta_h on a composable pair is ``u * alpha_g(v * 1_{g^-1})``.
    """
    g = spec.groupoid
    a = spec.algebra
    f = a.field
    for elem in g.elements:
        if elem not in spec.idempotents:
            raise RingError(f"missing idempotent for {elem}")
        e = spec.idempotents[elem]
        if a.multiply(e, e) != e:
            raise NotCentralIdempotent(f"1_{elem} is not idempotent")
        # centrality is automatic in a commutative algebra; the constructor
        # of CommutativeAlgebra already rejected noncommutative input
    bases = {elem: spec.ideal_basis(elem) for elem in g.elements}
    iso = {}
    for elem in g.elements:
        m = spec.iso.get(elem)
        src = bases[g.inverse[elem]]
        dst = bases[elem]
        if m is None:
            raise RingError(f"missing isomorphism matrix for {elem}")
        m = m if isinstance(m, Matrix) else Matrix(f, m)
        if (m.rows, m.cols) != (len(dst), len(src)):
            raise NotIsomorphism(f"alpha_{elem} has shape {m.rows}x{m.cols}, expected {len(dst)}x{len(src)}")
        if m.rows != m.cols or m.inverse() is None:
            raise NotIsomorphism(f"alpha_{elem} is not bijective")
        iso[elem] = m

    def to_ambient(basis_rows, coeffs):
        out = [f.zero()] * a.dim
        for c, row in zip(coeffs, basis_rows):
            if c != f.zero():
                out = [f.add(out[k], f.mul(c, row[k])) for k in range(a.dim)]
        return tuple(out)

    def apply_alpha(elem, vec_ambient):
        src = bases[g.inverse[elem]]
        coeffs = _express(f, src, vec_ambient)
        if coeffs is None:
            raise NotIsomorphism(f"alpha_{elem} applied outside A*1_({g.inverse[elem]})")
        img = iso[elem].apply(coeffs)
        return to_ambient(bases[elem], img)

    # multiplicativity of each alpha_g on its ideal
    for elem in g.elements:
        src = bases[g.inverse[elem]]
        for u in src:
            for v in src:
                left = apply_alpha(elem, a.multiply(u, v))
                right = a.multiply(apply_alpha(elem, u), apply_alpha(elem, v))
                if left != right:
                    raise NotIsomorphism(f"alpha_{elem} is not multiplicative")

    # A_g must sit inside A_{r(g)} as an ideal: 1_g * 1_{r(g)} = 1_g
    for elem in g.elements:
        er = g.r[elem]
        e = spec.idempotents[elem]
        if a.multiply(e, spec.idempotents[er]) != e:
            raise RingError(f"A_{elem} is not contained in A_{er}")

    # extension law on composable pairs
    from .linalg import subspace_intersection

    for (x, y) in g.compose:
        xy = g.compose[(x, y)]
        dom = subspace_intersection(f, bases[g.inverse[x]], bases[y], a.dim)
        for w in dom:
            coeffs = _express(f, bases[y], w)
            pre = to_ambient(bases[g.inverse[y]], iso[y].inverse().apply(coeffs))
            if a.multiply(pre, spec.idempotents[g.inverse[xy]]) != pre:
                raise ExtensionLawFails(x, y)
            lhs = apply_alpha(xy, pre)
            rhs = apply_alpha(x, w)
            if lhs != rhs:
                raise ExtensionLawFails(x, y)

    dims = {elem: len(bases[elem]) for elem in g.elements}
    basis_names = {
        elem: [f"{elem}.d{i}" for i in range(dims[elem])] for elem in g.elements
    }
    mult = {}
    for (x, y), xy in g.compose.items():
        for i, u in enumerate(bases[x]):
            for j, v in enumerate(bases[y]):
                moved = apply_alpha(x, a.multiply(v, spec.idempotents[g.inverse[x]]))
                prod = a.multiply(u, moved)
                coeffs = _express(f, bases[xy], prod)
                if coeffs is None:
                    raise GradingViolation(
                        f"product of A_{x} and A_{y} leaves A_{xy}"
                    )
                mult[(x, i, y, j)] = tuple(coeffs)
    return GradedRing(g, f, dims, basis_names, mult, name=name or "partial-skew-ring")


def partial_skew_unit_comparison(spec: PartialActionSpec, ring: GradedRing) -> dict:
    """Report both unit sets for a partial skew ring: the computed per-unit
    identities and the candidate family 1_g delta_{r(g)}.
    """
    report = is_object_unital(ring)
    f = ring.field
    claimed = {}
    for elem in spec.groupoid.elements:
        er = spec.groupoid.r[elem]
        coeffs = _express(f, spec.ideal_basis(er), spec.idempotents[elem])
        if coeffs is not None:
            claimed[elem] = RingElement(ring, {er: coeffs}).to_json()
    return {
        "computed_units": {e: u.to_json() for e, u in report.units.items()},
        "claimed_family": claimed,
        "object_unital": report.is_object_unital,
    }
