"""Degree-indexed homomorphism spaces between graded modules.

A map of degree set D sends the component at lambda into the sum of target
components at ``lambda sigma`` (left modules) or ``sigma lambda`` (right
modules) over ``sigma in D``. Maps are stored as total-coordinate matrices
with a degree mask; all HOM spaces are kernel bases of exact linear systems,
so their ordering is deterministic.
"""

from __future__ import annotations

from .groupoid import star_set
from .linalg import Matrix, rowspace_basis, subspace_contains
from .module import (
    GradedModule,
    GradedSubmodule,
    ModuleElement,
    is_graded_unital,
    object_unit_report,
    quotient,
    regular_module,
)
from .ring import RingElement


class HomError(ValueError):
    pass


class RingMismatch(HomError):
    pass


class ConfigurationMismatch(HomError):
    pass


class PreconditionFailed(HomError):
    pass


def _acting_ring(module: GradedModule, linearity: str):
    if linearity == "left":
        if module.side == "right":
            raise ConfigurationMismatch("left linearity over a right module")
        return module.ring
    if module.side == "left":
        raise ConfigurationMismatch("right linearity over a left module")
    return module.second_ring if module.side == "bimodule" else module.ring


def default_linearity(module: GradedModule) -> str:
    return "right" if module.side == "right" else "left"


def admissible_pairs(source: GradedModule, target: GradedModule, degrees, linearity: str):
    """Component pairs (lambda, mu) a map of the given degree set may hit."""
    g = source.ring.groupoid
    pairs = []
    if degrees is None:
        for lam in g.elements:
            if source.dims[lam] == 0:
                continue
            for mu in g.elements:
                if target.dims[mu] > 0:
                    pairs.append((lam, mu))
        return pairs
    for lam in g.elements:
        if source.dims[lam] == 0:
            continue
        for sigma in g.elements:
            if sigma not in degrees:
                continue
            if linearity == "left":
                if (lam, sigma) not in g.compose:
                    continue
                mu = g.compose[(lam, sigma)]
            else:
                if (sigma, lam) not in g.compose:
                    continue
                mu = g.compose[(sigma, lam)]
            if target.dims[mu] > 0 and (lam, mu) not in pairs:
                pairs.append((lam, mu))
    return pairs


class GradedMap:
    """R-linear map between graded modules with a declared degree set.

    ``degree`` is a frozenset of groupoid elements, or ``None`` for a plain
    (ungraded) linear map; ``matrix`` acts on total coordinates.
    """

    def __init__(self, source, target, matrix: Matrix, degree, linearity=None, _validated=False):
        if source.ring is not target.ring:
            raise RingMismatch("maps need a common ring")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.degree = None if degree is None else frozenset(degree)
        self.linearity = linearity or default_linearity(source)
        if (matrix.rows, matrix.cols) != (target.total_dim, source.total_dim):
            raise HomError("map matrix has the wrong shape")
        if not _validated:
            self.validate()

    def validate(self):
        f = self.source.field
        z = f.zero()
        if self.degree is not None:
            allowed = set(admissible_pairs(self.source, self.target, self.degree, self.linearity))
            g = self.source.ring.groupoid
            for lam in g.elements:
                for mu in g.elements:
                    if self.source.dims[lam] == 0 or self.target.dims[mu] == 0:
                        continue
                    if (lam, mu) in allowed:
                        continue
                    for j in range(self.source.dims[lam]):
                        for i in range(self.target.dims[mu]):
                            if self.matrix[self.target.offset(mu) + i, self.source.offset(lam) + j] != z:
                                raise HomError(
                                    f"map hits {mu} from {lam}, outside its degree set"
                                )
        ring = _acting_ring(self.source, self.linearity)
        if _acting_ring(self.target, self.linearity) is not ring:
            raise ConfigurationMismatch("source and target disagree on the acting ring")
        for _, _, r in ring.basis_elements():
            if self.linearity == "left":
                a = self.source.left_action_total_matrix(r)
                b = self.target.left_action_total_matrix(r)
            else:
                a = self.source.right_action_total_matrix(r)
                b = self.target.right_action_total_matrix(r)
            if self.matrix @ a != b @ self.matrix:
                raise HomError("map is not linear over the acting ring")

    # -- algebra ----------------------------------------------------------

    def apply(self, x: ModuleElement) -> ModuleElement:
        if x.module is not self.source:
            raise HomError("element of a different module")
        return self.target.unflatten(self.matrix.apply(self.source.flatten(x)))

    def compose(self, other: "GradedMap") -> "GradedMap":
        """self o other."""
        if other.target is not self.source:
            raise HomError("composition mismatch")
        if self.linearity != other.linearity:
            raise ConfigurationMismatch("composition across linearities")
        g = self.source.ring.groupoid
        if self.degree is None or other.degree is None:
            deg = None
        elif self.linearity == "left":
            deg = frozenset(star_set(g, other.degree, self.degree))
        else:
            deg = frozenset(star_set(g, self.degree, other.degree))
        return GradedMap(
            other.source,
            self.target,
            self.matrix @ other.matrix,
            deg,
            linearity=self.linearity,
            _validated=True,
        )

    def __add__(self, other: "GradedMap") -> "GradedMap":
        if self.source is not other.source or self.target is not other.target:
            raise HomError("sum of maps with different endpoints")
        deg = None
        if self.degree is not None and other.degree is not None:
            deg = self.degree | other.degree
        return GradedMap(
            self.source,
            self.target,
            self.matrix + other.matrix,
            deg,
            linearity=self.linearity,
            _validated=True,
        )

    def scale(self, c) -> "GradedMap":
        return GradedMap(
            self.source, self.target, self.matrix.scale(c), self.degree,
            linearity=self.linearity, _validated=True,
        )

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def rank(self) -> int:
        return self.matrix.rank()

    def is_injective(self) -> bool:
        return self.rank() == self.source.total_dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.total_dim

    def is_bijective(self) -> bool:
        return self.source.total_dim == self.target.total_dim and self.is_injective()

    def block(self, lam, mu) -> Matrix:
        rows = []
        for i in range(self.target.dims[mu]):
            row = []
            for j in range(self.source.dims[lam]):
                row.append(self.matrix[self.target.offset(mu) + i, self.source.offset(lam) + j])
            rows.append(row)
        if not rows:
            return Matrix.zeros(self.source.field, self.target.dims[mu], self.source.dims[lam])
        return Matrix(self.source.field, rows)

    def computed_degrees(self) -> frozenset:
        """Degrees actually hit by nonzero blocks (subset of the declared set)."""
        g = self.source.ring.groupoid
        z = self.source.field.zero()
        out = set()
        for lam in g.elements:
            if self.source.dims[lam] == 0:
                continue
            for mu in g.elements:
                if self.target.dims[mu] == 0:
                    continue
                blk = self.block(lam, mu)
                if blk.is_zero():
                    continue
                for sigma in g.elements:
                    if self.linearity == "left":
                        ok = (lam, sigma) in g.compose and g.compose[(lam, sigma)] == mu
                    else:
                        ok = (sigma, lam) in g.compose and g.compose[(sigma, lam)] == mu
                    if ok:
                        out.add(sigma)
        return frozenset(out)

    def degree_parts(self) -> dict:
        """Unique decomposition into singleton-degree maps."""
        if self.degree is None:
            raise HomError("an ungraded map has no degree decomposition")
        g = self.source.ring.groupoid
        f = self.source.field
        parts = {}
        acc = Matrix.zeros(f, self.target.total_dim, self.source.total_dim)
        for sigma in sorted(self.degree, key=lambda e: g.index[e]):
            rows = [list(r) for r in Matrix.zeros(f, self.target.total_dim, self.source.total_dim).data]
            for lam in g.elements:
                if self.source.dims[lam] == 0:
                    continue
                if self.linearity == "left":
                    if (lam, sigma) not in g.compose:
                        continue
                    mu = g.compose[(lam, sigma)]
                else:
                    if (sigma, lam) not in g.compose:
                        continue
                    mu = g.compose[(sigma, lam)]
                for i in range(self.target.dims[mu]):
                    for j in range(self.source.dims[lam]):
                        rows[self.target.offset(mu) + i][self.source.offset(lam) + j] = self.matrix[
                            self.target.offset(mu) + i, self.source.offset(lam) + j
                        ]
            part = Matrix(f, rows)
            if not part.is_zero():
                parts[sigma] = GradedMap(
                    self.source, self.target, part, frozenset([sigma]),
                    linearity=self.linearity, _validated=True,
                )
            acc = acc + part
        if acc != self.matrix:
            raise HomError("degree decomposition does not reassemble the map")
        return parts

    def flat(self) -> tuple:
        return tuple(x for row in self.matrix.data for x in row)

    def __eq__(self, other):
        return (
            isinstance(other, GradedMap)
            and self.source is other.source
            and self.target is other.target
            and self.matrix == other.matrix
        )

    def to_json(self) -> dict:
        g = self.source.ring.groupoid
        f = self.source.field
        if self.degree is None:
            return {
                "degree": None,
                "matrix": self.matrix.to_lists(rendered=True),
            }
        blocks = {}
        for lam in g.elements:
            if self.source.dims[lam] == 0:
                continue
            stacked = []
            for sigma in sorted(self.degree, key=lambda e: g.index[e]):
                if self.linearity == "left":
                    if (lam, sigma) not in g.compose:
                        continue
                    mu = g.compose[(lam, sigma)]
                else:
                    if (sigma, lam) not in g.compose:
                        continue
                    mu = g.compose[(sigma, lam)]
                stacked.extend(self.block(lam, mu).to_lists(rendered=True))
            if stacked:
                blocks[lam] = stacked
        return {
            "degree": sorted(self.degree, key=lambda e: g.index[e]),
            "blocks": blocks,
        }

    def __repr__(self):
        deg = "ungraded" if self.degree is None else "{" + ",".join(sorted(self.degree)) + "}"
        return f"GradedMap({self.source.name}->{self.target.name}, degree {deg})"


def zero_map(source, target, degree=frozenset(), linearity=None) -> GradedMap:
    return GradedMap(
        source,
        target,
        Matrix.zeros(source.field, target.total_dim, source.total_dim),
        degree,
        linearity=linearity,
        _validated=True,
    )


def identity_map(m: GradedModule) -> GradedMap:
    return GradedMap(
        m,
        m,
        Matrix.identity(m.field, m.total_dim),
        frozenset(m.ring.groupoid.units),
        _validated=True,
    )


def inclusion_map(sub: GradedSubmodule, sub_module: GradedModule | None = None) -> GradedMap:
    """Inclusion of a submodule (as a standalone module) into its parent."""
    m = sub.parent
    f = m.field
    if sub_module is None:
        sub_module = sub.to_module()
    cols = []
    for t in m.ring.groupoid.elements:
        for row in sub.comp_bases[t]:
            vec = [f.zero()] * m.total_dim
            off = m.offset(t)
            for k, c in enumerate(row):
                vec[off + k] = c
            cols.append(tuple(vec))
    mat = (
        Matrix(f, cols).transpose()
        if cols
        else Matrix.zeros(f, m.total_dim, 0)
    )
    return GradedMap(
        sub_module, m, mat, frozenset(m.ring.groupoid.units),
        linearity=default_linearity(m), _validated=True,
    )


def quotient_map(m: GradedModule, n: GradedSubmodule):
    """Quotient module and its projection as a graded map."""
    q, proj = quotient(m, n)
    f = m.field
    g = m.ring.groupoid
    rows_total = []
    for mu in g.elements:
        block = proj[mu]
        for i in range(block.rows):
            row = [f.zero()] * m.total_dim
            off = m.offset(mu)
            for j in range(block.cols):
                row[off + j] = block[i, j]
            rows_total.append(row)
    mat = Matrix(f, rows_total) if rows_total else Matrix.zeros(f, 0, m.total_dim)
    return q, GradedMap(
        m, q, mat, frozenset(g.units), linearity=default_linearity(m), _validated=True
    )


# -- the solver -------------------------------------------------------------


class MapSolver:
    """Exact linear system over the entries of a map with a degree mask.

    Homogeneous rows impose linearity over the acting ring; affine rows come
    from composition constraints like ``g o h = f`` or ``phi o incl = id``.
    """

    def __init__(self, source: GradedModule, target: GradedModule, degrees, linearity=None):
        if source.ring is not target.ring:
            raise RingMismatch("solver needs a common ring")
        self.source = source
        self.target = target
        self.degrees = None if degrees is None else frozenset(degrees)
        self.linearity = linearity or default_linearity(source)
        f = source.field
        self.field = f
        pairs = admissible_pairs(source, target, self.degrees, self.linearity)
        self.positions = []
        for lam in source.ring.groupoid.elements:
            for mu in source.ring.groupoid.elements:
                if (lam, mu) in pairs:
                    for i in range(target.dims[mu]):
                        for j in range(source.dims[lam]):
                            self.positions.append((target.offset(mu) + i, source.offset(lam) + j))
        self.pos_index = {p: k for k, p in enumerate(self.positions)}
        self.rows: list = []
        self.rhs: list = []
        self._add_linearity_rows()

    def _matrix_from_unknowns(self, values) -> Matrix:
        f = self.field
        rows = [[f.zero()] * self.source.total_dim for _ in range(self.target.total_dim)]
        for k, (p, q) in enumerate(self.positions):
            rows[p][q] = values[k]
        return Matrix(f, rows) if rows else Matrix.zeros(f, 0, self.source.total_dim)

    def _add_linearity_rows(self):
        ring = _acting_ring(self.source, self.linearity)
        if _acting_ring(self.target, self.linearity) is not ring:
            raise ConfigurationMismatch("source and target disagree on the acting ring")
        f = self.field
        z = f.zero()
        for _, _, r in ring.basis_elements():
            if self.linearity == "left":
                a = self.source.left_action_total_matrix(r)
                b = self.target.left_action_total_matrix(r)
            else:
                a = self.source.right_action_total_matrix(r)
                b = self.target.right_action_total_matrix(r)
            # (F a - b F)[p, q] = 0
            for p in range(self.target.total_dim):
                for q in range(self.source.total_dim):
                    row = [z] * len(self.positions)
                    nonzero = False
                    for k in range(self.source.total_dim):
                        idx = self.pos_index.get((p, k))
                        if idx is not None and a[k, q] != z:
                            row[idx] = f.add(row[idx], a[k, q])
                            nonzero = True
                    for k in range(self.target.total_dim):
                        idx = self.pos_index.get((k, q))
                        if idx is not None and b[p, k] != z:
                            row[idx] = f.sub(row[idx], b[p, k])
                            nonzero = True
                    if nonzero:
                        self.rows.append(row)
                        self.rhs.append(z)

    def add_post_compose(self, a: Matrix, b: Matrix):
        """Constrain ``a @ F = b`` (a: target.total -> X, b: source.total -> X)."""
        f = self.field
        z = f.zero()
        for p in range(a.rows):
            for q in range(self.source.total_dim):
                row = [z] * len(self.positions)
                for k in range(self.target.total_dim):
                    idx = self.pos_index.get((k, q))
                    if idx is not None and a[p, k] != z:
                        row[idx] = f.add(row[idx], a[p, k])
                self.rows.append(row)
                self.rhs.append(b[p, q])

    def add_pre_compose(self, a: Matrix, b: Matrix):
        """Constrain ``F @ a = b`` (a: X -> source.total, b: X -> target.total)."""
        f = self.field
        z = f.zero()
        for p in range(self.target.total_dim):
            for q in range(a.cols):
                row = [z] * len(self.positions)
                for k in range(self.source.total_dim):
                    idx = self.pos_index.get((p, k))
                    if idx is not None and a[k, q] != z:
                        row[idx] = f.add(row[idx], a[k, q])
                self.rows.append(row)
                self.rhs.append(b[p, q])

    def _system(self):
        if not self.rows:
            return Matrix.zeros(self.field, 0, len(self.positions)), []
        return Matrix(self.field, self.rows), list(self.rhs)

    def solve(self, with_certificate: bool = False):
        """One solution as a GradedMap, or None (optionally with a dual
        infeasibility certificate ``y``: y @ A = 0, y @ rhs != 0)."""
        a, b = self._system()
        if len(self.positions) == 0:
            feasible = all(x == self.field.zero() for x in b)
            result = (
                zero_map(self.source, self.target, self.degrees, self.linearity)
                if feasible
                else None
            )
            if with_certificate:
                cert = None
                if not feasible:
                    k = next(i for i, x in enumerate(b) if x != self.field.zero())
                    cert = tuple(
                        self.field.one() if i == k else self.field.zero() for i in range(len(b))
                    )
                return result, cert
            return result
        if with_certificate:
            sol, cert = a.solve(b, with_certificate=True)
        else:
            sol = a.solve(b)
            cert = None
        if sol is None:
            return (None, cert) if with_certificate else None
        out = GradedMap(
            self.source,
            self.target,
            self._matrix_from_unknowns(sol),
            self.degrees,
            linearity=self.linearity,
            _validated=True,
        )
        return (out, None) if with_certificate else out

    def kernel(self) -> list:
        """All homogeneous solutions (requires rhs = 0 rows only)."""
        f = self.field
        if any(x != f.zero() for x in self.rhs):
            raise HomError("kernel of an affine system")
        a, _ = self._system()
        if len(self.positions) == 0:
            return []
        if a.rows == 0:
            basis = [
                tuple(f.one() if i == k else f.zero() for i in range(len(self.positions)))
                for k in range(len(self.positions))
            ]
        else:
            basis = a.kernel_basis()
        return [
            GradedMap(
                self.source,
                self.target,
                self._matrix_from_unknowns(vec),
                self.degrees,
                linearity=self.linearity,
                _validated=True,
            )
            for vec in basis
        ]


# -- HOM spaces ---------------------------------------------------------------


def hom_degree(m: GradedModule, n: GradedModule, sigma, linearity=None) -> list:
    """Basis of the space of degree-{sigma} maps M -> N."""
    if m.ring is not n.ring:
        raise RingMismatch("HOM needs a common ring")
    if sigma not in m.ring.groupoid.index:
        raise HomError(f"unknown degree {sigma!r}")
    return MapSolver(m, n, frozenset([sigma]), linearity).kernel()


def graded_map_space(m: GradedModule, n: GradedModule, linearity=None) -> list:
    """Basis of degree-preserving maps (degree set = the unit space)."""
    return MapSolver(m, n, frozenset(m.ring.groupoid.units), linearity).kernel()


class HomSpace:
    """Per-degree HOM bases together with the full (ungraded) hom space."""

    def __init__(self, source, target, per_degree, hom_basis, strict, witness):
        self.source = source
        self.target = target
        self.per_degree = per_degree
        self.hom_basis = hom_basis
        self.strict = strict
        self.witness = witness

    @property
    def graded_dim(self) -> int:
        return sum(len(v) for v in self.per_degree.values())

    @property
    def hom_dim(self) -> int:
        return len(self.hom_basis)

    def degree_dims(self) -> dict:
        return {s: len(v) for s, v in self.per_degree.items() if v}

    def to_json(self) -> dict:
        return {
            "degree_dims": self.degree_dims(),
            "graded_dim": self.graded_dim,
            "hom_dim": self.hom_dim,
            "inclusion_strict": self.strict,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "basis": {
                s: [f.to_json() for f in maps] for s, maps in self.per_degree.items() if maps
            },
        }


def hom_total(m: GradedModule, n: GradedModule, linearity=None) -> HomSpace:
    """Assemble HOM(M, N) degree by degree and compare with the full hom.

    When the inclusion is strict the report carries a concrete linear map
    outside the graded span.
    """
    if m.ring is not n.ring:
        raise RingMismatch("HOM needs a common ring")
    g = m.ring.groupoid
    per_degree = {}
    flat_rows = []
    for sigma in g.elements:
        basis = hom_degree(m, n, sigma, linearity)
        per_degree[sigma] = basis
        flat_rows.extend(f.flat() for f in basis)
    hom_basis = MapSolver(m, n, None, linearity).kernel()
    graded_span = rowspace_basis(m.field, flat_rows)
    strict = len(hom_basis) > len(graded_span)
    witness = None
    if strict:
        for cand in hom_basis:
            if not subspace_contains(m.field, graded_span, cand.flat()):
                witness = cand
                break
    return HomSpace(m, n, per_degree, hom_basis, strict, witness)


def hom_action(case: str, f: GradedMap, x: RingElement) -> GradedMap:
    """The four bimodule actions on HOM spaces.

    (a) source (R,S)-bimodule, target left R:  (x.f)(m) = f(m x), x in S.
    (b) source (R,S)-bimodule, target right S: (f.x)(m) = f(x m), x in R.
    (c) source left S, target (S,R)-bimodule:  (f.x)(m) = f(m) x, x in R.
    (d) source right R, target (S,R)-bimodule: (x.f)(m) = x f(m), x in S.
    """
    m, n = f.source, f.target
    g = m.ring.groupoid
    if case == "a":
        if m.side != "bimodule" or f.linearity != "left":
            raise ConfigurationMismatch("case (a) needs a bimodule source and left linearity")
        if x.ring is not m.second_ring:
            raise ConfigurationMismatch("case (a) acts by the right ring of the source")
        op = m.right_action_total_matrix(x)
        matrix = f.matrix @ op
        deg = None if f.degree is None else frozenset(star_set(g, x.support(), f.degree))
    elif case == "b":
        if m.side != "bimodule" or f.linearity != "right":
            raise ConfigurationMismatch("case (b) needs a bimodule source and right linearity")
        if x.ring is not m.ring:
            raise ConfigurationMismatch("case (b) acts by the left ring of the source")
        op = m.left_action_total_matrix(x)
        matrix = f.matrix @ op
        deg = None if f.degree is None else frozenset(star_set(g, f.degree, x.support()))
    elif case == "c":
        if n.side != "bimodule" or f.linearity != "left":
            raise ConfigurationMismatch("case (c) needs a bimodule target and left linearity")
        if x.ring is not n.second_ring:
            raise ConfigurationMismatch("case (c) acts by the right ring of the target")
        op = n.right_action_total_matrix(x)
        matrix = op @ f.matrix
        deg = None if f.degree is None else frozenset(star_set(g, f.degree, x.support()))
    elif case == "d":
        if n.side != "bimodule" or f.linearity != "right":
            raise ConfigurationMismatch("case (d) needs a bimodule target and right linearity")
        if x.ring is not n.ring:
            raise ConfigurationMismatch("case (d) acts by the left ring of the target")
        op = n.left_action_total_matrix(x)
        matrix = op @ f.matrix
        deg = None if f.degree is None else frozenset(star_set(g, x.support(), f.degree))
    else:
        raise ConfigurationMismatch(f"unknown case {case!r}")
    return GradedMap(m, n, matrix, deg, linearity=f.linearity)


def eta_check(m: GradedModule) -> dict:
    """Verify that x -> (r -> r x) is a degree-preserving bijection of M onto
    R.HOM(R, M).
    """
    ring = m.ring
    report = object_unit_report(ring)
    if not report.is_object_unital:
        raise PreconditionFailed("the ring is not object unital")
    ok, witness = is_graded_unital(m)
    if not ok:
        raise PreconditionFailed(f"module is not graded unital: {witness}")
    if m.side != "left":
        raise PreconditionFailed("eta is checked for left modules")
    reg = regular_module(ring, "left")
    g = ring.groupoid
    f = m.field
    per_degree = {s: hom_degree(reg, m, s) for s in g.elements}
    hom_flat = []
    hom_maps = []
    for s in g.elements:
        for h in per_degree[s]:
            hom_maps.append((s, h))
            hom_flat.append(h.flat())
    # R . HOM: (r.h)(x) = h(x r)
    rhom_rows = []
    rhom_by_degree: dict = {s: [] for s in g.elements}
    for _, _, r in ring.basis_elements():
        rop = ring.right_mult_total_matrix(r)
        for s, h in hom_maps:
            acted = h.matrix @ rop
            if acted.is_zero():
                continue
            rhom_rows.append(tuple(x for row in acted.data for x in row))
            prod = star_set(g, r.support(), frozenset([s]))
            for w in prod:
                rhom_by_degree[w].append(tuple(x for row in acted.data for x in row))
    rhom_span = rowspace_basis(f, rhom_rows)
    eta_rows = []
    eta_by_degree: dict = {}
    for t, j, x in m.basis_elements():
        cols = [m.flatten(m.act_left(rb, x)) for _, _, rb in ring.basis_elements()]
        mat = Matrix(f, cols).transpose() if cols else Matrix.zeros(f, m.total_dim, 0)
        flatv = tuple(v for row in mat.data for v in row)
        eta_rows.append(flatv)
        eta_by_degree.setdefault(t, []).append(flatv)
    eta_rank = len(rowspace_basis(f, eta_rows))
    injective = eta_rank == m.total_dim
    image_matches = rowspace_basis(f, eta_rows) == rhom_span
    degree_preserving = True
    for t, vecs in eta_by_degree.items():
        span_t = rowspace_basis(f, [h.flat() for h in per_degree[t]])
        for v in vecs:
            if not subspace_contains(f, span_t, v):
                degree_preserving = False
    iso = injective and image_matches and degree_preserving
    return {
        "iso": iso,
        "module_dim": m.total_dim,
        "rhom_dim": len(rhom_span),
        "hom_dim": len(hom_maps),
        "module_degree_dims": {t: m.dims[t] for t in g.elements if m.dims[t] > 0},
        "rhom_degree_dims": {
            s: len(rowspace_basis(f, rows)) for s, rows in rhom_by_degree.items() if rows
        },
        "injective": injective,
        "degree_preserving": degree_preserving,
    }


def suspension_functor_on_map(
    f: GradedMap, degrees, source: GradedModule | None = None, target: GradedModule | None = None
) -> GradedMap:
    """The suspension functor applied to a degree-preserving map.

    The suspended map acts on each base-degree slice by the corresponding
    block of ``f``. Prebuilt suspended endpoints can be passed in so that
    composites share module instances.
    """
    from .module import suspension_functor, _view_data

    g = f.source.ring.groupoid
    if f.degree is None or not f.degree <= frozenset(g.units):
        raise HomError("the suspension functor applies to degree-preserving maps")
    src = source if source is not None else suspension_functor(f.source, degrees)
    tgt = target if target is not None else suspension_functor(f.target, degrees)
    fl = f.source.field
    rows = [[fl.zero()] * src.total_dim for _ in range(tgt.total_dim)]
    src_base, src_sets = _view_data(src)
    tgt_base, tgt_sets = _view_data(tgt)
    for tau in g.elements:
        src_off = src.offset(tau)
        for mu in src_sets[tau]:
            if mu not in tgt_sets[tau]:
                # f must vanish on this slice; checked below via the block
                blk = f.block(mu, mu)
                if not blk.is_zero():
                    raise HomError("map does not descend to the suspension")
                src_off += f.source.dims[mu]
                continue
            tgt_off = tgt.offset(tau)
            for nu in tgt_sets[tau]:
                if nu == mu:
                    break
                tgt_off += f.target.dims[nu]
            blk = f.block(mu, mu)
            for i in range(f.target.dims[mu]):
                for j in range(f.source.dims[mu]):
                    rows[tgt_off + i][src_off + j] = blk[i, j]
            src_off += f.source.dims[mu]
    return GradedMap(
        src, tgt, Matrix(fl, rows, cols=src.total_dim), frozenset(g.units),
        linearity=f.linearity,
    )


# -- factorization and exactness helpers -------------------------------------


def factor_through(f: GradedMap, g: GradedMap):
    """Given graded f: M -> P and g: N -> P with f factoring through g in
    plain modules, find a graded h: M -> N with g o h = f (or None)."""
    if f.target is not g.target:
        raise HomError("factorization needs a common codomain")
    solver = MapSolver(f.source, g.source, frozenset(f.source.ring.groupoid.units), f.linearity)
    solver.add_post_compose(g.matrix, f.matrix)
    return solver.solve()


def factor_through_left(f: GradedMap, h: GradedMap):
    """Given graded f: M -> P and h: M -> N, find graded g: N -> P with
    g o h = f (or None)."""
    if f.source is not h.source:
        raise HomError("factorization needs a common domain")
    solver = MapSolver(h.target, f.target, frozenset(f.source.ring.groupoid.units), f.linearity)
    solver.add_pre_compose(h.matrix, f.matrix)
    return solver.solve()


def induced_restriction(maps: list, pre: GradedMap) -> list:
    """Compose a HOM basis with a fixed map on the right (HOM(g, Q))."""
    return [h.compose(pre) for h in maps]


def hom_left_exactness(fmap: GradedMap, gmap: GradedMap, q: GradedModule) -> dict:
    """For an exact M -f-> N -g-> P -> 0, check exactness of
    0 -> HOM(P,Q) -> HOM(N,Q) -> HOM(M,Q)."""
    m, n, p = fmap.source, fmap.target, gmap.target
    if gmap.source is not n:
        raise HomError("maps do not chain")
    g = m.ring.groupoid
    f = m.field

    def full_basis(a, b):
        out = []
        for s in g.elements:
            out.extend(hom_degree(a, b, s))
        return out

    hom_p = full_basis(p, q)
    hom_n = full_basis(n, q)
    hom_m = full_basis(m, q)
    alpha_rows = [h.compose(gmap).flat() for h in hom_p]
    alpha_rank = len(rowspace_basis(f, alpha_rows))
    injective = alpha_rank == len(hom_p)
    # image(alpha) = kernel(beta), with beta expressed on the hom_n basis
    if hom_n:
        beta_cols = [h.compose(fmap).flat() for h in hom_n]
        kernel_dim = len(Matrix(f, beta_cols).transpose().kernel_basis())
    else:
        kernel_dim = 0
    image_in_kernel = all(
        h.compose(gmap).compose(fmap).is_zero() for h in hom_p
    )
    exact_middle = image_in_kernel and alpha_rank == kernel_dim
    return {
        "injective": injective,
        "exact_middle": exact_middle,
        "dims": {"hom_P_Q": len(hom_p), "hom_N_Q": len(hom_n), "hom_M_Q": len(hom_m)},
        "alpha_rank": alpha_rank,
        "beta_kernel_dim": kernel_dim,
    }
