"""Decision procedures for the structural properties of graded modules:
splitting, direct summands, freeness by suspension, homogeneous bases,
projectivity, Baer-style injectivity, simplicity and semisimplicity.

Every yes/no verdict carries a replayable certificate; enumeration-backed
verdicts respect the finite-field gates (overridable via GRUMOD_MAX_ENUM).
"""

from __future__ import annotations

import os
import random
from itertools import product

from .linalg import Matrix, rowspace_basis, subspace_contains, subspace_sum, enumerate_subspaces
from .module import (
    GradedModule,
    GradedSubmodule,
    ModuleError,
    componentwise_equal,
    direct_sum,
    annihilator,
    is_graded_unital,
    regular_module,
    submodule_generated,
    suspension,
    zero_submodule,
)
from .hom import GradedMap, MapSolver, inclusion_map, zero_map


DEFAULT_MAX_ENUM_DIM = 8
DEFAULT_MAX_ENUM_PRIME = 3
RATIONAL_TRIALS = 32
FINITE_COMBO_CAP = 4096


class AnalysisError(ValueError):
    pass


class NotExact(AnalysisError):
    pass


class ZeroModule(AnalysisError):
    pass


class InfiniteFieldNeedsIdealList(AnalysisError):
    pass


class EnumerationGate(AnalysisError):
    """Raised when an exhaustive enumeration would exceed the configured gate."""


def max_enum_dim() -> int:
    value = os.environ.get("GRUMOD_MAX_ENUM")
    if value:
        try:
            return int(value)
        except ValueError:
            pass
    return DEFAULT_MAX_ENUM_DIM


class AnalysisReport:
    """Uniform verdict record: property, yes/no/not-decided, certificate,
    verification mode, and free-form details."""

    def __init__(self, prop: str, verdict: str, certificate=None, mode=None, details=None):
        if verdict not in ("yes", "no", "not-decided"):
            raise AnalysisError(f"bad verdict {verdict!r}")
        self.prop = prop
        self.verdict = verdict
        self.certificate = certificate
        self.mode = mode or {"kind": "exhaustive"}
        self.details = details or {}

    def to_json(self) -> dict:
        return {
            "property": self.prop,
            "verdict": self.verdict,
            "certificate": self.certificate,
            "mode": self.mode,
            "details": self.details,
        }


# -- exact sequences ---------------------------------------------------------


class ShortExactSequence:
    """0 -> L -f-> M -g-> N -> 0 with degree-preserving maps."""

    def __init__(self, f: GradedMap, g: GradedMap):
        if f.target is not g.source:
            raise NotExact("maps do not chain")
        self.l = f.source
        self.m = f.target
        self.n = g.target
        self.f = f
        self.g = g
        if not f.is_injective():
            raise NotExact("first map is not injective")
        if not g.is_surjective():
            raise NotExact("second map is not surjective")
        field = self.m.field
        image = rowspace_basis(field, [tuple(col) for col in _columns(f.matrix)])
        kernel = rowspace_basis(field, g.matrix.kernel_basis())
        if image != kernel:
            raise NotExact("image of f differs from kernel of g")


def _columns(mat: Matrix):
    return [mat.col(j) for j in range(mat.cols)]


def split_check(ses: ShortExactSequence) -> AnalysisReport:
    """Solve for a graded retraction and a graded section; on success build
    the commuting isomorphism onto the direct sum. The three answers must
    agree."""
    m, l, n = ses.m, ses.l, ses.n
    units = frozenset(m.ring.groupoid.units)
    retraction_solver = MapSolver(m, l, units, ses.f.linearity)
    retraction_solver.add_pre_compose(ses.f.matrix, Matrix.identity(m.field, l.total_dim))
    phi, phi_cert = retraction_solver.solve(with_certificate=True)
    section_solver = MapSolver(n, m, units, ses.f.linearity)
    section_solver.add_post_compose(ses.g.matrix, Matrix.identity(m.field, n.total_dim))
    psi, psi_cert = section_solver.solve(with_certificate=True)
    if (phi is None) != (psi is None):
        raise AnalysisError("retraction and section solvability disagree")
    if phi is None:
        return AnalysisReport(
            "split",
            "no",
            certificate={
                "infeasible": {
                    "retraction_dual": [m.field.render(x) for x in phi_cert],
                    "section_dual": [m.field.render(x) for x in psi_cert],
                }
            },
            details={"dims": {"L": l.total_dim, "M": m.total_dim, "N": n.total_dim}},
        )
    ln = direct_sum(l, n)
    h = _pair_into_sum(ses, phi)
    if not h.is_bijective():
        raise AnalysisError("retraction found but the induced map is not an isomorphism")
    return AnalysisReport(
        "split",
        "yes",
        certificate={
            "retraction": phi.to_json(),
            "section": psi.to_json(),
            "iso": h.to_json(),
        },
        details={"dims": {"L": l.total_dim, "M": m.total_dim, "N": n.total_dim}},
    )


def _pair_into_sum(ses: ShortExactSequence, phi: GradedMap) -> GradedMap:
    """The map (phi, g): M -> L (+) N in direct-sum coordinates."""
    l, m, n = ses.l, ses.m, ses.n
    f = m.field
    ln = direct_sum(l, n)
    rows = [[f.zero()] * m.total_dim for _ in range(ln.total_dim)]
    g = m.ring.groupoid
    for tau in g.elements:
        off_ln = ln.offset(tau)
        for i in range(l.dims[tau]):
            for q in range(m.total_dim):
                rows[off_ln + i][q] = phi.matrix[l.offset(tau) + i, q]
        for i in range(n.dims[tau]):
            for q in range(m.total_dim):
                rows[off_ln + l.dims[tau] + i][q] = ses.g.matrix[n.offset(tau) + i, q]
    return GradedMap(m, ln, Matrix(f, rows), frozenset(g.units), linearity=phi.linearity)


def is_direct_summand(sub: GradedSubmodule, sub_module: GradedModule | None = None) -> AnalysisReport:
    """Graded and ungraded retraction solves; the two verdicts must agree."""
    m = sub.parent
    if sub_module is None:
        sub_module = sub.to_module()
    incl = inclusion_map(sub, sub_module)
    units = frozenset(m.ring.groupoid.units)
    graded_solver = MapSolver(m, sub_module, units, incl.linearity)
    graded_solver.add_pre_compose(incl.matrix, Matrix.identity(m.field, sub_module.total_dim))
    graded_phi, graded_cert = graded_solver.solve(with_certificate=True)
    ungraded_solver = MapSolver(m, sub_module, None, incl.linearity)
    ungraded_solver.add_pre_compose(incl.matrix, Matrix.identity(m.field, sub_module.total_dim))
    ungraded_phi, _ = ungraded_solver.solve(with_certificate=True)
    graded_yes = graded_phi is not None
    ungraded_yes = ungraded_phi is not None
    if graded_yes != ungraded_yes:
        raise AnalysisError("graded and ungraded direct-summand verdicts disagree")
    if not graded_yes:
        return AnalysisReport(
            "direct-summand",
            "no",
            certificate={
                "infeasible": {"retraction_dual": [m.field.render(x) for x in graded_cert]}
            },
            details={"graded": False, "ungraded": False},
        )
    complement = _kernel_submodule(graded_phi)
    return AnalysisReport(
        "direct-summand",
        "yes",
        certificate={"retraction": graded_phi.to_json(), "complement": complement.to_json()},
        details={"graded": True, "ungraded": True, "complement_dims": complement.dims()},
    )


def _kernel_submodule(phi: GradedMap) -> GradedSubmodule:
    """Kernel of a degree-preserving map as a graded submodule of its source."""
    m = phi.source
    f = m.field
    comp = {}
    for tau in m.ring.groupoid.elements:
        blk = phi.block(tau, tau)
        if m.dims[tau] == 0:
            comp[tau] = []
            continue
        if blk.rows == 0:
            comp[tau] = [
                tuple(Matrix.identity(f, m.dims[tau]).data[i]) for i in range(m.dims[tau])
            ]
            continue
        comp[tau] = blk.kernel_basis()
    return GradedSubmodule(m, comp, _validated=True)


# -- submodule and ideal enumeration ------------------------------------------


def enumerate_graded_submodules(m: GradedModule) -> list:
    """All graded submodules over a gated finite field, in deterministic order."""
    f = m.field
    if not f.is_finite:
        raise EnumerationGate("exhaustive submodule enumeration needs a finite field")
    if f.p > DEFAULT_MAX_ENUM_PRIME:
        raise EnumerationGate(f"enumeration gate: p = {f.p} exceeds {DEFAULT_MAX_ENUM_PRIME}")
    if m.total_dim > max_enum_dim():
        raise EnumerationGate(
            f"enumeration gate: total dim {m.total_dim} exceeds {max_enum_dim()}"
        )
    g = m.ring.groupoid
    per_component = {t: list(enumerate_subspaces(f, m.dims[t])) for t in g.elements}
    action_blocks = []
    for s, i, r in m.ring.basis_elements():
        for t in g.elements:
            if (s, t) not in g.compose or m.dims[t] == 0:
                continue
            st = g.compose[(s, t)]
            if m.dims[st] == 0:
                continue
            cols = [
                m.flatten(m.act_left(r, m.basis_element(t, j)))[
                    m.offset(st) : m.offset(st) + m.dims[st]
                ]
                for j in range(m.dims[t])
            ]
            mat = Matrix(f, cols).transpose()
            if mat.is_zero():
                continue
            action_blocks.append((t, st, mat))
    elements_order = list(g.elements)
    out = []
    for combo in product(*(per_component[t] for t in elements_order)):
        bases = dict(zip(elements_order, combo))
        ok = True
        for t, st, mat in action_blocks:
            for row in bases[t]:
                img = mat.apply(row)
                if not subspace_contains(f, bases[st], img):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(GradedSubmodule(m, bases, _validated=True))
    return out


def enumerate_graded_left_ideals(ring) -> list:
    """Graded left ideals = graded submodules of the regular left module."""
    return enumerate_graded_submodules(regular_module(ring, "left"))


def submodule_sum(a: GradedSubmodule, b: GradedSubmodule) -> GradedSubmodule:
    if a.parent is not b.parent:
        raise AnalysisError("sum of submodules of different modules")
    f = a.parent.field
    comp = {
        t: subspace_sum(f, a.comp_bases[t], b.comp_bases[t])
        for t in a.parent.ring.groupoid.elements
    }
    return GradedSubmodule(a.parent, comp, _validated=True)


def submodule_contains(a: GradedSubmodule, b: GradedSubmodule) -> bool:
    """Whether a contains b, componentwise."""
    f = a.parent.field
    for t in a.parent.ring.groupoid.elements:
        for row in b.comp_bases[t]:
            if not subspace_contains(f, a.comp_bases[t], row):
                return False
    return True


def homogeneous_vectors(m: GradedModule, tau):
    """Projective representatives of nonzero vectors of a component over a
    finite field (first nonzero coordinate normalized to 1)."""
    f = m.field
    dim = m.dims[tau]
    if dim == 0:
        return
    elems = list(f.elements())
    for lead in range(dim):
        for tail in product(elems, repeat=dim - lead - 1):
            vec = [f.zero()] * dim
            vec[lead] = f.one()
            for k, c in enumerate(tail):
                vec[lead + 1 + k] = c
            yield tuple(vec)


def _random_homogeneous(m: GradedModule, tau, rng: random.Random):
    f = m.field
    dim = m.dims[tau]
    while True:
        if f.is_finite:
            vec = [rng.randrange(f.p) for _ in range(dim)]
        else:
            vec = [rng.randint(-3, 3) for _ in range(dim)]
        if any(x != 0 for x in vec):
            return tuple(f.coerce(x) for x in vec)


# -- freeness ------------------------------------------------------------------


def _suspension_profile(ring, sigma) -> tuple:
    g = ring.groupoid
    out = []
    for tau in g.elements:
        if (tau, sigma) in g.compose:
            out.append(ring.dims[g.compose[(tau, sigma)]])
        else:
            out.append(0)
    return tuple(out)


def _candidate_multisets(ring, target: tuple, cap: int):
    """Count vectors over the element order whose suspension profiles sum to
    the target dims, in lexicographic order."""
    g = ring.groupoid
    sigmas = [s for s in g.elements if any(_suspension_profile(ring, s))]
    profiles = {s: _suspension_profile(ring, s) for s in sigmas}
    found = []

    def rec(idx, remaining, counts):
        if len(found) >= cap:
            return
        if all(x == 0 for x in remaining):
            found.append(tuple(counts))
            return
        if idx == len(sigmas):
            return
        prof = profiles[sigmas[idx]]
        limit = min(
            (remaining[k] // prof[k]) for k in range(len(prof)) if prof[k] > 0
        )
        for c in range(limit, -1, -1):
            counts.append(c)
            rec(idx + 1, tuple(remaining[k] - c * prof[k] for k in range(len(prof))), counts)
            counts.pop()
            if len(found) >= cap:
                return

    rec(0, target, [])
    multisets = []
    for counts in found:
        ms = []
        for s, c in zip(sigmas, counts):
            ms.extend([s] * c)
        multisets.append(tuple(ms))
    # lexicographic by degree sequence in element order
    multisets.sort(key=lambda ms: [g.index[s] for s in ms])
    return multisets, len(found) >= cap


def free_cover_for_multiset(ring, multiset):
    """The module ⊕_i R(sigma_i) for a multiset of degrees."""
    reg = regular_module(ring, "left")
    summands = [suspension(reg, s) for s in multiset]
    if not summands:
        from .module import zero_module

        return zero_module(ring, "left"), []
    total = summands[0]
    for s in summands[1:]:
        total = direct_sum(total, s)
    return total, summands


def _find_invertible_combo(basis_maps, source, target, seed: int):
    """Search the span of a map basis for a bijective element.

    Returns ``(map, exhausted)``: exhausted means the whole span was checked.
    """
    f = source.field
    k = len(basis_maps)
    if source.total_dim != target.total_dim:
        return None, True
    if source.total_dim == 0:
        return zero_map(source, target, frozenset(source.ring.groupoid.units)), True
    if k == 0:
        return None, True
    if f.is_finite and f.p**k <= FINITE_COMBO_CAP:
        for coeffs in product(list(f.elements()), repeat=k):
            if all(c == f.zero() for c in coeffs):
                continue
            cand = _combo(basis_maps, coeffs)
            if cand.is_bijective():
                return cand, True
        return None, True
    rng = random.Random(seed)
    trials = []
    for i in range(k):
        trials.append(tuple(f.one() if j == i else f.zero() for j in range(k)))
    trials.append(tuple(f.one() for _ in range(k)))
    while len(trials) < RATIONAL_TRIALS + k + 1:
        if f.is_finite:
            trials.append(tuple(f.coerce(rng.randrange(f.p)) for _ in range(k)))
        else:
            trials.append(tuple(f.coerce(rng.randint(-5, 5)) for _ in range(k)))
    for coeffs in trials:
        if all(c == f.zero() for c in coeffs):
            continue
        cand = _combo(basis_maps, coeffs)
        if cand.is_bijective():
            return cand, False
    return None, False


def _combo(basis_maps, coeffs):
    out = None
    for c, bm in zip(coeffs, basis_maps):
        term = bm.scale(c)
        out = term if out is None else out + term
    return out


def free_by_suspension(m: GradedModule, search_cap: int = 64, seed: int = 0) -> AnalysisReport:
    """Search for a multiset {sigma_i} and a degree-preserving bijection
    ⊕ R(sigma_i) -> M."""
    ring = m.ring
    g = ring.groupoid
    ok, wit = is_graded_unital(m)
    if not ok:
        raise ModuleError(f"freeness needs a graded unital module: {wit}")
    if m.total_dim == 0:
        return AnalysisReport("free-by-suspension", "yes", certificate={"multiset": [], "iso": None})
    target = tuple(m.dims[t] for t in g.elements)
    multisets, truncated = _candidate_multisets(ring, target, search_cap)

    def profile_sum(ms):
        acc = [0] * len(g.elements)
        for s in ms:
            prof = _suspension_profile(ring, s)
            acc = [a + b for a, b in zip(acc, prof)]
        return tuple(acc)

    # warm starts: the module's own suspension degrees, then the unit multiset
    warm = []
    view_degrees = getattr(m, "view_degrees", None)
    if view_degrees and m.base is not None and componentwise_equal_base_regular(m):
        warm.append(tuple(sorted(view_degrees, key=lambda e: g.index[e])))
    warm.append(tuple(e for e in g.units if ring.dims[e] > 0))
    ordered = []
    for ms in warm:
        if profile_sum(ms) == target and ms not in ordered:
            ordered.append(ms)
    for ms in multisets:
        if ms not in ordered:
            ordered.append(ms)
    any_inconclusive = False
    for ms in ordered:
        cover, _ = free_cover_for_multiset(ring, ms)
        solver = MapSolver(cover, m, frozenset(g.units), "left")
        basis_maps = solver.kernel()
        iso, exhausted = _find_invertible_combo(basis_maps, cover, m, seed)
        if iso is not None:
            return AnalysisReport(
                "free-by-suspension",
                "yes",
                certificate={"multiset": list(ms), "iso": iso.to_json()},
                mode={"kind": "exhaustive" if exhausted else "probabilistic", "seed": seed},
            )
        if not exhausted and basis_maps:
            any_inconclusive = True
    if truncated or any_inconclusive:
        return AnalysisReport(
            "free-by-suspension",
            "not-decided",
            mode={"kind": "probabilistic", "seed": seed},
            details={"candidates_tried": len(ordered), "cap_hit": truncated},
        )
    return AnalysisReport(
        "free-by-suspension",
        "no",
        certificate={"exhausted_multisets": [list(ms) for ms in ordered]},
        details={"candidates_tried": len(ordered)},
    )


def componentwise_equal_base_regular(m: GradedModule) -> bool:
    base = m.base
    if base is None:
        return False
    reg = regular_module(base.ring, "left")
    return componentwise_equal(base, reg)


# -- homogeneous bases ----------------------------------------------------------


def _structural_annihilator_dims(m: GradedModule) -> dict:
    """Per component: the dimension of the part of the ring that kills the
    whole component because of non-composability."""
    ring = m.ring
    g = ring.groupoid
    out = {}
    for tau in g.elements:
        if m.dims[tau] == 0:
            continue
        blocked = 0
        for mu in g.elements:
            if ring.dims[mu] > 0 and (mu, tau) not in g.compose:
                blocked += ring.dims[mu]
        out[tau] = blocked
    return out


def _strictly_independent(m: GradedModule, elements) -> bool:
    """No nonzero tuple (r_1..r_k) with sum r_i . m_i = 0."""
    ring = m.ring
    f = m.field
    cols = []
    for x in elements:
        for _, _, r in ring.basis_elements():
            cols.append(m.flatten(m.act_left(r, x)))
    if not cols:
        return True
    mat = Matrix(f, cols).transpose()
    return len(mat.kernel_basis()) == 0


def has_homogeneous_basis(m: GradedModule, search_cap: int = 256) -> AnalysisReport:
    """Search for homogeneous elements with zero annihilator that strictly
    independently generate the module."""
    ok, wit = is_graded_unital(m)
    if not ok:
        raise ModuleError(f"homogeneous-basis search needs a graded unital module: {wit}")
    if m.total_dim == 0:
        return AnalysisReport("homogeneous-basis", "yes", certificate={"basis": []})
    f = m.field
    structural = _structural_annihilator_dims(m)
    if all(v > 0 for v in structural.values()):
        return AnalysisReport(
            "homogeneous-basis",
            "no",
            certificate={"structural_annihilators": structural},
            mode={"kind": "structural"},
            details={
                "reason": "every homogeneous element is killed by some ring component",
            },
        )
    candidates = []
    checked = 0
    exhaustive = f.is_finite
    if f.is_finite:
        for tau in m.ring.groupoid.elements:
            for vec in homogeneous_vectors(m, tau):
                checked += 1
                if checked > search_cap:
                    exhaustive = False
                    break
                x = m.element({tau: vec})
                if annihilator(m, x).is_zero():
                    candidates.append(x)
            if checked > search_cap:
                break
    else:
        pool = [m.basis_element(t, j) for t, j, _ in m.basis_elements()]
        for t in m.ring.groupoid.elements:
            for j in range(m.dims[t]):
                for k in range(j + 1, m.dims[t]):
                    pool.append(m.basis_element(t, j) + m.basis_element(t, k))
        for x in pool[:search_cap]:
            checked += 1
            if annihilator(m, x).is_zero():
                candidates.append(x)
    result = _basis_search(m, candidates)
    if result is not None:
        return AnalysisReport(
            "homogeneous-basis",
            "yes",
            certificate={"basis": [x.to_json() for x in result]},
            mode={"kind": "exhaustive" if exhaustive else "probabilistic"},
        )
    if exhaustive:
        return AnalysisReport(
            "homogeneous-basis",
            "no",
            certificate={"candidates_with_zero_annihilator": len(candidates), "checked": checked},
            details={"reason": "no strictly independent generating set among candidates"},
        )
    return AnalysisReport(
        "homogeneous-basis",
        "not-decided",
        details={"checked": checked, "reason": "search pool exhausted without certificate"},
    )


def _basis_search(m: GradedModule, candidates) -> list | None:
    """Depth-first search for a strictly independent generating subset."""

    def rec(start, chosen, covered_dim):
        if covered_dim == m.total_dim:
            return list(chosen)
        for idx in range(start, len(candidates)):
            x = candidates[idx]
            chosen.append(x)
            if _strictly_independent(m, chosen):
                sub = submodule_generated(m, chosen)
                if sub.total_dim() > covered_dim:
                    out = rec(idx + 1, chosen, sub.total_dim())
                    if out is not None:
                        return out
            chosen.pop()
        return None

    if m.total_dim == 0:
        return []
    return rec(0, [], 0)


# -- projectivity ---------------------------------------------------------------


def standard_free_cover(m: GradedModule):
    """Free cover from the homogeneous basis vectors of M: the sum of
    R(sigma^-1) over their degrees, with the evaluation map."""
    ring = m.ring
    g = ring.groupoid
    f = m.field
    generators = [(t, j) for t, j, _ in m.basis_elements()]
    degrees = [g.inverse[t] for t, _ in generators]
    cover, summands = free_cover_for_multiset(ring, degrees)
    cols_by_offset = {}
    offset_in_component: dict = {}
    cols = [[f.zero()] * m.total_dim for _ in range(cover.total_dim)]
    # walk the direct-sum layout: component tau of the cover concatenates the
    # tau-components of each summand in order
    summand_offsets = []
    acc = {t: 0 for t in g.elements}
    for s in summands:
        summand_offsets.append(dict(acc))
        for t in g.elements:
            acc[t] += s.dims[t]
    for idx, ((gt, gj), s_mod) in enumerate(zip(generators, summands)):
        gen = m.basis_element(gt, gj)
        for tau in g.elements:
            dsets = s_mod.degree_sets[tau]
            pos = 0
            for mu in dsets:
                for q in range(ring.dims[mu]):
                    col_index = cover.offset(tau) + summand_offsets[idx][tau] + pos
                    image = m.act_left(ring.basis_element(mu, q), gen)
                    vec = m.flatten(image)
                    for p, c in enumerate(vec):
                        cols[col_index][p] = c
                    pos += 1
    mat = Matrix(f, cols).transpose() if cols else Matrix.zeros(f, m.total_dim, 0)
    cover_map = GradedMap(cover, m, mat, frozenset(g.units), linearity="left")
    return cover, cover_map, degrees


def is_projective(m: GradedModule) -> AnalysisReport:
    """Solve for graded and ungraded sections of the standard free cover."""
    ok, wit = is_graded_unital(m)
    if not ok:
        raise ModuleError(f"projectivity needs a graded unital module: {wit}")
    if m.total_dim == 0:
        return AnalysisReport(
            "projective", "yes",
            certificate={"cover_degrees": [], "section": None},
            details={"graded": True, "ungraded": True},
        )
    cover, cover_map, degrees = standard_free_cover(m)
    if not cover_map.is_surjective():
        raise AnalysisError("standard free cover is not surjective")
    units = frozenset(m.ring.groupoid.units)
    graded_solver = MapSolver(m, cover, units, "left")
    graded_solver.add_post_compose(cover_map.matrix, Matrix.identity(m.field, m.total_dim))
    section, graded_cert = graded_solver.solve(with_certificate=True)
    ungraded_solver = MapSolver(m, cover, None, "left")
    ungraded_solver.add_post_compose(cover_map.matrix, Matrix.identity(m.field, m.total_dim))
    ungraded_section, _ = ungraded_solver.solve(with_certificate=True)
    graded_yes = section is not None
    ungraded_yes = ungraded_section is not None
    if graded_yes != ungraded_yes:
        raise AnalysisError("graded and ungraded projectivity verdicts disagree")
    if graded_yes:
        return AnalysisReport(
            "projective",
            "yes",
            certificate={"cover_degrees": degrees, "section": section.to_json()},
            details={"graded": True, "ungraded": True, "cover_dim": cover.total_dim},
        )
    return AnalysisReport(
        "projective",
        "no",
        certificate={
            "cover_degrees": degrees,
            "infeasible": {"section_dual": [m.field.render(x) for x in graded_cert]},
        },
        details={"graded": False, "ungraded": False, "cover_dim": cover.total_dim},
    )


# -- injectivity (graded Baer) ---------------------------------------------------


def is_injective_baer(m: GradedModule, ideals=None) -> AnalysisReport:
    """Check surjectivity of HOM(R, M) -> HOM(I, M) over graded left ideals.

    Over finite fields the ideals are enumerated exhaustively inside the gate;
    over the rationals an explicit ideal list is required and the verdict is
    relative to it."""
    ok, wit = is_graded_unital(m)
    if not ok:
        raise ModuleError(f"injectivity needs a graded unital module: {wit}")
    ring = m.ring
    g = ring.groupoid
    relative = ideals is not None
    if ideals is None:
        if not m.field.is_finite:
            raise InfiniteFieldNeedsIdealList(
                "exhaustive ideal enumeration needs a finite field; pass ideals="
            )
        ideals = enumerate_graded_left_ideals(ring)
    reg = ideals[0].parent if ideals else regular_module(ring, "left")
    hom_rm = _all_degree_hom(reg, m)
    for ideal in ideals:
        if ideal.is_zero():
            continue
        ideal_module = ideal.to_module()
        incl = inclusion_map(ideal, ideal_module)
        restricted = [h.compose(incl) for h in hom_rm]
        hom_im = _all_degree_hom(ideal_module, m)
        target_dim = len(hom_im)
        restricted_rank = len(rowspace_basis(m.field, [h.flat() for h in restricted]))
        if restricted_rank < target_dim:
            missing = None
            span = rowspace_basis(m.field, [h.flat() for h in restricted])
            for h in hom_im:
                if not subspace_contains(m.field, span, h.flat()):
                    missing = h
                    break
            return AnalysisReport(
                "injective",
                "no",
                certificate={
                    "counterexample_ideal": ideal.to_json(),
                    "unextendable_map": missing.to_json() if missing else None,
                    "restriction_rank": restricted_rank,
                    "target_dim": target_dim,
                },
                details={"ideals_checked": len(ideals), "relative": relative},
            )
    return AnalysisReport(
        "injective",
        "yes",
        certificate={"ideals_checked": len(ideals)},
        mode={"kind": "exhaustive"} if not relative else {"kind": "relative-to-supplied-ideals"},
        details={"relative": relative},
    )


def _all_degree_hom(a: GradedModule, b: GradedModule) -> list:
    from .hom import hom_degree

    out = []
    for s in a.ring.groupoid.elements:
        out.extend(hom_degree(a, b, s))
    return out


# -- simplicity and semisimplicity -----------------------------------------------


def is_simple(m: GradedModule, seed: int = 0, trials: int = 16) -> AnalysisReport:
    """Every nonzero homogeneous element must generate the whole module."""
    ok, wit = is_graded_unital(m)
    if not ok:
        raise ModuleError(f"simplicity needs a graded unital module: {wit}")
    if m.total_dim == 0:
        raise ZeroModule("simplicity of the zero module is undefined")
    f = m.field
    exhaustive = f.is_finite or all(m.dims[t] <= 1 for t in m.ring.groupoid.elements)
    candidates = []
    if f.is_finite:
        for tau in m.ring.groupoid.elements:
            for vec in homogeneous_vectors(m, tau):
                candidates.append(m.element({tau: vec}))
    elif exhaustive:
        candidates = [m.basis_element(t, j) for t, j, _ in m.basis_elements()]
    else:
        rng = random.Random(seed)
        candidates = [m.basis_element(t, j) for t, j, _ in m.basis_elements()]
        for tau in m.support():
            for _ in range(trials):
                candidates.append(m.element({tau: _random_homogeneous(m, tau, rng)}))
    for x in candidates:
        sub = submodule_generated(m, [x])
        if sub.total_dim() < m.total_dim:
            return AnalysisReport(
                "simple",
                "no",
                certificate={"proper_submodule": sub.to_json(), "generator": x.to_json()},
                details={"candidates": len(candidates)},
            )
    mode = (
        {"kind": "exhaustive"}
        if exhaustive
        else {"kind": "probabilistic", "seed": seed, "trials": trials}
    )
    return AnalysisReport(
        "simple", "yes", certificate={"generators_checked": len(candidates)}, mode=mode
    )


def is_semisimple(m: GradedModule, seed: int = 0, trials: int = 16) -> AnalysisReport:
    """Two independent routes over finite fields: every graded submodule is a
    direct summand, and a greedy decomposition into graded simples; the routes
    must agree. Over the rationals the verdict is probabilistic."""
    ok, wit = is_graded_unital(m)
    if not ok:
        raise ModuleError(f"semisimplicity needs a graded unital module: {wit}")
    if m.total_dim == 0:
        return AnalysisReport("semisimple", "yes", certificate={"decomposition": []})
    try:
        subs = enumerate_graded_submodules(m)
    except EnumerationGate:
        subs = None
    if subs is not None:
        failure = None
        for sub in subs:
            if sub.is_zero() or sub.is_full():
                continue
            rep = is_direct_summand(sub)
            if rep.verdict == "no":
                failure = (sub, rep)
                break
        decomposition = _greedy_decomposition(m, subs)
        summand_yes = failure is None
        decomposition_yes = decomposition is not None
        if summand_yes != decomposition_yes:
            raise AnalysisError("the summand and decomposition criteria disagree")
        if summand_yes:
            return AnalysisReport(
                "semisimple",
                "yes",
                certificate={"decomposition": [s.to_json() for s in decomposition]},
                details={"submodules_checked": len(subs), "factors": len(decomposition)},
            )
        sub, rep = failure
        return AnalysisReport(
            "semisimple",
            "no",
            certificate={"witness_submodule": sub.to_json(), "summand_report": rep.to_json()},
            details={"submodules_checked": len(subs)},
        )
    # beyond the gate: cyclic homogeneous submodules + sampling
    rng = random.Random(seed)
    candidates = [m.basis_element(t, j) for t, j, _ in m.basis_elements()]
    for tau in m.support():
        for _ in range(trials):
            candidates.append(m.element({tau: _random_homogeneous(m, tau, rng)}))
    for x in candidates:
        sub = submodule_generated(m, [x])
        if sub.is_zero() or sub.is_full():
            continue
        rep = is_direct_summand(sub)
        if rep.verdict == "no":
            return AnalysisReport(
                "semisimple",
                "no",
                certificate={"witness_submodule": sub.to_json(), "summand_report": rep.to_json()},
                mode={"kind": "probabilistic", "seed": seed, "trials": trials},
            )
    return AnalysisReport(
        "semisimple",
        "yes",
        certificate={"cyclic_submodules_checked": len(candidates)},
        mode={"kind": "probabilistic", "seed": seed, "trials": trials},
    )


def _greedy_decomposition(m: GradedModule, subs) -> list | None:
    """Assemble M as a direct sum of minimal (hence simple) graded submodules."""
    nonzero = [s for s in subs if not s.is_zero()]
    minimal = []
    for s in nonzero:
        if not any(
            other is not s and not other.is_zero() and other.total_dim() < s.total_dim()
            and submodule_contains(s, other)
            for other in nonzero
        ):
            minimal.append(s)
    minimal.sort(key=lambda s: _submodule_sort_key(s))
    chosen = []
    current = zero_submodule(m)
    for s in minimal:
        merged = submodule_sum(current, s)
        if merged.total_dim() == current.total_dim() + s.total_dim():
            chosen.append(s)
            current = merged
            if current.total_dim() == m.total_dim:
                return chosen
    return None


def _submodule_sort_key(s: GradedSubmodule):
    f = s.parent.field
    return (
        s.total_dim(),
        [[[f.render(x) for x in row] for row in s.comp_bases[t]] for t in s.parent.ring.groupoid.elements],
    )


def maximal_graded_submodule(m: GradedModule) -> AnalysisReport:
    """Greedy growth by cyclic homogeneous closures until no proper extension
    exists; first maximal submodule in component order."""
    ok, wit = is_graded_unital(m)
    if not ok:
        raise ModuleError(f"maximal submodule search needs a graded unital module: {wit}")
    if m.total_dim == 0:
        raise ZeroModule("the zero module has no maximal graded submodule")
    f = m.field
    exhaustive = f.is_finite or all(m.dims[t] <= 1 for t in m.ring.groupoid.elements)
    if f.is_finite:
        candidates = [
            m.element({tau: vec})
            for tau in m.ring.groupoid.elements
            for vec in homogeneous_vectors(m, tau)
        ]
    else:
        candidates = [m.basis_element(t, j) for t, j, _ in m.basis_elements()]
    current = zero_submodule(m)
    changed = True
    while changed:
        changed = False
        for x in candidates:
            if current.contains(x):
                continue
            grown = submodule_sum(current, submodule_generated(m, [x]))
            if grown.total_dim() < m.total_dim:
                current = grown
                changed = True
                break
    return AnalysisReport(
        "maximal-graded-submodule",
        "yes",
        certificate={"submodule": current.to_json()},
        mode={"kind": "exhaustive" if exhaustive else "probabilistic"},
        details={"codimension": m.total_dim - current.total_dim(), "dims": current.dims()},
    )


def ring_semisimple_report(ring, battery=None, seed: int = 0) -> dict:
    """The five-way semisimplicity equivalence on a ring, evaluated over a
    battery of test modules; all evaluated verdicts must coincide."""
    reg = regular_module(ring, "left")
    battery = battery or [("regular", reg)]
    own = is_semisimple(reg, seed=seed)
    try:
        ideals = enumerate_graded_left_ideals(ring)
        ideal_verdicts = []
        ideal_witness = None
        for ideal in ideals:
            if ideal.is_zero() or ideal.is_full():
                continue
            rep = is_direct_summand(ideal)
            ideal_verdicts.append(rep.verdict == "yes")
            if rep.verdict == "no" and ideal_witness is None:
                ideal_witness = ideal.to_json()
        ideals_split = all(ideal_verdicts) if ideal_verdicts else True
        ideals_mode = "exhaustive"
    except EnumerationGate:
        ideals_split = None
        ideal_witness = None
        ideals_mode = "not-decided"
    per_module = {}
    all_injective = True
    all_projective = True
    all_semisimple = True
    for name, mod in battery:
        inj = is_injective_baer(mod)
        proj = is_projective(mod)
        ss = is_semisimple(mod, seed=seed)
        per_module[name] = {
            "injective": inj.verdict,
            "projective": proj.verdict,
            "semisimple": ss.verdict,
        }
        all_injective = all_injective and inj.verdict == "yes"
        all_projective = all_projective and proj.verdict == "yes"
        all_semisimple = all_semisimple and ss.verdict == "yes"
    verdicts = {
        "ring_semisimple": own.verdict == "yes",
        "ideals_are_summands": ideals_split,
        "battery_all_injective": all_injective,
        "battery_all_projective": all_projective,
        "battery_all_semisimple": all_semisimple,
    }
    evaluated = [v for v in verdicts.values() if v is not None]
    consistent = all(evaluated) or not any(evaluated)
    return {
        "verdicts": verdicts,
        "consistent": consistent,
        "ideal_witness": ideal_witness,
        "ideals_mode": ideals_mode,
        "per_module": per_module,
        "regular_report": own.to_json(),
    }
