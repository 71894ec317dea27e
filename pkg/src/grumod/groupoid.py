"""Finite groupoids as validated composition tables, plus the monoid of
non-empty subsets under ``A * B = {ab : a in A, b in B, d(a) = r(b)}``.

Element ids are opaque strings; every derived object (units, composable
pairs, star products) is reported in the declared element order.
"""

from __future__ import annotations

from itertools import product


class GroupoidError(ValueError):
    pass


class DuplicateId(GroupoidError):
    pass


class UnknownId(GroupoidError):
    pass


class AxiomViolation(GroupoidError):
    """One of the four groupoid axioms fails; ``axiom`` is 'i'..'iv'."""

    def __init__(self, axiom: str, message: str):
        self.axiom = axiom
        super().__init__(f"axiom ({axiom}) fails: {message}")


class CompositionDomainMismatch(GroupoidError):
    pass


class NotAGroup(GroupoidError):
    pass


class EmptyProduct(GroupoidError):
    """The star product of two non-empty subsets has no composable pair."""


class Groupoid:
    """Validated finite groupoid.

    Attributes:
        elements: element ids in declared order.
        inverse: id -> id.
        compose: (id, id) -> id, defined exactly on composable pairs.
        d, r: domain/range maps id -> unit id.
        units: the unit space, in element order.
        composable: frozenset of composable pairs.
    """

    def __init__(self, elements, inverse, compose, _validated=False):
        self.elements = tuple(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.inverse = dict(inverse)
        self.compose = dict(compose)
        if not _validated:
            self._validate()
        self.d = {s: self.compose[(self.inverse[s], s)] for s in self.elements}
        self.r = {s: self.compose[(s, self.inverse[s])] for s in self.elements}
        unit_set = set(self.d.values())
        self.units = tuple(e for e in self.elements if e in unit_set)
        self.composable = frozenset(self.compose)

    # -- validation ----------------------------------------------------

    def _validate(self):
        elems = self.elements
        seen = set()
        for e in elems:
            if e in seen:
                raise DuplicateId(f"duplicate element id {e!r}")
            seen.add(e)
        for s, t in self.inverse.items():
            if s not in seen or t not in seen:
                raise UnknownId(f"inverse map mentions unknown id {s!r} or {t!r}")
        for e in elems:
            if e not in self.inverse:
                raise UnknownId(f"no inverse declared for {e!r}")
        for (a, b), c in self.compose.items():
            if a not in seen or b not in seen or c not in seen:
                raise UnknownId(f"composition ({a!r},{b!r})->{c!r} mentions unknown id")

        # (i) involution
        for s in elems:
            if self.inverse[self.inverse[s]] != s:
                raise AxiomViolation("i", f"(({s})^-1)^-1 = {self.inverse[self.inverse[s]]} != {s}")

        # (iii)/(iv) first parts: d and r always defined
        for s in elems:
            if (self.inverse[s], s) not in self.compose:
                raise AxiomViolation("iii", f"d({s}) = {s}^-1 {s} is not defined")
            if (s, self.inverse[s]) not in self.compose:
                raise AxiomViolation("iv", f"r({s}) = {s} {s}^-1 is not defined")
        d = {s: self.compose[(self.inverse[s], s)] for s in elems}
        r = {s: self.compose[(s, self.inverse[s])] for s in elems}

        # (ii) associativity where both products are defined
        for (s, t) in self.compose:
            for u in elems:
                if (t, u) not in self.compose:
                    continue
                st = self.compose[(s, t)]
                tu = self.compose[(t, u)]
                if (st, u) not in self.compose or (s, tu) not in self.compose:
                    raise AxiomViolation(
                        "ii", f"({s}{t}){u} or {s}({t}{u}) undefined while {s}{t}, {t}{u} defined"
                    )
                if self.compose[(st, u)] != self.compose[(s, tu)]:
                    raise AxiomViolation("ii", f"({s}{t}){u} != {s}({t}{u})")

        # (iii)/(iv) second parts
        for (s, t) in self.compose:
            if (d[s], t) not in self.compose or self.compose[(d[s], t)] != t:
                raise AxiomViolation("iii", f"d({s}) {t} != {t}")
            if (s, r[t]) not in self.compose or self.compose[(s, r[t])] != s:
                raise AxiomViolation("iv", f"{s} r({t}) != {s}")

        # composability must coincide with d(s) = r(t)
        for (s, t) in self.compose:
            if d[s] != r[t]:
                raise CompositionDomainMismatch(
                    f"{s}{t} declared but d({s}) = {d[s]} != r({t}) = {r[t]}"
                )
        for s, t in product(elems, elems):
            if d[s] == r[t] and (s, t) not in self.compose:
                raise CompositionDomainMismatch(
                    f"d({s}) = r({t}) = {d[s]} but the composition {s}{t} is missing"
                )

    def verify_axioms(self):
        """Re-run the construction-time validation on the stored table."""
        self._validate()

    # -- queries ---------------------------------------------------------

    def is_composable(self, s, t) -> bool:
        return (s, t) in self.compose

    def mul(self, s, t):
        try:
            return self.compose[(s, t)]
        except KeyError:
            raise CompositionDomainMismatch(f"{s}{t} is not defined") from None

    def inv(self, s):
        return self.inverse[s]

    def sorted_subset(self, members) -> tuple:
        return tuple(e for e in self.elements if e in set(members))

    def is_group(self) -> bool:
        return len(self.units) == 1

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "inverse": {e: self.inverse[e] for e in self.elements},
            "compose": sorted(
                [[a, b, c] for (a, b), c in self.compose.items()],
                key=lambda t: (self.index[t[0]], self.index[t[1]]),
            ),
        }

    def __eq__(self, other):
        return (
            isinstance(other, Groupoid)
            and self.elements == other.elements
            and self.inverse == other.inverse
            and self.compose == other.compose
        )

    def __hash__(self):
        return hash((self.elements, tuple(sorted(self.inverse.items()))))

    def __repr__(self):
        return f"Groupoid({len(self.elements)} elements, {len(self.units)} units)"


def build_groupoid(elements, inverse, compose_triples) -> Groupoid:
    """Validate a raw table (elements, inverse map, list of [a, b, ab])."""
    compose = {}
    known = set(elements)
    for a, b, c in compose_triples:
        if a not in known or b not in known or c not in known:
            raise UnknownId(f"composition triple ({a!r},{b!r},{c!r}) mentions unknown id")
        if (a, b) in compose and compose[(a, b)] != c:
            raise CompositionDomainMismatch(f"conflicting products declared for {a}{b}")
        compose[(a, b)] = c
    return Groupoid(elements, inverse, compose)


def groupoid_from_json(doc: dict) -> Groupoid:
    return build_groupoid(doc["elements"], doc["inverse"], doc["compose"])


# -- standard constructions ---------------------------------------------


def pair_groupoid(n: int) -> Groupoid:
    """The pair groupoid on {1..n}: (i,j)(j,l) = (i,l)."""
    if n < 1:
        raise GroupoidError("pair groupoid needs n >= 1")
    ids = {}
    elements = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            e = f"({i},{j})"
            ids[(i, j)] = e
            elements.append(e)
    inverse = {ids[(i, j)]: ids[(j, i)] for (i, j) in ids}
    compose = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for l in range(1, n + 1):
                compose[(ids[(i, j)], ids[(j, l)])] = ids[(i, l)]
    return Groupoid(elements, inverse, compose)


def group_groupoid(elements, table) -> Groupoid:
    """A group given by a Cayley table {(a,b): ab}; rejects non-groups."""
    elements = list(elements)
    eset = set(elements)
    if len(eset) != len(elements):
        raise DuplicateId("duplicate element in group")
    for (a, b), c in table.items():
        if a not in eset or b not in eset or c not in eset:
            raise NotAGroup(f"table entry ({a!r},{b!r})->{c!r} leaves the element set")
    for a in elements:
        for b in elements:
            if (a, b) not in table:
                raise NotAGroup(f"Cayley table is missing the product {a}{b}")
    for a in elements:
        for b in elements:
            for c in elements:
                if table[(table[(a, b)], c)] != table[(a, table[(b, c)])]:
                    raise NotAGroup(f"associativity fails on ({a},{b},{c})")
    identity = None
    for e in elements:
        if all(table[(e, a)] == a and table[(a, e)] == a for a in elements):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no two-sided identity")
    inverse = {}
    for a in elements:
        inv = None
        for b in elements:
            if table[(a, b)] == identity and table[(b, a)] == identity:
                inv = b
                break
        if inv is None:
            raise NotAGroup(f"{a} has no inverse")
        inverse[a] = inv
    return Groupoid(elements, inverse, dict(table))


def cyclic_group_groupoid(n: int, prefix: str = "g") -> Groupoid:
    """Z/n as a one-object groupoid with elements g0..g{n-1}."""
    elements = [f"{prefix}{k}" for k in range(n)]
    table = {
        (f"{prefix}{a}", f"{prefix}{b}"): f"{prefix}{(a + b) % n}"
        for a in range(n)
        for b in range(n)
    }
    return group_groupoid(elements, table)


def trivial_groupoid(unit: str = "e") -> Groupoid:
    return group_groupoid([unit], {(unit, unit): unit})


def disjoint_union(g: Groupoid, h: Groupoid) -> Groupoid:
    """Disjoint union; elements are prefixed '0:'/'1:' to keep ids unique."""
    elements = [f"0:{e}" for e in g.elements] + [f"1:{e}" for e in h.elements]
    inverse = {f"0:{e}": f"0:{g.inverse[e]}" for e in g.elements}
    inverse.update({f"1:{e}": f"1:{h.inverse[e]}" for e in h.elements})
    compose = {(f"0:{a}", f"0:{b}"): f"0:{c}" for (a, b), c in g.compose.items()}
    compose.update({(f"1:{a}", f"1:{b}"): f"1:{c}" for (a, b), c in h.compose.items()})
    return Groupoid(elements, inverse, compose)


# -- the subset monoid ---------------------------------------------------


class SubsetElement:
    """A non-empty subset of a groupoid, element of the star monoid."""

    __slots__ = ("groupoid", "members")

    def __init__(self, groupoid: Groupoid, members):
        members = frozenset(members)
        if not members:
            raise GroupoidError("subset elements must be non-empty")
        unknown = members - set(groupoid.elements)
        if unknown:
            raise UnknownId(f"subset mentions unknown ids {sorted(unknown)}")
        self.groupoid = groupoid
        self.members = members

    def sorted_members(self) -> tuple:
        return self.groupoid.sorted_subset(self.members)

    def __eq__(self, other):
        return (
            isinstance(other, SubsetElement)
            and self.groupoid is other.groupoid
            and self.members == other.members
        )

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return "{" + ",".join(self.sorted_members()) + "}"


def unit_subset(g: Groupoid) -> SubsetElement:
    return SubsetElement(g, g.units)


def star_set(g: Groupoid, a, b) -> frozenset:
    """Set-level star product; may be empty (used by the associativity harness)."""
    out = set()
    for s in a:
        for t in b:
            if (s, t) in g.compose:
                out.add(g.compose[(s, t)])
    return frozenset(out)


def subset_star(a: SubsetElement, b: SubsetElement) -> SubsetElement:
    if a.groupoid is not b.groupoid and a.groupoid != b.groupoid:
        raise GroupoidError("star product of subsets over different groupoids")
    out = star_set(a.groupoid, a.members, b.members)
    if not out:
        raise EmptyProduct(f"{a!r} * {b!r} has no composable pair")
    return SubsetElement(a.groupoid, out)


def subset_inverse(a: SubsetElement) -> SubsetElement:
    return SubsetElement(a.groupoid, {a.groupoid.inverse[s] for s in a.members})


def subset_is_invertible(a: SubsetElement):
    """Decide invertibility in the star monoid.

    Invertibility is equivalent to both d and r restricting to bijections
    A -> units (note r on A carries the same information as d on A^-1).
    Returns ``(True, inverse, None)`` or ``(False, None, witness)`` where the
    witness names a missed or doubly-hit unit.
    """
    g = a.groupoid
    units = list(g.units)
    for label, value_of in (("d", g.d), ("r", g.r)):
        hits: dict = {}
        for s in a.sorted_members():
            hits.setdefault(value_of[s], []).append(s)
        for u in units:
            if u not in hits:
                return False, None, {"map": label, "unit": u, "kind": "missed"}
        for u in units:
            if len(hits.get(u, ())) > 1:
                return False, None, {"map": label, "unit": u, "kind": "repeated"}
    return True, subset_inverse(a), None


def sigma_set(g: Groupoid, sigma) -> SubsetElement:
    """The invertible subset attached to a single element.

    ``{s, s^-1} ∪ (units - {d(s), r(s)})`` when d(s) != r(s), else
    ``{s} ∪ (units - {d(s)})``.
    """
    if sigma not in g.index:
        raise UnknownId(f"unknown element {sigma!r}")
    ds, rs = g.d[sigma], g.r[sigma]
    if ds != rs:
        members = {sigma, g.inverse[sigma]} | (set(g.units) - {ds, rs})
    else:
        members = {sigma} | (set(g.units) - {ds})
    return SubsetElement(g, members)
