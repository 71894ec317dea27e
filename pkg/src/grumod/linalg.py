"""Dense exact matrices and the Gaussian-elimination kernel.

Everything downstream (unitality solves, HOM spaces, splitting systems,
submodule enumeration) reduces to rref / kernel / solve over an exact field.
Pivoting is deterministic (first nonzero entry), so all derived bases and
reports are reproducible byte for byte.
"""

from __future__ import annotations

from typing import Optional

from .fields import Field


class DimensionMismatch(ValueError):
    pass


class Matrix:
    """Immutable dense matrix over an exact field.

    Rows are stored as tuples of native scalars of ``field``.
    """

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, data, cols: Optional[int] = None):
        self.field = field
        rows = [tuple(field.coerce(x) for x in row) for row in data]
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else (cols or 0)
        for row in rows:
            if len(row) != self.cols:
                raise DimensionMismatch("ragged rows")
        self.data = tuple(rows)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return cls(field, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Matrix":
        return cls(field, rows)

    @classmethod
    def column(cls, field: Field, vec) -> "Matrix":
        return cls(field, [[x] for x in vec])

    def row(self, i: int):
        return self.data[i]

    def col(self, j: int):
        return tuple(self.data[i][j] for i in range(self.rows))

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data == other.data
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field!r})"

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(x == z for row in self.data for x in row)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.col(j) for j in range(self.cols)], cols=self.rows)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        return Matrix(self.field, [self.data[i] + other.data[i] for i in range(self.rows)])

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise DimensionMismatch("vstack column mismatch")
        return Matrix(self.field, list(self.data) + list(other.data))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition shape mismatch")
        f = self.field
        return Matrix(
            f,
            [
                [f.add(self.data[i][j], other.data[i][j]) for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(self.field.neg(self.field.one()))

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix(f, [[f.mul(c, x) for x in row] for row in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"matmul shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        f = self.field
        z = f.zero()
        out = []
        for i in range(self.rows):
            row = []
            a = self.data[i]
            for j in range(other.cols):
                s = z
                for k in range(self.cols):
                    if a[k] != z:
                        s = f.add(s, f.mul(a[k], other.data[k][j]))
                row.append(s)
            out.append(row)
        return Matrix(f, out)

    def apply(self, vec) -> tuple:
        """Matrix-vector product, vectors as plain tuples."""
        if len(vec) != self.cols:
            raise DimensionMismatch("apply length mismatch")
        f = self.field
        z = f.zero()
        out = []
        for i in range(self.rows):
            s = z
            row = self.data[i]
            for k, x in enumerate(vec):
                if x != z:
                    s = f.add(s, f.mul(row[k], f.coerce(x)))
            out.append(s)
        return tuple(out)

    # -- elimination ---------------------------------------------------

    def rref(self, with_transform: bool = False):
        """Reduced row echelon form.

        Returns ``(R, pivots)``, or ``(R, pivots, T)`` with ``T @ self == R``
        when ``with_transform`` is set (used for infeasibility certificates).
        """
        f = self.field
        z = f.zero()
        rows = [list(r) for r in self.data]
        trans = [list(r) for r in Matrix.identity(f, self.rows).data] if with_transform else None
        pivots = []
        pr = 0
        for pc in range(self.cols):
            pivot_row = None
            for i in range(pr, self.rows):
                if rows[i][pc] != z:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            if pivot_row != pr:
                rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
                if trans is not None:
                    trans[pr], trans[pivot_row] = trans[pivot_row], trans[pr]
            inv = f.inv(rows[pr][pc])
            if rows[pr][pc] != f.one():
                rows[pr] = [f.mul(inv, x) for x in rows[pr]]
                if trans is not None:
                    trans[pr] = [f.mul(inv, x) for x in trans[pr]]
            for i in range(self.rows):
                if i != pr and rows[i][pc] != z:
                    c = rows[i][pc]
                    rows[i] = [f.sub(rows[i][j], f.mul(c, rows[pr][j])) for j in range(self.cols)]
                    if trans is not None:
                        trans[i] = [
                            f.sub(trans[i][j], f.mul(c, trans[pr][j])) for j in range(self.rows)
                        ]
            pivots.append(pc)
            pr += 1
            if pr == self.rows:
                break
        R = Matrix(f, rows) if rows else Matrix.zeros(f, 0, self.cols)
        if with_transform:
            T = Matrix(f, trans) if trans else Matrix.zeros(f, 0, 0)
            return R, pivots, T
        return R, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[tuple]:
        """Basis vectors of the null space, deterministic order."""
        f = self.field
        z, o = f.zero(), f.one()
        R, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for fc in free:
            v = [z] * self.cols
            v[fc] = o
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(R.data[r][fc])
            basis.append(tuple(v))
        return basis

    def solve(self, b, with_certificate: bool = False):
        """One exact solution of ``A x = b`` or ``None``.

        With ``with_certificate`` returns ``(x, None)`` on success and
        ``(None, y)`` on failure, where ``y @ A == 0`` and ``y @ b != 0``.
        """
        if len(b) != self.rows:
            raise DimensionMismatch("solve rhs length mismatch")
        f = self.field
        z = f.zero()
        aug = self.hstack(Matrix.column(f, [f.coerce(x) for x in b]))
        R, pivots, T = aug.rref(with_transform=True)
        for r, pc in enumerate(pivots):
            if pc == self.cols:
                if with_certificate:
                    return None, T.data[r]
                return None
        x = [z] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = R.data[r][self.cols]
        x = tuple(x)
        if with_certificate:
            return x, None
        return x

    def inverse(self) -> Optional["Matrix"]:
        if self.rows != self.cols:
            return None
        f = self.field
        aug = self.hstack(Matrix.identity(f, self.rows))
        R, pivots = aug.rref()
        if pivots != list(range(self.rows)):
            return None
        return Matrix(f, [row[self.rows:] for row in R.data])

    def to_lists(self, rendered: bool = False):
        if rendered:
            return [[self.field.render(x) for x in row] for row in self.data]
        return [list(row) for row in self.data]


# -- subspaces as canonical RREF row bases -----------------------------


def rowspace_basis(field: Field, rows) -> list[tuple]:
    """Canonical basis of the span of ``rows``: nonzero rows of the RREF."""
    rows = list(rows)
    if not rows:
        return []
    R, pivots = Matrix(field, rows).rref()
    return [R.data[i] for i in range(len(pivots))]


def subspace_dim(basis) -> int:
    return len(basis)

def subspace_contains(field: Field, basis, vec) -> bool:
    """Membership test against an RREF row basis."""
    v = list(field.coerce(x) for x in vec)
    z = field.zero()
    for row in basis:
        lead = _leading_index(field, row)
        if lead is not None and v[lead] != z:
            c = v[lead]
            v = [field.sub(v[j], field.mul(c, row[j])) for j in range(len(v))]
    return all(x == z for x in v)


def reduce_mod(field: Field, basis, vec) -> tuple:
    """Reduce ``vec`` modulo the RREF row basis (zero out pivot coordinates)."""
    v = list(field.coerce(x) for x in vec)
    z = field.zero()
    for row in basis:
        lead = _leading_index(field, row)
        if lead is not None and v[lead] != z:
            c = v[lead]
            v = [field.sub(v[j], field.mul(c, row[j])) for j in range(len(v))]
    return tuple(v)


def _leading_index(field: Field, row):
    z = field.zero()
    for j, x in enumerate(row):
        if x != z:
            return j
    return None


def subspace_sum(field: Field, basis_a, basis_b) -> list[tuple]:
    return rowspace_basis(field, list(basis_a) + list(basis_b))


def subspace_equal(field: Field, basis_a, basis_b) -> bool:
    return rowspace_basis(field, basis_a) == rowspace_basis(field, basis_b)


def subspace_intersection(field: Field, basis_a, basis_b, ambient_dim: int) -> list[tuple]:
    """Zassenhaus-free intersection: solve for combinations landing in both."""
    a = list(basis_a)
    b = list(basis_b)
    if not a or not b:
        return []
    # columns: coefficients on a-rows then b-rows; rows: ambient coordinates
    cols = []
    for row in a:
        cols.append(list(row))
    for row in b:
        cols.append([field.neg(x) for x in row])
    M = Matrix(field, cols).transpose()
    inter = []
    for k in M.kernel_basis():
        coeffs = k[: len(a)]
        vec = [field.zero()] * ambient_dim
        for c, row in zip(coeffs, a):
            if c != field.zero():
                vec = [field.add(vec[j], field.mul(c, row[j])) for j in range(ambient_dim)]
        inter.append(tuple(vec))
    return rowspace_basis(field, inter)


def enumerate_subspaces(field: Field, dim: int):
    """All subspaces of GF(p)^dim as canonical RREF bases, by rank then pivots.

    Enumerates reduced echelon matrices directly; only valid over finite
    fields and intended for desk-scale dims.
    """
    from itertools import combinations, product

    if not field.is_finite:
        raise ValueError("subspace enumeration needs a finite field")
    yield []
    elems = list(field.elements())
    for rank in range(1, dim + 1):
        for pivots in combinations(range(dim), rank):
            free_positions = []
            for r in range(rank):
                for c in range(dim):
                    if c <= pivots[r] or c in pivots:
                        continue
                    free_positions.append((r, c))
            for values in product(elems, repeat=len(free_positions)):
                rows = [[field.zero()] * dim for _ in range(rank)]
                for r in range(rank):
                    rows[r][pivots[r]] = field.one()
                for (r, c), v in zip(free_positions, values):
                    rows[r][c] = v
                yield [tuple(r) for r in rows]
