"""Exact dense linear algebra over finite field towers.

Everything here is plain Gaussian elimination over a FieldSpec; no floating
point is involved anywhere.  Matrices are immutable.  Kernel bases are
canonical: one vector per free column in increasing column order, with a
unit in the free position, so tests can compare bases literally.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    NotSquareError,
    SizeConstraintError,
)
from .fields import FieldElement, FieldSpec

__all__ = [
    "MatrixF",
    "det",
    "rank",
    "rref",
    "kernel",
    "solve",
    "subspace_intersection_dim",
    "block_mds_matrix",
]


class MatrixF:
    """An immutable matrix over a FieldSpec."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: FieldSpec, rows: Sequence[Sequence]):
        self.field = field
        coerced = tuple(
            tuple(field.element(v) for v in row) for row in rows
        )
        self.nrows = len(coerced)
        self.ncols = len(coerced[0]) if coerced else 0
        for row in coerced:
            if len(row) != self.ncols:
                raise DimensionMismatchError("ragged rows")
        self.rows = coerced

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "MatrixF":
        return cls(
            field,
            [[field.one if i == j else field.zero for j in range(n)] for i in range(n)],
        )

    @classmethod
    def zeros(cls, field: FieldSpec, r: int, c: int) -> "MatrixF":
        return cls(field, [[field.zero] * c for _ in range(r)])

    @classmethod
    def from_cols(cls, field: FieldSpec, cols: Sequence[Sequence]) -> "MatrixF":
        if not cols:
            return cls(field, [])
        n = len(cols[0])
        return cls(field, [[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def __getitem__(self, ij: Tuple[int, int]) -> FieldElement:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> Tuple[FieldElement, ...]:
        return self.rows[i]

    def col(self, j: int) -> Tuple[FieldElement, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "MatrixF":
        return MatrixF(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "MatrixF":
        return MatrixF(
            self.field, [[self.rows[i][j] for j in cols] for i in rows]
        )

    def hstack(self, other: "MatrixF") -> "MatrixF":
        if self.field != other.field:
            raise FieldMismatchError("cannot stack matrices over different fields")
        if self.nrows != other.nrows:
            raise DimensionMismatchError("row counts differ")
        return MatrixF(
            self.field,
            [self.rows[i] + other.rows[i] for i in range(self.nrows)],
        )

    def __matmul__(self, other: "MatrixF") -> "MatrixF":
        if self.field != other.field:
            raise FieldMismatchError("cannot multiply matrices over different fields")
        if self.ncols != other.nrows:
            raise DimensionMismatchError(
                f"inner dimensions {self.ncols} and {other.nrows} differ"
            )
        z = self.field.zero
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for t in range(self.ncols):
                    a = self.rows[i][t]
                    b = other.rows[t][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return MatrixF(self.field, out)

    def mul_vector(self, vec: Sequence[FieldElement]) -> Tuple[FieldElement, ...]:
        if len(vec) != self.ncols:
            raise DimensionMismatchError("vector length differs from column count")
        z = self.field.zero
        out = []
        for i in range(self.nrows):
            acc = z
            for t in range(self.ncols):
                a = self.rows[i][t]
                if a and vec[t]:
                    acc = acc + a * vec[t]
            out.append(acc)
        return tuple(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixF):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.field, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(e.to_int()) for e in row) for row in self.rows
        )
        return f"MatrixF({self.nrows}x{self.ncols} over {self.field!r}: {body})"


def det(m: MatrixF) -> FieldElement:
    """Determinant by elimination; the empty matrix has determinant one."""
    if m.nrows != m.ncols:
        raise NotSquareError(f"{m.nrows}x{m.ncols} matrix has no determinant")
    n = m.nrows
    f = m.field
    if n == 0:
        return f.one
    a = [list(row) for row in m.rows]
    sign = 1
    result = f.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return f.zero
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        pv = a[col][col]
        result = result * pv
        inv = pv.inverse()
        for r in range(col + 1, n):
            if a[r][col]:
                factor = a[r][col] * inv
                a[r] = [
                    a[r][j] - factor * a[col][j] if j >= col else f.zero
                    for j in range(n)
                ]
    return result if sign == 1 else -result


def _rref_rows(
    field: FieldSpec, rows: List[List[FieldElement]]
) -> Tuple[List[List[FieldElement]], List[int]]:
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [inv * v for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [
                    rows[i][j] - factor * rows[r][j] for j in range(n)
                ]
        pivots.append(col)
        r += 1
        if r == m:
            break
    return rows, pivots


def rref(m: MatrixF) -> Tuple[MatrixF, Tuple[int, ...]]:
    """Reduced row echelon form and the pivot column indices."""
    rows, pivots = _rref_rows(m.field, [list(r) for r in m.rows])
    return MatrixF(m.field, rows), tuple(pivots)


def rank(m: MatrixF) -> int:
    return len(rref(m)[1])


def kernel(m: MatrixF) -> List[Tuple[FieldElement, ...]]:
    """Canonical right-kernel basis: one vector per free column, unit there."""
    f = m.field
    rows, pivots = _rref_rows(f, [list(r) for r in m.rows])
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        vec = [f.zero] * m.ncols
        vec[free] = f.one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][free]
        basis.append(tuple(vec))
    return basis


def solve(m: MatrixF, b: Sequence[FieldElement]) -> Optional[Tuple[FieldElement, ...]]:
    """One solution of m x = b with free variables set to zero, or None."""
    if len(b) != m.nrows:
        raise DimensionMismatchError("right-hand side length differs from row count")
    f = m.field
    aug = [list(m.rows[i]) + [f.element(b[i])] for i in range(m.nrows)]
    if not aug:
        return tuple()
    rows, pivots = _rref_rows(f, aug)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [f.zero] * m.ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m.ncols]
    return tuple(x)


def _col_basis(m: MatrixF) -> MatrixF:
    """Matrix whose columns are an independent spanning set of the column space."""
    _, pivots = rref(m)
    return m.submatrix(range(m.nrows), pivots)


def subspace_intersection_dim(bases: Sequence[MatrixF]) -> int:
    """Dimension of the intersection of column spaces.

    Computed pairwise: vectors in span(U) and span(B) correspond to kernel
    elements of [U | B], whose U-part coordinates give the intersection.
    """
    if not bases:
        raise DimensionMismatchError("need at least one subspace")
    field = bases[0].field
    ambient = bases[0].nrows
    for b in bases[1:]:
        if b.field != field:
            raise FieldMismatchError("subspace bases over different fields")
        if b.nrows != ambient:
            raise DimensionMismatchError("subspaces of different ambient spaces")
    current = _col_basis(bases[0])
    for b in bases[1:]:
        if current.ncols == 0:
            return 0
        b = _col_basis(b)
        if b.ncols == 0:
            return 0
        ker = kernel(current.hstack(b))
        cols = [
            current.mul_vector(vec[: current.ncols]) for vec in ker
        ]
        current = _col_basis(MatrixF.from_cols(field, cols)) if cols else MatrixF(field, [[] for _ in range(ambient)])
    return current.ncols


def block_mds_matrix(v: MatrixF, sets: Sequence[Sequence[int]]) -> MatrixF:
    """The square certificate matrix for an intersection of column spans.

    For a k x n matrix and index sets A_1..A_l with |A_i| <= k and
    sum |A_i| = (l-1) k, builds the (l k) x (l k) matrix whose row block i
    is [I_k | 0 .. | v restricted to A_i | .. 0]; it is singular exactly
    when the column spans of the A_i intersect nontrivially, provided each
    restriction has full column rank.
    """
    k = v.nrows
    n = v.ncols
    ell = len(sets)
    norm = [sorted(a) for a in sets]
    total = sum(len(a) for a in norm)
    if ell < 1:
        raise SizeConstraintError("need at least one index set")
    for a in norm:
        if len(set(a)) != len(a):
            raise SizeConstraintError("index sets cannot repeat elements")
        if len(a) > k:
            raise SizeConstraintError(f"set of size {len(a)} exceeds k={k}")
        if any(i < 0 or i >= n for i in a):
            raise SizeConstraintError("column index out of range")
    if total != (ell - 1) * k:
        raise SizeConstraintError(
            f"sizes sum to {total}, need (l-1)k = {(ell - 1) * k}"
        )
    f = v.field
    size = ell * k
    rows = [[f.zero] * size for _ in range(size)]
    for b in range(ell):
        for i in range(k):
            rows[b * k + i][i] = f.one
    offset = k
    for b, a in enumerate(norm):
        for j, colidx in enumerate(a):
            for i in range(k):
                rows[b * k + i][offset + j] = v[i, colidx]
        offset += len(a)
    return MatrixF(f, rows)
