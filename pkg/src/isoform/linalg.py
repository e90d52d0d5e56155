"""Exact dense matrices and Gaussian elimination over the isoform fields.

Matrices are immutable tuples of row tuples; every operation returns a new
matrix.  Rank / kernel / solve all run reduced row echelon elimination with
first-nonzero pivoting, which is deterministic and needs no pivot-size
heuristics because the arithmetic is exact.
"""

from __future__ import annotations

from .errors import DimensionMismatch, FieldMismatch
from .fields import Field, FieldElement

Vector = tuple  # tuple of FieldElement


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows, ncols: int | None = None):
        rows = tuple(tuple(row) for row in rows)
        if rows:
            ncols = len(rows[0])
        elif ncols is None:
            ncols = 0
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatch("ragged matrix rows")
            for x in row:
                if not isinstance(x, FieldElement) or x.field != field:
                    raise FieldMismatch(f"matrix entry {x!r} not in {field}")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        zero, one = field.zero(), field.one()
        return cls(
            field, [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero()
        return cls(field, [[zero] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_cols(cls, field: Field, nrows: int, cols) -> "Matrix":
        cols = [tuple(c) for c in cols]
        for c in cols:
            if len(c) != nrows:
                raise DimensionMismatch("column length does not match nrows")
        return cls(
            field,
            [[c[i] for c in cols] for i in range(nrows)],
            ncols=len(cols),
        )

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def cols(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def conj(self) -> "Matrix":
        """Entrywise involution."""
        return Matrix(
            self.field, [[x.conj() for x in row] for row in self.rows], ncols=self.ncols
        )

    def conj_transpose(self) -> "Matrix":
        return self.transpose().conj()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        ocols = other.transpose().rows
        zero = self.field.zero()
        out = []
        for row in self.rows:
            out_row = []
            for col in ocols:
                acc = zero
                for a, b in zip(row, col):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(self.field, out, ncols=other.ncols)

    def mul_vec(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector length {len(v)} != {self.ncols} columns")
        zero = self.field.zero()
        out = []
        for row in self.rows:
            acc = zero
            for a, x in zip(row, v):
                acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("matrix shapes differ")
        return Matrix(
            self.field,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
            ncols=self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-self.field.one())

    def scale(self, c: FieldElement) -> "Matrix":
        return Matrix(
            self.field, [[c * x for x in row] for row in self.rows], ncols=self.ncols
        )

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    def is_diagonal(self) -> bool:
        return all(
            not x for i, row in enumerate(self.rows) for j, x in enumerate(row) if i != j
        )

    def diagonal(self) -> Vector:
        return tuple(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}: {body})"

    def _check_field(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"cannot mix matrices over {self.field} and {other.field}")

    # -- elimination-backed queries ------------------------------------------

    def rref(self) -> tuple[list[list[FieldElement]], list[int]]:
        """Reduced row echelon form (copy) and its pivot column indices."""
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            pivot_row = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = rows[r][c].inv()
            rows[r] = [inv * x for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return rows, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def kernel_basis(self) -> list[Vector]:
        """Basis of {v : A v = 0}, one vector per free column, deterministic."""
        rows, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        zero, one = self.field.zero(), self.field.one()
        basis = []
        for f in free:
            v = [zero] * self.ncols
            v[f] = one
            for r, p in enumerate(pivots):
                v[p] = -rows[r][f]
            basis.append(tuple(v))
        return basis

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise DimensionMismatch("only square matrices can be inverted")
        n = self.nrows
        ident = Matrix.identity(self.field, n)
        aug = Matrix(
            self.field,
            [list(r) + list(i) for r, i in zip(self.rows, ident.rows)],
            ncols=2 * n,
        )
        rows, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix(self.field, [row[n:] for row in rows], ncols=n)

    def solve(self, b: Vector) -> Vector | None:
        """One solution x of A x = b (free variables set to 0), or None."""
        if len(b) != self.nrows:
            raise DimensionMismatch(f"rhs length {len(b)} != {self.nrows} rows")
        aug = Matrix(
            self.field,
            [list(row) + [bi] for row, bi in zip(self.rows, b)],
            ncols=self.ncols + 1,
        )
        rows, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        zero = self.field.zero()
        x = [zero] * self.ncols
        for r, p in enumerate(pivots):
            x[p] = rows[r][self.ncols]
        return tuple(x)


def independent_columns(field: Field, nrows: int, vectors) -> list[int]:
    """Indices of a greedy maximal linearly independent subset, earliest first.

    Incremental elimination: each candidate is reduced against the pivots
    collected so far, so the whole pass is one Gaussian elimination.
    """
    reduced: list[tuple[int, tuple]] = []  # (pivot position, normalized vector)
    chosen: list[int] = []
    for idx, v in enumerate(vectors):
        w = list(v)
        for piv, r in reduced:
            if w[piv]:
                f = w[piv]
                w = [a - f * b for a, b in zip(w, r)]
        pivot = next((i for i, x in enumerate(w) if x), None)
        if pivot is not None:
            inv = w[pivot].inv()
            reduced.append((pivot, tuple(inv * x for x in w)))
            chosen.append(idx)
    return chosen


def vec_add(v: Vector, w: Vector) -> Vector:
    return tuple(a + b for a, b in zip(v, w))


def vec_sub(v: Vector, w: Vector) -> Vector:
    return tuple(a - b for a, b in zip(v, w))


def vec_scale(c: FieldElement, v: Vector) -> Vector:
    return tuple(c * x for x in v)


def vec_is_zero(v: Vector) -> bool:
    return all(not x for x in v)
