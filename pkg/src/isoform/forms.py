"""Hermitian forms as Gram matrices over a field with involution.

The pairing convention is linear in the FIRST argument:

    (v, w) = sum_ij v_i * conj(w_j) * gram[i][j]

so conjugate symmetry of the Gram matrix (gram[j][i] = conj(gram[i][j]))
gives (v, w) = conj((w, v)).  When the involution is the identity this is an
ordinary symmetric bilinear form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, FieldMismatch
from .fields import Field, FieldElement
from .linalg import Matrix, Vector, independent_columns, vec_is_zero


class Subspace:
    """A subspace of k^n given by a full-column-rank basis matrix (n x m)."""

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field: Field, ambient_dim: int, basis: Matrix):
        if basis.field != field:
            raise FieldMismatch("basis field differs from subspace field")
        if basis.nrows != ambient_dim:
            raise DimensionMismatch(
                f"basis has {basis.nrows} rows, ambient dimension is {ambient_dim}"
            )
        if basis.rank() != basis.ncols:
            raise DimensionMismatch("basis columns are linearly dependent")
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def spanned_by(cls, field: Field, ambient_dim: int, vectors) -> "Subspace":
        """Span of arbitrary vectors; reduces to an independent subset."""
        vectors = [tuple(v) for v in vectors]
        keep = independent_columns(field, ambient_dim, vectors)
        return cls(
            field,
            ambient_dim,
            Matrix.from_cols(field, ambient_dim, [vectors[i] for i in keep]),
        )

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix.from_cols(field, ambient_dim, []))

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.ncols

    def contains(self, v: Vector) -> bool:
        return self.basis.solve(tuple(v)) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(c) for c in other.basis.cols())

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.dim == other.dim
            and self.contains_subspace(other)
        )

    def __repr__(self):
        cols = ", ".join(
            "(" + ", ".join(str(x) for x in c) + ")" for c in self.basis.cols()
        )
        return f"Subspace({self.field}, dim {self.dim} of k^{self.ambient_dim}: {cols})"


@dataclass(frozen=True)
class DiagonalizationResult:
    """Invertible basis change B (columns = new basis) and the diagonal values."""

    basis_change: Matrix
    diagonal: Vector

    def transformed_gram(self, form: "HermitianForm") -> Matrix:
        """B^T * H * conj(B); diagonal with ``diagonal`` entries by contract."""
        b = self.basis_change
        return b.transpose() @ form.gram @ b.conj()


class HermitianForm:
    __slots__ = ("field", "n", "gram")

    def __init__(self, field: Field, gram: Matrix):
        if gram.field != field:
            raise FieldMismatch("gram matrix field differs from form field")
        if gram.nrows != gram.ncols:
            raise DimensionMismatch("gram matrix must be square")
        for i in range(gram.nrows):
            for j in range(i, gram.ncols):
                if gram[j, i] != gram[i, j].conj():
                    raise ValueError(
                        f"gram matrix is not conjugate-symmetric at ({i},{j})"
                    )
        self.field = field
        self.n = gram.nrows
        self.gram = gram

    @classmethod
    def diagonal(cls, field: Field, entries) -> "HermitianForm":
        entries = list(entries)
        zero = field.zero()
        n = len(entries)
        return cls(
            field,
            Matrix(
                field,
                [[entries[i] if i == j else zero for j in range(n)] for i in range(n)],
                ncols=n,
            ),
        )

    @classmethod
    def zero_form(cls, field: Field, n: int) -> "HermitianForm":
        return cls(field, Matrix.zeros(field, n, n))

    def __eq__(self, other):
        if not isinstance(other, HermitianForm):
            return NotImplemented
        return self.gram == other.gram

    def __repr__(self):
        return f"HermitianForm({self.gram!r})"

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, v: Vector, w: Vector) -> FieldElement:
        """(v, w): linear in v, conjugate-linear in w."""
        v, w = tuple(v), tuple(w)
        if len(v) != self.n or len(w) != self.n:
            raise DimensionMismatch(
                f"vectors must have length {self.n}, got {len(v)} and {len(w)}"
            )
        hw = self.gram.mul_vec(tuple(x.conj() for x in w))
        acc = self.field.zero()
        for a, b in zip(v, hw):
            acc = acc + a * b
        return acc

    def is_isotropic(self, v: Vector) -> bool:
        """True iff (v, v) = 0 (the zero vector included)."""
        return not self.evaluate(v, v)

    # -- subspace machinery ------------------------------------------------------

    def radical(self) -> Subspace:
        """{v : (v, w) = 0 for all w}, the kernel of v -> v^T * gram."""
        kernel = self.gram.transpose().kernel_basis()
        return Subspace(
            self.field, self.n, Matrix.from_cols(self.field, self.n, kernel)
        )

    def orthogonal_complement(self, w: Subspace) -> Subspace:
        """{v : (v, w_j) = 0 for every basis column w_j of W}."""
        self._check_subspace(w)
        constraints = (self.gram @ w.basis.conj()).transpose()
        kernel = constraints.kernel_basis()
        return Subspace(
            self.field, self.n, Matrix.from_cols(self.field, self.n, kernel)
        )

    def restrict(self, w: Subspace) -> "HermitianForm":
        """The m x m Gram matrix of the form on W's basis."""
        self._check_subspace(w)
        return HermitianForm(self.field, self._gram_on(w.basis))

    def _gram_on(self, basis: Matrix) -> Matrix:
        return basis.transpose() @ self.gram @ basis.conj()

    def _check_subspace(self, w: Subspace):
        if w.field != self.field:
            raise FieldMismatch("subspace field differs from form field")
        if w.ambient_dim != self.n:
            raise DimensionMismatch(
                f"subspace lives in k^{w.ambient_dim}, form in k^{self.n}"
            )

    # -- constructive results ------------------------------------------------------

    def non_isotropic_vector(self) -> Vector | None:
        """A vector v with (v, v) != 0, or None for the zero form.

        Deterministic recipe: the first basis vector with nonzero diagonal
        entry if one exists; otherwise take the lexicographically first
        off-diagonal a = gram[i][j] != 0 and return e_i + t*e_j, where t = 1
        when a + conj(a) != 0 and otherwise t is the canonical non-fixed
        element (then (v,v) = (conj(t) - t) * a != 0).
        """
        g = self.gram
        zero, one = self.field.zero(), self.field.one()
        for i in range(self.n):
            if g[i, i]:
                return tuple(one if k == i else zero for k in range(self.n))
        for i in range(self.n):
            for j in range(i + 1, self.n):
                a = g[i, j]
                if not a:
                    continue
                if a + a.conj():
                    t = one
                else:
                    t = self.field.nonfixed_element()
                    assert t is not None, "a + conj(a) = 2a != 0 under identity involution"
                v = [zero] * self.n
                v[i], v[j] = one, t
                return tuple(v)
        return None

    def diagonalize(self) -> DiagonalizationResult:
        """Orthogonal basis e_1..e_n with (e_i, e_j) = 0 for i != j.

        Induction: pick e with (e, e) != 0 in the current complement, emit
        it, and project the remaining spanning vectors onto <e>-perp via
        v -> v - ((v,e)/(e,e)) e; once the restricted form is zero, the
        remaining basis is emitted as-is with zero diagonal entries, so the
        operation is total (degenerate and zero forms included).
        """
        field = self.field
        basis: list[Vector] = [c for c in Matrix.identity(field, self.n).cols()]
        emitted: list[Vector] = []
        diag: list[FieldElement] = []
        zero = field.zero()
        while basis:
            bm = Matrix.from_cols(field, self.n, basis)
            sub = HermitianForm(field, self._gram_on(bm))
            coeffs = sub.non_isotropic_vector()
            if coeffs is None:
                emitted.extend(basis)
                diag.extend([zero] * len(basis))
                break
            e = bm.mul_vec(coeffs)
            lam = self.evaluate(e, e)
            emitted.append(e)
            diag.append(lam)
            lam_inv = lam.inv()
            projected = []
            for b in basis:
                coeff = self.evaluate(b, e) * lam_inv
                projected.append(tuple(x - coeff * y for x, y in zip(b, e)))
            projected = [v for v in projected if not vec_is_zero(v)]
            keep = independent_columns(field, self.n, projected)
            assert len(keep) == len(basis) - 1
            basis = [projected[k] for k in keep]
        change = Matrix.from_cols(field, self.n, emitted)
        assert change.is_invertible()
        return DiagonalizationResult(change, tuple(diag))
