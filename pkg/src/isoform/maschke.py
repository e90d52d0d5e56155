"""Finite matrix groups acting on k^n: invariant forms and complete reducibility.

Averaging a seed Hermitian form over the group always yields a G-invariant
form, but over fields with isotropic vectors the result can be degenerate or
carry isotropic vectors, so the span W of an isotropic vector satisfies
W <= W-perp and the form-based complement argument collapses.  The averaged
projector construction (Maschke) still works whenever char k does not divide
|G|; ``counterexample_report`` exhibits both facts side by side on the same
input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    CharacteristicDividesOrder,
    DimensionMismatch,
    FieldMismatch,
    GroupTooLarge,
    NoIsotropicVector,
    NotInvariant,
    SingularGenerator,
)
from .fields import Field
from .forms import HermitianForm, Subspace
from .isotropy import DEFAULT_SEARCH_BOUND, IsotropyWitness, isotropic_any
from .linalg import Matrix, vec_is_zero

DEFAULT_GROUP_CAP = 10_000
DEFAULT_PROBE_BUDGET = 64
_EIGEN_SCAN_CAP = 128  # scalars tried per probe matrix when hunting eigenspaces


class Representation:
    """A finite matrix group given by generators, with its full closure."""

    __slots__ = ("field", "dim", "generators", "elements", "order")

    def __init__(self, field: Field, dim: int, generators, elements):
        self.field = field
        self.dim = dim
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.order = len(self.elements)

    @classmethod
    def close(
        cls,
        field: Field,
        generators,
        dim: int | None = None,
        max_group: int = DEFAULT_GROUP_CAP,
    ) -> "Representation":
        """Breadth-first closure of the generators under multiplication.

        Element order is deterministic (insertion order, identity first).
        ``dim`` is inferred from the generators; it must be given explicitly
        for the trivial (generator-free) group.
        """
        generators = tuple(generators)
        if generators:
            inferred = generators[0].nrows
            if dim is not None and dim != inferred:
                raise DimensionMismatch(
                    f"declared dimension {dim} but generators are {inferred}x{inferred}"
                )
            dim = inferred
        elif dim is None:
            raise DimensionMismatch("dimension is required for a generator-free group")
        for g in generators:
            if g.field != field:
                raise FieldMismatch("generator field differs from representation field")
            if g.nrows != g.ncols:
                raise DimensionMismatch("generators must be square")
            if g.nrows != dim:
                raise DimensionMismatch("generators must share one dimension")
            if not g.is_invertible():
                raise SingularGenerator(f"generator is singular: {g!r}")
        ident = Matrix.identity(field, dim)
        elements = [ident]
        seen = {ident}
        cursor = 0
        while cursor < len(elements):
            x = elements[cursor]
            cursor += 1
            for g in generators:
                y = x @ g
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    if len(elements) > max_group:
                        raise GroupTooLarge(
                            f"group closure exceeded {max_group} elements"
                        )
        return cls(field, dim, generators, elements)

    @classmethod
    def trivial(cls, field: Field, dim: int) -> "Representation":
        """The trivial action of the one-element group on k^dim."""
        ident = Matrix.identity(field, dim)
        return cls(field, dim, (), (ident,))

    @property
    def char_divides_order(self) -> bool:
        p = self.field.characteristic
        return p != 0 and self.order % p == 0

    def __repr__(self):
        return (
            f"Representation({self.field}, dim {self.dim}, "
            f"{len(self.generators)} generators, order {self.order})"
        )

    # -- invariant forms ---------------------------------------------------------

    def average_form(self, seed: HermitianForm) -> HermitianForm:
        """sum_g rho(g)^T * H_seed * conj(rho(g)): always G-invariant.

        The result may be degenerate or carry isotropic vectors; that is a
        legal outcome (and the phenomenon the counterexample report shows),
        not an error.
        """
        if seed.field != self.field:
            raise FieldMismatch("seed form field differs from representation field")
        if seed.n != self.dim:
            raise DimensionMismatch(
                f"seed form has dim {seed.n}, representation acts on k^{self.dim}"
            )
        acc = Matrix.zeros(self.field, self.dim, self.dim)
        for g in self.elements:
            acc = acc + g.transpose() @ seed.gram @ g.conj()
        averaged = HermitianForm(self.field, acc)
        for g in self.generators:
            assert g.transpose() @ acc @ g.conj() == acc
        return averaged

    # -- invariant subspaces ---------------------------------------------------------

    def is_invariant_subspace(self, w: Subspace) -> bool:
        """True iff rho(g) W <= W for every generator."""
        self._check_subspace(w)
        for g in self.generators:
            for col in w.basis.cols():
                if not w.contains(g.mul_vec(col)):
                    return False
        return True

    def equivariant_projector(self, w: Subspace) -> tuple[Matrix, Subspace]:
        """Averaged projector onto the invariant subspace W and its complement.

        Builds a plain coordinate projector pi0 onto W (greedy standard-basis
        completion), then pi = |G|^{-1} sum_g rho(g) pi0 rho(g)^{-1}, which is
        idempotent, commutes with the action, has image W, and whose kernel is
        a G-invariant complement of W.
        """
        self._check_subspace(w)
        if not self.is_invariant_subspace(w):
            raise NotInvariant("subspace is not stable under the group action")
        p = self.field.characteristic
        if p != 0 and self.order % p == 0:
            raise CharacteristicDividesOrder(
                f"char {p} divides the group order {self.order}"
            )
        n, m = self.dim, w.dim
        cols = list(w.basis.cols())
        ident = Matrix.identity(self.field, n)
        for k in range(n):
            if len(cols) == n:
                break
            trial = cols + [ident.col(k)]
            if Matrix.from_cols(self.field, n, trial).rank() == len(trial):
                cols = trial
        change = Matrix.from_cols(self.field, n, cols)
        zero, one = self.field.zero(), self.field.one()
        head = Matrix(
            self.field,
            [[one if i == j and i < m else zero for j in range(n)] for i in range(n)],
            ncols=n,
        )
        pi0 = change @ head @ change.inverse()
        if self.order == 1:
            pi = pi0
        else:
            acc = Matrix.zeros(self.field, n, n)
            for g in self.elements:
                acc = acc + g @ pi0 @ g.inverse()
            pi = acc.scale(self.field.from_int(self.order).inv())
        assert pi @ pi == pi
        for g in self.generators:
            assert pi @ g == g @ pi
        for col in w.basis.cols():
            assert pi.mul_vec(col) == col
        complement = Subspace(
            self.field, n, Matrix.from_cols(self.field, n, pi.kernel_basis())
        )
        assert complement.dim == n - m
        return pi, complement

    def decompose(
        self, seed: int = 0, budget: int = DEFAULT_PROBE_BUDGET
    ) -> list[Subspace]:
        """Invariant summands whose dimensions sum to n.

        Recursively looks for a proper invariant subspace (orbit sums of
        basis/random vectors, then kernels/images/eigenspaces of averaged
        probe maps sum_g rho(g) A rho(g)^{-1}) and splits with the
        equivariant projector.  The probe search is budget-bounded, so
        summands that resist splitting are returned as-is; irreducibility is
        not certified.
        """
        p = self.field.characteristic
        if p != 0 and self.order % p == 0:
            raise CharacteristicDividesOrder(
                f"char {p} divides the group order {self.order}"
            )
        rng = random.Random(seed)
        return self._split(Subspace.full(self.field, self.dim), rng, budget)

    def _split(self, space: Subspace, rng, budget: int) -> list[Subspace]:
        if space.dim <= 1:
            return [space]
        restricted = self._restrict_to(space)
        found = _find_proper_invariant(self.field, restricted, rng, budget)
        if found is None:
            return [space]
        sub_rep = Representation(self.field, space.dim, restricted, restricted)
        _, sub_complement = sub_rep.equivariant_projector(found)
        lift = lambda s: Subspace(
            self.field,
            self.dim,
            Matrix.from_cols(
                self.field,
                self.dim,
                [space.basis.mul_vec(c) for c in s.basis.cols()],
            ),
        )
        return self._split(lift(found), rng, budget) + self._split(
            lift(sub_complement), rng, budget
        )

    def _restrict_to(self, space: Subspace) -> list[Matrix]:
        """Matrices of every group element in the basis of an invariant subspace."""
        mats = []
        for g in self.elements:
            cols = []
            for col in space.basis.cols():
                coords = space.basis.solve(g.mul_vec(col))
                if coords is None:
                    raise NotInvariant("subspace is not stable under the group action")
                cols.append(coords)
            mats.append(Matrix.from_cols(self.field, space.dim, cols))
        return mats

    def _check_subspace(self, w: Subspace):
        if w.field != self.field:
            raise FieldMismatch("subspace field differs from representation field")
        if w.ambient_dim != self.dim:
            raise DimensionMismatch(
                f"subspace lives in k^{w.ambient_dim}, representation in k^{self.dim}"
            )


def _find_proper_invariant(
    field: Field, elements: list[Matrix], rng, budget: int
) -> Subspace | None:
    """A proper nonzero invariant subspace of k^m, or None within budget."""
    m = elements[0].nrows
    inverses = [g.inverse() for g in elements]
    ident = Matrix.identity(field, m)
    spent = 0

    def orbit_sum_line(v) -> Subspace | None:
        acc = tuple(field.zero() for _ in range(m))
        for g in elements:
            gv = g.mul_vec(v)
            acc = tuple(a + b for a, b in zip(acc, gv))
        if vec_is_zero(acc):
            return None
        return Subspace.spanned_by(field, m, [acc])

    def from_probe_matrix(a: Matrix) -> Subspace | None:
        acc = Matrix.zeros(field, m, m)
        for g, ginv in zip(elements, inverses):
            acc = acc + g @ a @ ginv
        candidates = []
        kernel = acc.kernel_basis()
        if 0 < len(kernel) < m:
            candidates.append(kernel)
        col_rank = acc.rank()
        if 0 < col_rank < m:
            candidates.append(acc.cols())
        for k in candidates:
            return Subspace.spanned_by(field, m, k)
        for c in _eigen_scan_values(field, acc):
            shifted = acc - ident.scale(c)
            kernel = shifted.kernel_basis()
            if 0 < len(kernel) < m:
                return Subspace.spanned_by(field, m, kernel)
        return None

    # deterministic probes first: standard-vector orbit sums, then matrix units
    for i in range(m):
        if spent >= budget:
            return None
        spent += 1
        line = orbit_sum_line(ident.col(i))
        if line is not None:
            return line
    for k in range(m):
        for l in range(m):
            if spent >= budget:
                return None
            spent += 1
            unit = Matrix(
                field,
                [
                    [
                        field.one() if (i, j) == (k, l) else field.zero()
                        for j in range(m)
                    ]
                    for i in range(m)
                ],
                ncols=m,
            )
            found = from_probe_matrix(unit)
            if found is not None:
                return found
    # randomized probes until the budget runs out
    while spent < budget:
        spent += 1
        v = tuple(field.random_element(rng) for _ in range(m))
        line = orbit_sum_line(v)
        if line is not None:
            return line
        if spent >= budget:
            return None
        spent += 1
        a = Matrix(
            field,
            [[field.random_element(rng) for _ in range(m)] for _ in range(m)],
            ncols=m,
        )
        found = from_probe_matrix(a)
        if found is not None:
            return found
    return None


def _eigen_scan_values(field: Field, mat: Matrix):
    """Candidate eigenvalues to try against an averaged commuting map."""
    if field.is_finite:
        for i, x in enumerate(field.elements()):
            if i >= _EIGEN_SCAN_CAP:
                return
            yield x
        return
    seen = set()
    for x in mat.diagonal():
        if x not in seen:
            seen.add(x)
            yield x
    for k in range(-8, 9):
        x = field.from_int(k)
        if x not in seen:
            seen.add(x)
            yield x


# ---------------------------------------------------------------------------
# the counterexample harness


@dataclass(frozen=True)
class CounterexampleReport:
    """W = span(isotropic v) satisfies W <= W-perp while averaging still splits V."""

    field: Field
    form: HermitianForm  # the averaged G-invariant form
    witness: IsotropyWitness
    w_subspace: Subspace
    w_perp: Subspace
    contains: bool  # W <= W-perp (always true in an emitted report)
    restriction_rank: int  # rank of the form restricted to W (0 here)
    maschke_complement: Subspace


def counterexample_report(
    rep: Representation,
    seed: HermitianForm,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> CounterexampleReport:
    """Average the seed, find an isotropic witness, and contrast both proofs.

    Raises NoIsotropicVector when the averaged form has none (e.g. a positive
    form over Q, which is exactly the real/complex situation where the
    orthogonal-complement argument does work).
    """
    averaged = rep.average_form(seed)
    witness = isotropic_any(averaged, search_bound)
    if witness is None:
        raise NoIsotropicVector(
            f"averaged form over {rep.field.spec} admits no isotropic vector"
            + ("" if rep.field.is_finite else " within the search bound")
        )
    w = Subspace.spanned_by(rep.field, rep.dim, [witness.vector])
    w_perp = averaged.orthogonal_complement(w)
    contains = w_perp.contains_subspace(w)
    assert contains, "an isotropic line is always inside its own perp"
    restriction_rank = averaged.restrict(w).gram.rank()
    assert restriction_rank == 0
    _, complement = rep.equivariant_projector(w)
    return CounterexampleReport(
        field=rep.field,
        form=averaged,
        witness=witness,
        w_subspace=w,
        w_perp=w_perp,
        contains=contains,
        restriction_rank=restriction_rank,
        maschke_complement=complement,
    )
