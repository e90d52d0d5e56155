"""Acceptance suite: one test per criterion, exact checks, stated time caps.

Each criterion prints a single "ACCEPTANCE <k> <name>: PASS (<t>s)" line
(visible with pytest -s); a failed assertion fails the test instead.
Everything is exact arithmetic, so "tolerance" everywhere is equality.
"""

import itertools
import random
import time

import pytest

from isoform.cli import main
from isoform.errors import NoIsotropicVector
from isoform.fields import (
    PrimeField,
    QuadraticExtField,
    QuadraticNumberField,
    RationalField,
)
from isoform.forms import HermitianForm, Subspace
from isoform.isotropy import (
    HomogeneousPoly,
    cw_solve,
    isotropic_symmetric,
    isotropic_via_norm,
    norm_solve,
)
from isoform.linalg import Matrix
from isoform.maschke import Representation, counterexample_report

F7 = PrimeField(7)
F9 = QuadraticExtField(3)
F25 = QuadraticExtField(5)
Q = RationalField()
QI = QuadraticNumberField(-1)
Q5 = QuadraticNumberField(5)


def _report(number, name, started, cap):
    elapsed = time.perf_counter() - started
    assert elapsed < cap, f"criterion {number} took {elapsed:.1f}s, cap {cap}s"
    print(f"ACCEPTANCE {number} {name}: PASS ({elapsed:.2f}s)")


def random_fixed(field, rng):
    x = field.random_element(rng)
    return x + x.conj()


def random_hermitian(field, n, rng):
    cells = [[field.zero()] * n for _ in range(n)]
    for i in range(n):
        cells[i][i] = random_fixed(field, rng)
        for j in range(i + 1, n):
            x = field.random_element(rng)
            cells[i][j] = x
            cells[j][i] = x.conj()
    return HermitianForm(field, Matrix(field, cells, ncols=n))


# 1. Diagonalization contract over all six field kinds, dims 1-6, exact.
def test_criterion_1_diagonalization():
    started = time.perf_counter()
    rng = random.Random(2024)
    for field in (F7, F9, F25, Q, QI, Q5):
        for _ in range(200):
            n = rng.randint(1, 6)
            form = random_hermitian(field, n, rng)
            result = form.diagonalize()
            transformed = result.transformed_gram(form)
            assert transformed.is_diagonal()
            assert transformed.diagonal() == result.diagonal
            assert result.basis_change.is_invertible()
            assert all(x.is_fixed() for x in result.diagonal)
    _report(1, "diagonalization-contract", started, 10.0)


# 2. Lemma-3 recipe, exhaustive over all 81 Hermitian 2x2 Gram matrices / F_9.
def test_criterion_2_nonisotropic_exhaustive():
    started = time.perf_counter()
    count = 0
    fixed = list(F9.fixed_elements())  # 3 choices per diagonal entry
    assert len(fixed) == 3
    for d0 in fixed:
        for d1 in fixed:
            for off in F9.elements():  # 9 choices off-diagonal
                gram = Matrix(F9, [[d0, off], [off.conj(), d1]])
                form = HermitianForm(F9, gram)
                v = form.non_isotropic_vector()
                if gram.is_zero():
                    assert v is None
                else:
                    assert v is not None and form.evaluate(v, v)
                count += 1
    assert count == 81
    _report(2, "lemma3-recipe-exhaustive", started, 1.0)


def _diag_value_sets(field):
    """Nonzero fixed-subfield diagonal entries, as elements."""
    return [x for x in field.fixed_elements() if x]


def _int_pairs(field):
    """(a, b) integer pairs for all elements of F_{p^2}, excluding zero."""
    p = field.p
    return [(a, b) for a in range(p) for b in range(p) if a or b]


# 3. Proposition-6 totality over F_9 and F_25, dims 2 and 3, oracle-checked.
def test_criterion_3_norm_equation_isotropy():
    started = time.perf_counter()
    for field in (F9, F25):
        p, s = field.p, field.s
        norm_int = lambda a, b: (a * a - s * b * b) % p
        nonzero_pairs = _int_pairs(field)
        for dim in (2, 3):
            for entries in itertools.product(_diag_value_sets(field), repeat=dim):
                form = HermitianForm.diagonal(field, entries)
                witness = isotropic_via_norm(form)
                assert any(witness.vector)
                assert form.is_isotropic(witness.vector)
                # oracle 1: re-evaluate the witness with plain int arithmetic
                lam = [x.a for x in entries]
                wsum = sum(
                    l * norm_int(x.a, x.b) for l, x in zip(lam, witness.vector)
                )
                assert wsum % p == 0
                # oracle 2: full vector-space enumeration finds isotropy too
                found = any(
                    sum(l * norm_int(a, b) for l, (a, b) in zip(lam, vec)) % p == 0
                    for vec in itertools.product(nonzero_pairs, repeat=dim)
                )
                assert found
    _report(3, "proposition6-norm-isotropy", started, 30.0)


# 4. The norm epimorphism hypothesis, exhaustively for ten small primes.
def test_criterion_4_norm_epimorphism():
    started = time.perf_counter()
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        field = QuadraticExtField(p)
        for c in range(1, p):
            target = field(c)
            x = norm_solve(field, target)
            assert x.norm() == target
            assert (x.a * x.a - field.s * x.b * x.b) % p == c  # int oracle
    _report(4, "norm-epimorphism-exhaustive", started, 5.0)


# 5. Theorem totality: every nonzero diagonal ternary quadric over small F_p.
def test_criterion_5_diagonal_quadric():
    started = time.perf_counter()
    for p in (3, 5, 7, 11, 13):
        field = PrimeField(p)
        units = range(1, p)
        for l1, l2, l3 in itertools.product(units, repeat=3):
            form = HermitianForm.diagonal(field, [field(l1), field(l2), field(l3)])
            witness = isotropic_symmetric(form)
            ints = [x.value for x in witness.vector]
            assert any(ints)
            assert (l1 * ints[0] ** 2 + l2 * ints[1] ** 2 + l3 * ints[2] ** 2) % p == 0
            # cw_solve agrees the same quadric has a nontrivial zero
            poly = HomogeneousPoly(
                field,
                3,
                2,
                [
                    (field(l1), (2, 0, 0)),
                    (field(l2), (0, 2, 0)),
                    (field(l3), (0, 0, 2)),
                ],
            )
            solution = cw_solve(poly)
            assert solution is not None and not poly.evaluate(solution)
    _report(5, "theorem-diagonal-quadric", started, 60.0)


# 6. Chevalley consistency: cw_solve never fails when d < n over F_p.
def test_criterion_6_chevalley_consistency():
    started = time.perf_counter()
    rng = random.Random(606)
    primes = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    for _ in range(500):
        p = rng.choice(primes)
        n_max = 2
        while p ** (n_max + 1) <= 100_000:
            n_max += 1
        n = rng.randint(2, n_max)
        d = rng.randint(1, n - 1)
        field = PrimeField(p)
        monomials = {}
        for _ in range(rng.randint(1, 5)):
            exps = [0] * n
            for _ in range(d):
                exps[rng.randrange(n)] += 1
            monomials[tuple(exps)] = rng.randrange(1, p)
        poly = HomogeneousPoly(
            field, n, d, [(field(c), e) for e, c in monomials.items()]
        )
        solution = cw_solve(poly)
        assert solution is not None, "Chevalley guarantees a zero when d < n"
        assert not poly.evaluate(solution)
    _report(6, "chevalley-consistency", started, 60.0)


# 7. Maschke positive path: C2 swap and C3 regular over F_7.
def test_criterion_7_maschke_positive():
    started = time.perf_counter()

    def m(field, rows):
        return Matrix(field, [[field.from_int(x) for x in row] for row in rows])

    reps = [
        Representation.close(F7, [m(F7, [[0, 1], [1, 0]])]),
        Representation.close(F7, [m(F7, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])]),
    ]
    for rep in reps:
        summands = rep.decompose()
        assert sum(s.dim for s in summands) == rep.dim
        stacked = Matrix.from_cols(
            rep.field, rep.dim, [c for s in summands for c in s.basis.cols()]
        )
        assert stacked.is_invertible()
        for s in summands:
            assert rep.is_invariant_subspace(s)
            pi, complement = rep.equivariant_projector(s)
            assert pi @ pi == pi
            for g in rep.elements:
                assert pi @ g == g @ pi
            for col in s.basis.cols():
                assert pi.mul_vec(col) == col  # W is pointwise fixed
            image = [pi.col(j) for j in range(rep.dim)]
            assert Subspace.spanned_by(rep.field, rep.dim, image).dim == s.dim
            assert complement.dim == rep.dim - s.dim
    _report(7, "maschke-positive-path", started, 5.0)


# 8. The counterexample: W <= W-perp with a valid Maschke complement; and the
#    rational positive-definite contrast where no witness can exist.
def test_criterion_8_counterexample():
    started = time.perf_counter()
    cases = [
        (F9, 2),
        (F7, 3),
    ]
    for field, dim in cases:
        rep = Representation.trivial(field, dim)
        seed = HermitianForm.diagonal(field, [field.one()] * dim)
        report = counterexample_report(rep, seed)
        v = report.witness.vector
        assert any(v) and report.form.is_isotropic(v)
        assert report.contains
        assert report.w_perp.contains_subspace(report.w_subspace)
        assert report.restriction_rank == 0
        assert report.restriction_rank == report.form.restrict(report.w_subspace).gram.rank()
        stacked = Matrix.from_cols(
            field,
            dim,
            report.w_subspace.basis.cols() + report.maschke_complement.basis.cols(),
        )
        assert stacked.ncols == dim and stacked.is_invertible()
    rep = Representation.trivial(Q, 2)
    with pytest.raises(NoIsotropicVector):
        counterexample_report(rep, HermitianForm.diagonal(Q, [Q(1), Q(1)]))
    _report(8, "counterexample-report", started, 5.0)


# 9. CLI golden runs: byte-identical output, domain-error exit codes.
def test_criterion_9_cli_golden(tmp_path, capsys):
    started = time.perf_counter()

    def write(name, content):
        path = tmp_path / name
        path.write_text(content)
        return str(path)

    f9 = write("f9.txt", "field Fp2:3\ndim 2\n1 0\n0 1\n")
    zero = write("zero.txt", "field Fp:7\ndim 2\n0 0\n0 0\n")
    poly = write("poly.txt", "poly Fp:7 3 2\n1 : 2 0 0\n1 : 0 2 0\n1 : 0 0 2\n")
    poly_bad = write("poly_bad.txt", "poly Fp:3 2 2\n1 : 2 0\n1 : 0 2\n")
    rep_c2 = write("rep.txt", "rep Fp:7 2 1\n0 1\n1 0\n1 0\n0 2\n")
    rep_q = write("rep_q.txt", "rep Q 2 0\n")
    q11 = write("q11.txt", "field Q\ndim 2\n1 0\n0 1\n")
    bad = write("bad.txt", "field Fp:7\ndim 2\n1 0\n")

    fixed_invocations = [
        ["diagonalize", zero],
        ["diagonalize", f9],
        ["isotropic", f9],
        ["norm-solve", "--field", "Fp2:3", "--target", "2"],
        ["cw-solve", poly],
        ["rep-close", rep_c2],
        ["rep-average", rep_c2],
        ["rep-decompose", rep_c2, "--seed", "0"],
        ["counterexample", rep_c2],
    ]
    for argv in fixed_invocations:
        code1 = main(argv)
        out1 = capsys.readouterr().out
        code2 = main(argv)
        out2 = capsys.readouterr().out
        assert out1 == out2 and out1, f"non-deterministic output for {argv}"
        assert code1 == code2

    # domain-error exit codes (table: 0 success, 1 domain, 2 usage/parse)
    expectations = [
        (["diagonalize", zero], 0, None),
        (["norm-solve", "--field", "Fp:7", "--target", "3"], 1, "NormNotRepresented"),
        (["cw-solve", poly_bad], 1, "NoSolutionFound"),
        (["isotropic", q11], 1, "NotFound"),
        (["counterexample", rep_q], 1, "NoIsotropicVector"),
        (["diagonalize", bad], 2, "ParseError"),
    ]
    for argv, expected_code, error_name in expectations:
        code = main(argv)
        out = capsys.readouterr().out
        assert code == expected_code, f"{argv}: exit {code} != {expected_code}"
        if error_name:
            assert out.startswith(f"error = {error_name}:")
    _report(9, "cli-golden-determinism", started, 5.0)
