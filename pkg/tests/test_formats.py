import pytest

from isoform.errors import ParseError
from isoform.fields import PrimeField, QuadraticExtField, RationalField
from isoform.forms import HermitianForm
from isoform.io_formats import (
    format_matrix,
    format_poly,
    format_rep,
    format_vector,
    parse_form,
    parse_matrix,
    parse_poly,
    parse_rep,
    parse_vector,
)
from isoform.isotropy import HomogeneousPoly
from isoform.linalg import Matrix
from isoform.maschke import Representation

F7 = PrimeField(7)
F9 = QuadraticExtField(3)
Q = RationalField()


def test_matrix_round_trip():
    mat = Matrix(F9, [[F9(1, 2), F9(0)], [F9(0), F9(2, 1)]])
    text = format_matrix(F9, mat)
    field, parsed = parse_matrix(text)
    assert field == F9 and parsed == mat


def test_matrix_rectangular_and_comments():
    text = """
# a comment
field Q
dim 2 3

1/2 0 3
-1 2 0
"""
    field, mat = parse_matrix(text)
    assert (mat.nrows, mat.ncols) == (2, 3)
    assert mat[0, 0] == Q(1, 2)
    assert "dim 2 3" in format_matrix(field, mat)


def test_matrix_skips_report_preamble():
    text = "command = diagonalize\nfield = Fp:7\ndim = 2\nfield Fp:7\ndim 2\n1 0\n0 1\n"
    field, mat = parse_matrix(text)
    assert field == F7 and mat == Matrix.identity(F7, 2)


def test_matrix_errors():
    with pytest.raises(ParseError):
        parse_matrix("dim 2\n1 0\n0 1\n")  # missing field header
    with pytest.raises(ParseError):
        parse_matrix("field Fp:7\ndim 2\n1 0\n")  # missing row
    with pytest.raises(ParseError):
        parse_matrix("field Fp:7\ndim 2\n1 0 0\n0 1 0\n")  # wrong width
    with pytest.raises(ParseError):
        parse_matrix("field Fp:6\ndim 1\n1\n")  # bad field spec


def test_parse_form_validates():
    with pytest.raises(ParseError):
        parse_form("field Fp:7\ndim 1 2\n1 0\n")  # not square
    with pytest.raises(ParseError):
        parse_form("field Fp:7\ndim 2\n0 1\n2 0\n")  # not symmetric
    form = parse_form("field Fp:7\ndim 2\n0 1\n1 0\n")
    assert isinstance(form, HermitianForm)


def test_poly_round_trip():
    poly = HomogeneousPoly(
        F7, 3, 2, [(F7(1), (2, 0, 0)), (F7(3), (0, 1, 1))]
    )
    text = format_poly(poly)
    parsed = parse_poly(text)
    assert parsed.field == F7
    assert parsed.monomials == poly.monomials


def test_poly_errors():
    with pytest.raises(ParseError):
        parse_poly("poly Fp:7 2\n")  # short header
    with pytest.raises(ParseError):
        parse_poly("poly Fp:7 2 2\n1 : 1 0\n")  # inhomogeneous
    with pytest.raises(ParseError):
        parse_poly("poly Fp:7 2 2\n1 ; 2 0\n")  # missing colon


def test_rep_round_trip_with_seed():
    rep = Representation.close(F7, [Matrix(F7, [[F7(0), F7(1)], [F7(1), F7(0)]])])
    seed = HermitianForm.diagonal(F7, [F7(1), F7(2)])
    text = format_rep(rep, seed)
    rep2, seed2 = parse_rep(text)
    assert rep2.order == 2
    assert rep2.generators == rep.generators
    assert seed2 == seed


def test_rep_without_seed():
    rep2, seed2 = parse_rep("rep Fp2:3 2 0\n")
    assert rep2.order == 1 and rep2.dim == 2 and seed2 is None


def test_rep_generator_blocks_may_carry_headers():
    text = "rep Fp:7 2 1\nfield Fp:7\ndim 2\n0 1\n1 0\n"
    rep, _ = parse_rep(text)
    assert rep.order == 2


def test_rep_errors():
    with pytest.raises(ParseError):
        parse_rep("rep Fp:7 2\n")
    with pytest.raises(ParseError):
        parse_rep("rep Fp:7 2 1\n0 1\n")  # truncated generator
    with pytest.raises(ParseError):
        parse_rep("rep Fp:7 2 1\nfield Fp:5\ndim 2\n0 1\n1 0\n")  # field clash
    with pytest.raises(ParseError):
        parse_rep("rep Fp:7 2 0\n0 1\n2 0\n")  # seed not Hermitian


def test_vector_round_trip():
    v = (F9(1, 2), F9(0), F9(2))
    text = format_vector(v)
    assert text == "(1+2*u, 0, 2)"
    assert parse_vector(F9, text) == v
    assert parse_vector(Q, "()") == ()
    with pytest.raises(ParseError):
        parse_vector(Q, "1, 2")
