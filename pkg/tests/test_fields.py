import random
from fractions import Fraction

import pytest

from isoform.errors import DivisionByZero, FieldMismatch, ParseError
from isoform.fields import (
    PrimeField,
    QuadraticExtField,
    QuadraticNumberField,
    RationalField,
    parse_field_spec,
)

F7 = PrimeField(7)
F9 = QuadraticExtField(3)
Q = RationalField()
QI = QuadraticNumberField(-1)
Q5 = QuadraticNumberField(5)

ALL_FIELDS = [F7, F9, Q, QI, Q5]


def _mul_poly_mod(x, y, p, s):
    """Oracle: schoolbook product of a+b*u, c+d*u reduced mod p and u^2 = s."""
    a, b = x
    c, d = y
    return ((a * c + s * b * d) % p, (a * d + b * c) % p)


# ---------------------------------------------------------------------------
# construction and validation


def test_field_spec_validation():
    with pytest.raises(ValueError):
        PrimeField(2)  # characteristic 2 rejected
    with pytest.raises(ValueError):
        PrimeField(9)
    with pytest.raises(ValueError):
        PrimeField(2**31 + 11)
    with pytest.raises(ValueError):
        QuadraticExtField(4)
    for d in (0, 1, 12, -18):
        with pytest.raises(ValueError):
            QuadraticNumberField(d)
    QuadraticNumberField(-1)
    QuadraticNumberField(30)


def test_smallest_nonresidue_is_canonical():
    assert F9.s == 2
    assert QuadraticExtField(5).s == 2
    assert QuadraticExtField(7).s == 3


def test_parse_field_spec():
    assert parse_field_spec("Fp:7") == F7
    assert parse_field_spec("Fp2:3") == F9
    assert parse_field_spec("Q") == Q
    assert parse_field_spec("Qsqrt:-1") == QI
    for bad in ("F:7", "Fp:4", "Qsqrt:12", "Fp2:two", ""):
        with pytest.raises(ParseError):
            parse_field_spec(bad)


# ---------------------------------------------------------------------------
# involution


def test_conj_examples():
    assert F9(1, 2).conj() == F9(1, 1)  # -2 = 1 mod 3
    assert Q(3, 4).conj() == Q(3, 4)  # identity involution on Q
    u = F9.u()
    # oracle: direct polynomial multiplication mod (u^2 - s)
    direct = _mul_poly_mod((0, 1), (0, 2), 3, 2)
    got = u * u.conj()
    assert (got.a, got.b) == direct == (1, 0)


def test_is_fixed_examples():
    assert F9(2).is_fixed()
    assert not F9.u().is_fixed()
    assert not QI(0, 1).is_fixed()
    assert Q(3, 4).is_fixed()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_frobenius_exhaustive(p):
    field = QuadraticExtField(p)
    for x in field.elements():
        assert x.conj() == x**p


def test_conj_is_involutive_automorphism():
    rng = random.Random(7)
    for field in ALL_FIELDS:
        for _ in range(50):
            x, y = field.random_element(rng), field.random_element(rng)
            assert (x + y).conj() == x.conj() + y.conj()
            assert (x * y).conj() == x.conj() * y.conj()
            assert x.conj().conj() == x
            assert (x * x.conj()).is_fixed()


def test_fixed_set_closed_under_operations():
    rng = random.Random(11)
    for field in ALL_FIELDS:
        for _ in range(30):
            x, y = field.random_element(rng), field.random_element(rng)
            fx, fy = x * x.conj(), y * y.conj()
            assert (fx + fy).is_fixed()
            assert (fx * fy).is_fixed()
            assert (-fx).is_fixed()
            if fx:
                assert fx.inv().is_fixed()


# ---------------------------------------------------------------------------
# arithmetic


def test_field_op_examples():
    assert F7(3).inv() == F7(5)  # 3*5 = 15 = 1 mod 7
    got = F9(1, 1) * F9(1, 2)
    assert (got.a, got.b) == _mul_poly_mod((1, 1), (1, 2), 3, 2) == (2, 0)
    assert Q(1, 2) + Q(1, 3) == Q(5, 6)


def test_field_axioms_random():
    rng = random.Random(3)
    for field in ALL_FIELDS:
        zero, one = field.zero(), field.one()
        for _ in range(40):
            x, y, z = (field.random_element(rng) for _ in range(3))
            assert x + (y + z) == (x + y) + z
            assert x * (y * z) == (x * y) * z
            assert x * (y + z) == x * y + x * z
            assert x + zero == x and x * one == x
            assert x - x == zero
            if x:
                assert x * x.inv() == one
                assert (x / x) == one


def test_pow():
    assert F7(3) ** 0 == F7(1)
    assert F7(3) ** 6 == F7(1)  # Fermat
    assert F9(1, 1) ** 8 == F9(1)  # |F9*| = 8
    assert Q(2) ** -2 == Q(1, 4)
    assert Q5(2, 1) ** 2 == Q5(2, 1) * Q5(2, 1)


def test_division_by_zero():
    for field in ALL_FIELDS:
        with pytest.raises(DivisionByZero):
            field.zero().inv()
        with pytest.raises(DivisionByZero):
            field.one() / field.zero()


def test_field_mismatch_is_an_error():
    with pytest.raises(FieldMismatch):
        F7(1) + PrimeField(5)(1)
    with pytest.raises(FieldMismatch):
        F9(1) * QuadraticExtField(5)(1)
    assert F7(1) != PrimeField(5)(1)


def test_characteristic():
    for field, p in ((F7, 7), (F9, 3)):
        acc = field.zero()
        for _ in range(p):
            acc = acc + field.one()
        assert not acc
    for field in (Q, QI, Q5):
        acc = field.zero()
        for _ in range(50):
            acc = acc + field.one()
            assert acc


def test_int_coercion():
    assert F7(3) + 1 == F7(4)
    assert 2 * F9(1, 1) == F9(2, 2)
    assert Q(1, 2) - 1 == Q(-1, 2)


# ---------------------------------------------------------------------------
# parsing and printing


def test_parse_examples():
    x = F9.parse("1+2*u")
    assert (x.a, x.b) == (1, 2)
    assert Q.parse("-3/6") == Q(-1, 2)
    y = Q5.parse("1/2+3*r")
    assert (y.a, y.b) == (Fraction(1, 2), Fraction(3))


def test_parse_variants():
    assert F9.parse(" 1 + 2 * u ") == F9(1, 2)
    assert F9.parse("5") == F9(2)
    assert Q5.parse("1-2*r") == Q5(1, -2)
    assert Q5.parse("0+1*r") == Q5.sqrt_d()
    assert F7.parse("3/2") == F7(3) / F7(2)
    assert F7.parse("-1") == F7(6)


def test_print_parse_round_trip():
    rng = random.Random(19)
    for field in ALL_FIELDS:
        for _ in range(60):
            x = field.random_element(rng)
            assert field.parse(str(x)) == x


def test_parse_errors_carry_position():
    cases = [
        (F7, "x"),
        (F7, "1+2*u"),
        (Q, "1/0"),
        (F9, "1+2*r"),
        (F9, "1+2u"),
        (Q5, "1+2*r junk"),
        (Q, ""),
    ]
    for field, text in cases:
        with pytest.raises(ParseError) as exc:
            field.parse(text)
        assert exc.value.position is not None


def test_finite_enumeration():
    assert len(list(F7.elements())) == 7
    assert len(list(F9.elements())) == 9
    assert len(list(F9.fixed_elements())) == 3
    assert all(x.is_fixed() for x in F9.fixed_elements())
