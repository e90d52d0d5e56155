"""The four supported exact fields with involution and their elements.

Supported constructions and the involution each one carries:

* ``Fp:<p>``    -- prime field F_p, identity involution
* ``Fp2:<p>``   -- F_{p^2} = F_p[u]/(u^2 - s) with s the smallest positive
                   non-residue mod p; the involution is Frobenius x -> x^p,
                   i.e. a + b*u -> a - b*u
* ``Q``         -- rationals, identity involution
* ``Qsqrt:<d>`` -- Q(sqrt(d)) for squarefree d, conjugation a + b*r -> a - b*r

Elements are immutable, canonical (componentwise equality), and all
arithmetic is exact; nothing in this package ever rounds.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, ParseError
from .numbertheory import is_prime, is_squarefree, smallest_nonresidue

MAX_PRIME = 2**31


class FieldElement:
    """Common behaviour for elements of any of the four field kinds."""

    __slots__ = ("field",)

    def conj(self) -> "FieldElement":
        raise NotImplementedError

    def is_fixed(self) -> bool:
        """True iff the element lies in the fixed subfield k0 = {x : conj(x) = x}."""
        return self.conj() == self

    def norm(self) -> "FieldElement":
        """The norm map x -> x * conj(x); always lands in k0."""
        return self * self.conj()

    def inv(self) -> "FieldElement":
        raise NotImplementedError

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(
                    f"cannot mix elements of {self.field} and {other.field}"
                )
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __radd__(self, other):
        return self.__add__(other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = base.inv(), -e
        result = self.field.one()
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        return f"{self.field.spec}[{self}]"


class Field:
    """A field together with its fixed involution; element factory."""

    spec: str
    characteristic: int
    has_identity_involution: bool
    is_finite: bool
    order: int | None  # number of elements, None for infinite fields

    def zero(self) -> FieldElement:
        return self.from_int(0)

    def one(self) -> FieldElement:
        return self.from_int(1)

    def from_int(self, n: int) -> FieldElement:
        raise NotImplementedError

    def nonfixed_element(self) -> FieldElement | None:
        """Canonical element with conj(x) != x (u resp. sqrt(d)); None if the
        involution is the identity."""
        return None

    def elements(self):
        """Iterate all elements in canonical order (finite fields only)."""
        raise NotImplementedError(f"{self.spec} is infinite")

    def fixed_elements(self):
        """Iterate the fixed subfield k0 in canonical order (finite fields only)."""
        raise NotImplementedError(f"{self.spec} is infinite")

    def random_element(self, rng) -> FieldElement:
        raise NotImplementedError

    def parse(self, text: str) -> FieldElement:
        """Parse an element literal; see the module grammar."""
        return _parse_element(self, text)

    def format(self, x: FieldElement) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return self.spec


# ---------------------------------------------------------------------------
# F_p


class PrimeField(Field):
    has_identity_involution = True
    is_finite = True

    def __init__(self, p: int):
        if p < 3:
            raise ValueError(f"p must be an odd prime >= 3, got {p}")
        if p > MAX_PRIME:
            raise ValueError(f"p must be <= 2^31, got {p}")
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        self.p = p
        self.spec = f"Fp:{p}"
        self.characteristic = p
        self.order = p

    def __call__(self, value: int) -> "PrimeElement":
        return PrimeElement(self, value % self.p)

    def from_int(self, n: int) -> "PrimeElement":
        return self(n)

    def elements(self):
        for a in range(self.p):
            yield PrimeElement(self, a)

    fixed_elements = elements

    def random_element(self, rng):
        return PrimeElement(self, rng.randrange(self.p))


class PrimeElement(FieldElement):
    __slots__ = ("value",)

    def __init__(self, field: PrimeField, value: int):
        self.field = field
        self.value = value

    def conj(self):
        return self

    def is_fixed(self):
        return True

    def inv(self):
        if self.value == 0:
            raise DivisionByZero(f"inverse of 0 in {self.field}")
        return PrimeElement(self.field, pow(self.value, -1, self.field.p))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PrimeElement(self.field, (self.value + other.value) % self.field.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PrimeElement(self.field, self.value * other.value % self.field.p)

    def __neg__(self):
        return PrimeElement(self.field, -self.value % self.field.p)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0 and self.value == 0:
            raise DivisionByZero(f"inverse of 0 in {self.field}")
        return PrimeElement(self.field, pow(self.value, e, self.field.p))

    def __eq__(self, other):
        if isinstance(other, PrimeElement):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)


# ---------------------------------------------------------------------------
# F_{p^2}


class QuadraticExtField(Field):
    """F_p[u]/(u^2 - s), s the smallest positive non-residue mod p."""

    has_identity_involution = False
    is_finite = True

    def __init__(self, p: int):
        if p < 3:
            raise ValueError(f"p must be an odd prime >= 3, got {p}")
        if p > MAX_PRIME:
            raise ValueError(f"p must be <= 2^31, got {p}")
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        self.p = p
        self.s = smallest_nonresidue(p)
        self.spec = f"Fp2:{p}"
        self.characteristic = p
        self.order = p * p

    def __call__(self, a: int, b: int = 0) -> "QuadraticExtElement":
        return QuadraticExtElement(self, a % self.p, b % self.p)

    def from_int(self, n: int):
        return self(n)

    def u(self) -> "QuadraticExtElement":
        return self(0, 1)

    def nonfixed_element(self):
        return self.u()

    def elements(self):
        for a in range(self.p):
            for b in range(self.p):
                yield QuadraticExtElement(self, a, b)

    def fixed_elements(self):
        for a in range(self.p):
            yield QuadraticExtElement(self, a, 0)

    def random_element(self, rng):
        return QuadraticExtElement(self, rng.randrange(self.p), rng.randrange(self.p))


class QuadraticExtElement(FieldElement):
    """a + b*u with u^2 = s, components reduced mod p."""

    __slots__ = ("a", "b")

    def __init__(self, field: QuadraticExtField, a: int, b: int):
        self.field = field
        self.a = a
        self.b = b

    def conj(self):
        return QuadraticExtElement(self.field, self.a, -self.b % self.field.p)

    def is_fixed(self):
        return self.b == 0

    def norm(self):
        p = self.field.p
        return QuadraticExtElement(
            self.field, (self.a * self.a - self.field.s * self.b * self.b) % p, 0
        )

    def inv(self):
        p = self.field.p
        n = (self.a * self.a - self.field.s * self.b * self.b) % p
        if n == 0:
            raise DivisionByZero(f"inverse of 0 in {self.field}")
        ninv = pow(n, -1, p)
        return QuadraticExtElement(self.field, self.a * ninv % p, -self.b * ninv % p)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return QuadraticExtElement(
            self.field, (self.a + other.a) % p, (self.b + other.b) % p
        )

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p, s = self.field.p, self.field.s
        return QuadraticExtElement(
            self.field,
            (self.a * other.a + s * self.b * other.b) % p,
            (self.a * other.b + self.b * other.a) % p,
        )

    def __neg__(self):
        p = self.field.p
        return QuadraticExtElement(self.field, -self.a % p, -self.b % p)

    def __eq__(self, other):
        if isinstance(other, QuadraticExtElement):
            return self.field == other.field and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, 2, self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*u"


# ---------------------------------------------------------------------------
# Q


class RationalField(Field):
    has_identity_involution = True
    is_finite = False
    order = None

    def __init__(self):
        self.spec = "Q"
        self.characteristic = 0

    def __call__(self, num, den: int = 1) -> "RationalElement":
        return RationalElement(self, Fraction(num, den))

    def from_int(self, n: int):
        return RationalElement(self, Fraction(n))

    def random_element(self, rng):
        return RationalElement(
            self, Fraction(rng.randint(-12, 12), rng.randint(1, 12))
        )


class RationalElement(FieldElement):
    __slots__ = ("value",)

    def __init__(self, field: RationalField, value: Fraction):
        self.field = field
        self.value = value

    def conj(self):
        return self

    def is_fixed(self):
        return True

    def inv(self):
        if self.value == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return RationalElement(self.field, 1 / self.value)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalElement(self.field, self.value + other.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalElement(self.field, self.value * other.value)

    def __neg__(self):
        return RationalElement(self.field, -self.value)

    def __eq__(self, other):
        if isinstance(other, RationalElement):
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(("Q", self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)


# ---------------------------------------------------------------------------
# Q(sqrt(d))


class QuadraticNumberField(Field):
    """Q(sqrt(d)) for squarefree d not in {0, 1}; conjugation negates sqrt(d)."""

    has_identity_involution = False
    is_finite = False
    order = None

    def __init__(self, d: int):
        if d in (0, 1):
            raise ValueError("d must not be 0 or 1")
        if not is_squarefree(d):
            raise ValueError(f"d must be squarefree, got {d}")
        self.d = d
        self.spec = f"Qsqrt:{d}"
        self.characteristic = 0

    def __call__(self, a, b=0) -> "QuadraticNumberElement":
        return QuadraticNumberElement(self, Fraction(a), Fraction(b))

    def from_int(self, n: int):
        return QuadraticNumberElement(self, Fraction(n), Fraction(0))

    def sqrt_d(self) -> "QuadraticNumberElement":
        return self(0, 1)

    def nonfixed_element(self):
        return self.sqrt_d()

    def random_element(self, rng):
        return QuadraticNumberElement(
            self,
            Fraction(rng.randint(-8, 8), rng.randint(1, 6)),
            Fraction(rng.randint(-8, 8), rng.randint(1, 6)),
        )


class QuadraticNumberElement(FieldElement):
    """a + b*sqrt(d) with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, field: QuadraticNumberField, a: Fraction, b: Fraction):
        self.field = field
        self.a = a
        self.b = b

    def conj(self):
        return QuadraticNumberElement(self.field, self.a, -self.b)

    def is_fixed(self):
        return self.b == 0

    def norm(self):
        return QuadraticNumberElement(
            self.field, self.a * self.a - self.field.d * self.b * self.b, Fraction(0)
        )

    def inv(self):
        n = self.a * self.a - self.field.d * self.b * self.b
        if n == 0:
            raise DivisionByZero(f"inverse of 0 in {self.field}")
        return QuadraticNumberElement(self.field, self.a / n, -self.b / n)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadraticNumberElement(self.field, self.a + other.a, self.b + other.b)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self.field.d
        return QuadraticNumberElement(
            self.field,
            self.a * other.a + d * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __neg__(self):
        return QuadraticNumberElement(self.field, -self.a, -self.b)

    def __eq__(self, other):
        if isinstance(other, QuadraticNumberElement):
            return self.field == other.field and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash(("Qsqrt", self.field.d, self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.b < 0:
            return f"{self.a}-{-self.b}*r"
        return f"{self.a}+{self.b}*r"


# ---------------------------------------------------------------------------
# Field spec and element grammar


def parse_field_spec(text: str) -> Field:
    """Parse "Fp:<p>" | "Fp2:<p>" | "Q" | "Qsqrt:<d>" into a Field."""
    t = text.strip()
    try:
        if t == "Q":
            return RationalField()
        if t.startswith("Fp2:"):
            return QuadraticExtField(int(t[4:]))
        if t.startswith("Fp:"):
            return PrimeField(int(t[3:]))
        if t.startswith("Qsqrt:"):
            return QuadraticNumberField(int(t[6:]))
    except ValueError as exc:
        raise ParseError(f"invalid field spec {text!r}: {exc}") from None
    raise ParseError(f"unrecognized field spec {text!r}")


class _Scanner:
    """Character scanner that skips whitespace and reports positions."""

    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def _skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        if ch:
            self.i += 1
        return ch

    def at_end(self) -> bool:
        return self.peek() == ""

    def fail(self, message: str):
        raise ParseError(message, position=self.i)

    def scan_component(self) -> tuple[int, int]:
        """Signed integer or fraction: (num, den) with den >= 1."""
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        num = self._scan_digits("digit")
        den = 1
        if self.peek() == "/":
            self.take()
            den = self._scan_digits("denominator digit")
            if den == 0:
                self.fail("zero denominator")
        return sign * num, den

    def _scan_digits(self, what: str) -> int:
        self._skip_ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start:
            self.fail(f"expected {what}")
        return int(self.text[start : self.i])


def _parse_element(field: Field, text: str) -> FieldElement:
    s = _Scanner(text)
    if s.at_end():
        s.fail("empty element literal")
    first = s.scan_component()
    if s.at_end():
        return _element_from_components(field, first, None, s)
    sep = s.take()
    if sep not in "+-":
        s.fail(f"expected '+', '-', or end of literal, got {sep!r}")
    second = s.scan_component()
    if sep == "-":
        second = (-second[0], second[1])
    if s.take() != "*":
        s.fail("expected '*' before the extension symbol")
    sym = s.take()
    expected = "u" if isinstance(field, QuadraticExtField) else "r"
    if sym != expected or not isinstance(
        field, (QuadraticExtField, QuadraticNumberField)
    ):
        s.fail(f"symbol {sym!r} not valid for field {field.spec}")
    if not s.at_end():
        s.fail("trailing characters after element literal")
    return _element_from_components(field, first, second, s)


def _element_from_components(field, first, second, s: _Scanner) -> FieldElement:
    def reduce_mod_p(num, den, p):
        if den % p == 0:
            s.fail(f"denominator divisible by the characteristic {p}")
        return num * pow(den, -1, p) % p

    if isinstance(field, PrimeField):
        if second is not None:
            s.fail("Fp elements have no extension component")
        return field(reduce_mod_p(*first, field.p))
    if isinstance(field, RationalField):
        if second is not None:
            s.fail("Q elements have no extension component")
        return field(Fraction(*first))
    if isinstance(field, QuadraticExtField):
        a = reduce_mod_p(*first, field.p)
        b = reduce_mod_p(*second, field.p) if second is not None else 0
        return field(a, b)
    assert isinstance(field, QuadraticNumberField)
    a = Fraction(*first)
    b = Fraction(*second) if second is not None else Fraction(0)
    return field(a, b)
