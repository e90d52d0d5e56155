"""Norm equations and constructions of isotropic vectors.

The norm map phi(x) = x * conj(x) sends k* onto the fixed subfield's
multiplicative group k0* exactly when the relevant hypothesis holds; over
F_{p^2}/F_p it is always onto (solved here by discrete logarithm), over Q and
Q(sqrt(d)) it generally is not, and the solvers below report failure honestly
(exact square-root test over Q, bounded search over Q(sqrt(d))).

Isotropic vectors of a Hermitian form come from four constructions, tagged on
the returned witness: a radical vector (zero diagonal entry), the norm
equation phi(x) = -l2/l1 on a diagonalized form, a diagonal-quadric solution
l1 x^2 + l2 y^2 + l3 z^2 = 0 over F_p, or bounded brute-force search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import (
    DimensionTooSmall,
    NormNotRepresented,
    PreconditionViolated,
    SearchSpaceTooLarge,
    UnsupportedField,
)
from .fields import (
    Field,
    FieldElement,
    PrimeField,
    QuadraticExtField,
    QuadraticNumberField,
    RationalField,
)
from .forms import HermitianForm
from .linalg import Vector, vec_is_zero
from .numbertheory import factorize, rational_sqrt, sqrt_mod

DEFAULT_SEARCH_BOUND = 10_000
DEFAULT_SPACE_CAP = 10_000_000
NORM_TABLE_MAX_P = 100_000

RADICAL_VECTOR = "RadicalVector"
NORM_EQUATION = "NormEquation"
DIAGONAL_QUADRIC = "DiagonalQuadric"
BRUTE_FORCE = "BruteForce"


@dataclass(frozen=True)
class IsotropyWitness:
    """A nonzero isotropic vector together with how it was constructed."""

    vector: Vector
    construction: str

    @classmethod
    def checked(cls, form: HermitianForm, vector, construction: str):
        vector = tuple(vector)
        if vec_is_zero(vector):
            raise ValueError("isotropy witness must be nonzero")
        if not form.is_isotropic(vector):
            raise ValueError("isotropy witness fails (v, v) = 0 against its form")
        return cls(vector, construction)


# ---------------------------------------------------------------------------
# norm equation solving


def norm_solve(field: Field, c: FieldElement, search_bound: int = DEFAULT_SEARCH_BOUND):
    """Some x with x * conj(x) = c, or raise NormNotRepresented.

    Per field: F_p takes a Tonelli-Shanks square root (the norm is squaring);
    F_{p^2} solves a discrete logarithm against a multiplicative generator
    (table-based, p <= 1e5); Q is an exact rational square-root test;
    Q(sqrt(d)) runs a bounded search over candidate numerator/denominator
    pairs, so failure there means "none within bound".
    """
    if c.field != field:
        raise PreconditionViolated("target element does not belong to the field")
    if not c:
        raise PreconditionViolated("norm target must be nonzero")
    if not c.is_fixed():
        raise PreconditionViolated("norm target must be fixed by the involution")

    if isinstance(field, PrimeField):
        r = sqrt_mod(c.value, field.p)
        if r is None:
            raise NormNotRepresented(f"{c} is not a square mod {field.p}")
        return field(r)

    if isinstance(field, QuadraticExtField):
        return _norm_solve_fp2(field, c)

    if isinstance(field, RationalField):
        root = rational_sqrt(c.value.numerator, c.value.denominator)
        if root is None:
            raise NormNotRepresented(f"{c} is not a square in Q")
        return field(Fraction(root[0], root[1]))

    assert isinstance(field, QuadraticNumberField)
    return _norm_solve_qsqrt(field, c, search_bound)


_fp2_generator_cache: dict[int, tuple[tuple[int, int], dict[int, int]]] = {}


def _fp2_pow(x: tuple[int, int], e: int, p: int, s: int) -> tuple[int, int]:
    ra, rb = 1, 0
    xa, xb = x
    while e:
        if e & 1:
            ra, rb = (ra * xa + s * rb * xb) % p, (ra * xb + rb * xa) % p
        xa, xb = (xa * xa + s * xb * xb) % p, 2 * xa * xb % p
        e >>= 1
    return ra, rb


def _norm_solve_fp2(field: QuadraticExtField, c) -> FieldElement:
    p, s = field.p, field.s
    if p > NORM_TABLE_MAX_P:
        raise SearchSpaceTooLarge(
            f"norm solving over Fp2 uses a discrete-log table and needs p <= {NORM_TABLE_MAX_P}"
        )
    if p not in _fp2_generator_cache:
        q1 = p * p - 1
        prime_divisors = list(factorize(q1))
        gen = None
        for a in range(p):
            for b in range(p):
                if a == 0 and b == 0:
                    continue
                if all(_fp2_pow((a, b), q1 // ell, p, s) != (1, 0) for ell in prime_divisors):
                    gen = (a, b)
                    break
            if gen:
                break
        assert gen is not None, "F_{p^2}* is cyclic, a generator must exist"
        h = (gen[0] * gen[0] - s * gen[1] * gen[1]) % p  # norm(gen) generates F_p*
        table: dict[int, int] = {}
        acc = 1
        for i in range(p - 1):
            table[acc] = i
            acc = acc * h % p
        _fp2_generator_cache[p] = (gen, table)
    gen, table = _fp2_generator_cache[p]
    k = table[c.a]
    xa, xb = _fp2_pow(gen, k, p, s)
    x = field(xa, xb)
    assert x.norm() == c
    return x


def _norm_solve_qsqrt(field: QuadraticNumberField, c, search_bound: int):
    # Solve (an/q)^2 - d (bn/q)^2 = cn/cd by scanning (q, bn) diagonally and
    # testing whether the forced an^2 is a perfect square.
    d = field.d
    cn, cd = c.a.numerator, c.a.denominator
    tried = 0
    for total in itertools.count(1):
        for q in range(1, total + 1):
            bn = total - q
            tried += 1
            if tried > search_bound:
                raise NormNotRepresented(
                    f"no x with norm(x) = {c} over {field.spec} within "
                    f"search bound {search_bound}"
                )
            if (cn * q * q) % cd:
                continue
            t = cn * q * q // cd + d * bn * bn
            if t < 0:
                continue
            an = isqrt(t)
            if an * an == t:
                x = field(Fraction(an, q), Fraction(bn, q))
                assert x.norm() == c
                return x


# ---------------------------------------------------------------------------
# isotropic vectors


def isotropic_via_norm(
    form: HermitianForm, search_bound: int = DEFAULT_SEARCH_BOUND
) -> IsotropyWitness:
    """Isotropic witness from the norm equation phi(x) = -l2/l1.

    Diagonalizes the form; a zero diagonal entry already gives a radical
    witness, otherwise x*e1 + e2 (mapped back through the basis change) is
    isotropic because phi(x) l1 + l2 = 0.  NormNotRepresented propagates when
    the norm equation has no solution (the epimorphism hypothesis failing,
    e.g. over Q(sqrt(d))).
    """
    if form.n < 2:
        raise DimensionTooSmall(f"need dim >= 2, got {form.n}")
    result = form.diagonalize()
    b, lam = result.basis_change, result.diagonal
    for i, l in enumerate(lam):
        if not l:
            return IsotropyWitness.checked(form, b.col(i), RADICAL_VECTOR)
    x = norm_solve(form.field, -(lam[1] / lam[0]), search_bound)
    zero, one = form.field.zero(), form.field.one()
    coords = (x, one) + (zero,) * (form.n - 2)
    return IsotropyWitness.checked(form, b.mul_vec(coords), NORM_EQUATION)


def isotropic_symmetric(form: HermitianForm) -> IsotropyWitness:
    """Isotropic witness for a symmetric form over F_p, dim >= 3.

    After diagonalizing, solves l1 x^2 + l2 y^2 + l3 = 0 by intersecting the
    value sets {l1 x^2} and {-l3 - l2 y^2}; each has (p+1)/2 elements so they
    meet, which is the counting form of solvability in three variables.
    """
    field = form.field
    if not isinstance(field, PrimeField):
        raise UnsupportedField(
            f"diagonal-quadric construction needs F_p with identity involution, got {field.spec}"
        )
    if form.n < 3:
        raise DimensionTooSmall(
            f"need dim >= 3, got {form.n} (dim 2 reduces to a square test via norm_solve)"
        )
    result = form.diagonalize()
    b, lam = result.basis_change, result.diagonal
    for i, l in enumerate(lam):
        if not l:
            return IsotropyWitness.checked(form, b.col(i), RADICAL_VECTOR)
    p = field.p
    l1, l2, l3 = lam[0].value, lam[1].value, lam[2].value
    first_x: dict[int, int] = {}
    for x in range(p):
        first_x.setdefault(l1 * x * x % p, x)
    for y in range(p):
        rest = (-l3 - l2 * y * y) % p
        if rest in first_x:
            x = first_x[rest]
            break
    else:
        raise AssertionError("value sets of size (p+1)/2 must intersect")
    zero, one = field.zero(), field.one()
    coords = (field(x), field(y), one) + (zero,) * (form.n - 3)
    return IsotropyWitness.checked(form, b.mul_vec(coords), DIAGONAL_QUADRIC)


# ---------------------------------------------------------------------------
# homogeneous polynomials and the C1 brute-force solver


class HomogeneousPoly:
    """Sparse homogeneous polynomial: nonzero coefficients with exponent rows."""

    __slots__ = ("field", "n_vars", "degree", "monomials")

    def __init__(self, field: Field, n_vars: int, degree: int, monomials):
        monomials = tuple(
            (coeff, tuple(int(e) for e in exps)) for coeff, exps in monomials
        )
        seen = set()
        for coeff, exps in monomials:
            if not isinstance(coeff, FieldElement) or coeff.field != field:
                raise ValueError(f"coefficient {coeff!r} not in {field}")
            if not coeff:
                raise ValueError("zero coefficients are not stored")
            if len(exps) != n_vars:
                raise ValueError(f"exponent row {exps} must have {n_vars} entries")
            if any(e < 0 for e in exps):
                raise ValueError("exponents must be non-negative")
            if sum(exps) != degree:
                raise ValueError(
                    f"monomial {exps} has degree {sum(exps)}, expected {degree}"
                )
            if exps in seen:
                raise ValueError(f"duplicate exponent row {exps}")
            seen.add(exps)
        self.field = field
        self.n_vars = n_vars
        self.degree = degree
        self.monomials = monomials

    def evaluate(self, v: Vector) -> FieldElement:
        if len(v) != self.n_vars:
            raise ValueError(f"expected {self.n_vars} coordinates, got {len(v)}")
        acc = self.field.zero()
        for coeff, exps in self.monomials:
            term = coeff
            for x, e in zip(v, exps):
                if e:
                    term = term * x**e
            acc = acc + term
        return acc

    def __repr__(self):
        mons = " + ".join(
            f"({coeff})*x^{list(exps)}" for coeff, exps in self.monomials
        )
        return f"HomogeneousPoly({self.field}, {mons or '0'})"


def cw_solve(poly: HomogeneousPoly, space_cap: int = DEFAULT_SPACE_CAP):
    """First projective representative v != 0 with f(v) = 0, or None.

    Exhaustive over vectors whose first nonzero coordinate is 1 (enough,
    since f is homogeneous), so None is a definite answer.  Over a finite
    field with deg f < n_vars a zero always exists.
    """
    field = poly.field
    if not field.is_finite:
        raise UnsupportedField("exhaustive solving needs a finite field")
    q = field.order
    if q**poly.n_vars > space_cap:
        raise SearchSpaceTooLarge(
            f"{q}^{poly.n_vars} exceeds the search cap {space_cap}"
        )
    if isinstance(field, PrimeField):
        return _cw_solve_prime(poly, field)
    elements = list(field.elements())
    zero, one = field.zero(), field.one()
    for lead in range(poly.n_vars):
        head = (zero,) * lead + (one,)
        for tail in itertools.product(elements, repeat=poly.n_vars - lead - 1):
            v = head + tail
            if not poly.evaluate(v):
                return v
    return None


def _cw_solve_prime(poly: HomogeneousPoly, field: PrimeField):
    # Plain-int inner loop; the object arithmetic is too slow for full scans.
    p = field.p
    pow_table = [[pow(x, e, p) for e in range(poly.degree + 1)] for x in range(p)]
    monomials = [(coeff.value, exps) for coeff, exps in poly.monomials]
    for lead in range(poly.n_vars):
        head = (0,) * lead + (1,)
        for tail in itertools.product(range(p), repeat=poly.n_vars - lead - 1):
            v = head + tail
            acc = 0
            for cv, exps in monomials:
                term = cv
                for x, e in zip(v, exps):
                    if e:
                        term = term * pow_table[x][e] % p
                acc += term
            if acc % p == 0:
                return tuple(field(x) for x in v)
    return None


# ---------------------------------------------------------------------------
# dispatcher


def isotropic_any(
    form: HermitianForm,
    search_bound: int = DEFAULT_SEARCH_BOUND,
    space_cap: int = DEFAULT_SPACE_CAP,
) -> IsotropyWitness | None:
    """Find a nonzero isotropic vector by the cheapest applicable route.

    Dispatch: nonzero radical -> radical vector; nontrivial involution ->
    norm equation; identity involution over F_p (dim >= 3) -> diagonal
    quadric; identity involution dim 2 -> square test; remaining rational
    cases -> bounded brute force.  None is definite over finite fields and
    for the dim-2 square test over Q; over Q/Q(sqrt(d)) otherwise it means
    "none within bound".
    """
    field = form.field
    rad = form.radical()
    if rad.dim > 0:
        return IsotropyWitness.checked(form, rad.basis.col(0), RADICAL_VECTOR)
    if form.n < 2:
        return None  # nondegenerate in dim <= 1: (xe, xe) = phi(x)(e,e) != 0
    if not field.has_identity_involution:
        try:
            return isotropic_via_norm(form, search_bound)
        except NormNotRepresented:
            if form.n == 2:
                return None  # dim 2: isotropy is equivalent to the norm equation
            return _brute_force_search(form, search_bound, space_cap)
    if isinstance(field, PrimeField):
        if form.n >= 3:
            return isotropic_symmetric(form)
        try:
            return isotropic_via_norm(form, search_bound)
        except NormNotRepresented:
            return None  # square test is exact: definite no
    # rationals with identity involution
    if form.n == 2:
        try:
            return isotropic_via_norm(form, search_bound)
        except NormNotRepresented:
            return None  # exact rational square test: definite no
    return _brute_force_search(form, search_bound, space_cap)


def _candidate_vectors(field: Field, n: int):
    """Deterministic stream of nonzero candidate vectors for brute force."""
    if field.is_finite:
        elements = list(field.elements())
        zero, one = field.zero(), field.one()
        for lead in range(n):
            head = (zero,) * lead + (one,)
            for tail in itertools.product(elements, repeat=n - lead - 1):
                yield head + tail
        return
    width = n if isinstance(field, RationalField) else 2 * n
    for h in itertools.count(1):
        for tup in itertools.product(range(-h, h + 1), repeat=width):
            if max(abs(t) for t in tup) != h:
                continue
            first = next((t for t in tup if t), None)
            if first is None or first < 0:
                continue
            if gcd(*tup) != 1:
                continue
            if isinstance(field, RationalField):
                yield tuple(field(t) for t in tup)
            else:
                yield tuple(
                    field(tup[2 * i], tup[2 * i + 1]) for i in range(n)
                )


def _brute_force_search(form: HermitianForm, search_bound: int, space_cap: int):
    field = form.field
    if field.is_finite and field.order**form.n > space_cap:
        raise SearchSpaceTooLarge(
            f"{field.order}^{form.n} exceeds the search cap {space_cap}"
        )
    tried = 0
    for v in _candidate_vectors(field, form.n):
        tried += 1
        if tried > search_bound:
            return None
        if form.is_isotropic(v):
            return IsotropyWitness.checked(form, v, BRUTE_FORCE)
    return None  # finite field stream exhausted: definite answer
