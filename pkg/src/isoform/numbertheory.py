"""Integer helpers: primality, quadratic residues, modular square roots."""

from __future__ import annotations

from math import gcd, isqrt

_MR_BASES = (2, 3, 5, 7)  # deterministic for n < 3_215_031_751, covers p <= 2**31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n <= 2**31 (and a bit beyond)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p: 1, -1, or 0."""
    ls = pow(a % p, (p - 1) // 2, p)
    return -1 if ls == p - 1 else ls


def smallest_nonresidue(p: int) -> int:
    """Smallest positive quadratic non-residue modulo the odd prime p."""
    for s in range(2, p):
        if legendre_symbol(s, p) == -1:
            return s
    raise ValueError(f"no quadratic non-residue mod {p}; is {p} prime?")


def sqrt_mod(n: int, p: int) -> int | None:
    """Square root of n modulo the odd prime p via Tonelli-Shanks.

    Returns the smaller of the two roots (canonical), or None when n is a
    non-residue.
    """
    n %= p
    if n == 0:
        return 0
    if legendre_symbol(n, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(n, (p + 1) // 4, p)
        return min(r, p - r)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = smallest_nonresidue(p)
    c = pow(z, q, p)
    r = pow(n, (q + 1) // 2, p)
    t = pow(n, q, p)
    m = s
    while t != 1:
        i, sq = 0, t
        while sq != 1:
            sq = sq * sq % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return min(r, p - r)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine for n up to ~1e12."""
    if n <= 0:
        raise ValueError("factorize expects a positive integer")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_squarefree(n: int) -> bool:
    """True iff no prime square divides |n| (0 is not squarefree)."""
    n = abs(n)
    if n == 0:
        return False
    return all(e == 1 for e in factorize(n).values())


def rational_sqrt(num: int, den: int) -> tuple[int, int] | None:
    """Exact square root of the reduced fraction num/den, or None.

    Requires den > 0 and gcd(|num|, den) = 1; a reduced fraction is a
    rational square iff numerator and denominator are both perfect squares.
    """
    if num < 0:
        return None
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return rn, rd
    return None


def squarefree_part(n: int) -> int:
    """The squarefree kernel of n (sign preserved): n = kernel * square."""
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    kernel = 1
    for p, e in factorize(abs(n)).items():
        if e % 2 == 1:
            kernel *= p
    return sign * kernel


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
