"""Exact integer/rational arithmetic and elementary multiplicative functions.

Rationals are :class:`fractions.Fraction`, exported here as ``BigRational``:
they are normalized on construction (lowest terms, positive denominator) and
backed by Python's unbounded integers.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd as _gcd, isqrt

from .errors import DomainError

BigRational = Fraction

FACTOR_LIMIT = 10**7


def gcd(a: int, b: int) -> int:
    return _gcd(a, b)


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // _gcd(a, b)


@lru_cache(maxsize=4096)
def _factorize(n: int) -> tuple:
    out = []
    if n % 2 == 0:
        e = 0
        while n % 2 == 0:
            n //= 2
            e += 1
        out.append((2, e))
    p = 3
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n: int, limit: int = FACTOR_LIMIT) -> list[tuple[int, int]]:
    """Prime factorization by trial division, as ``[(p, e), ...]`` with p increasing."""
    if n <= 0:
        raise DomainError(f"factorize: n must be >= 1, got {n}")
    if n > limit:
        raise DomainError(f"factorize: n={n} exceeds trial-division cap {limit}")
    return list(_factorize(n))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for p in range(3, isqrt(n) + 1, 2):
        if n % p == 0:
            return False
    return True


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def moebius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a | n), defined for all integers a, n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a | n), n odd positive
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_fundamental_negative(D: int) -> bool:
    """True iff -D is the discriminant of an imaginary quadratic field."""
    if D < 3:
        return False
    if D % 4 == 3:
        return is_squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (1, 2) and is_squarefree(m)
    return False


def fundamental_discriminants(max_d: int, min_d: int = 3) -> list[int]:
    """All D in [min_d, max_d] with -D fundamental, ascending."""
    return [D for D in range(max(min_d, 3), max_d + 1) if is_fundamental_negative(D)]


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
