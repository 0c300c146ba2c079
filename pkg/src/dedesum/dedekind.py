"""Dedekind sums s(c, d).

``dedekind_sum`` is the fast path: the reciprocity law

    s(c, d) + s(d, c) = -1/4 + (c^2 + d^2 + 1) / (12 c d)

applied along the Euclidean algorithm on (d, c) and telescoped, so the whole
evaluation stays in integers and finishes in O(log d) steps.  Two oracles,
the sawtooth double sum (exact, O(d)) and the cotangent sum (floating), are
independent of it.
"""

from fractions import Fraction
from math import gcd
import math

from .arith import is_prime, kronecker
from .cyclotomic import CyclotomicNumber
from .errors import DomainError


def _normalize(c: int, d: int) -> int:
    if d <= 0:
        raise DomainError(f"Dedekind sum needs d >= 1, got d={d}")
    if gcd(c, d) != 1:
        raise DomainError(f"Dedekind sum needs gcd(c, d) = 1, got c={c}, d={d}")
    return c % d


def dedekind_numerator(c: int, d: int) -> int:
    """The integer 12*d*s(c, d).

    With d = r0, c = r1, r_{i+1} = r_{i-1} mod r_i and quotients a_1..a_n,
    the telescoped reciprocity chain gives

        12 d s(c, d) = d * (a_1 - a_2 + ... +- a_n - (3 if n odd else 1)) + c + c*

    where c* is the inverse of c in [1, d).
    """
    c = _normalize(c, d)
    if d == 1:
        return 0
    a, b = d, c
    alt = 0
    sign = 1
    n = 0
    while b:
        q, r = divmod(a, b)
        alt += sign * q
        sign = -sign
        a, b = b, r
        n += 1
    return d * (alt - (3 if n & 1 else 1)) + c + pow(c, -1, d)


def dedekind_sum(c: int, d: int) -> Fraction:
    """Exact s(c, d); s(c, 1) = 0."""
    return Fraction(dedekind_numerator(c, d), 12 * d)


def dedekind_sum_recursive(c: int, d: int) -> Fraction:
    """Same value by literally iterating the reciprocity law in rationals."""
    c = _normalize(c, d)
    total = Fraction(0)
    sign = 1
    while d > 1:
        # s(c, d) = -s(d mod c, c) - 1/4 + (c^2 + d^2 + 1)/(12cd)
        total += sign * (Fraction(-1, 4) + Fraction(c * c + d * d + 1, 12 * c * d))
        sign = -sign
        c, d = d % c, c
    return total


def _sawtooth(num: int, den: int) -> Fraction:
    r = num % den
    if r == 0:
        return Fraction(0)
    return Fraction(r, den) - Fraction(1, 2)


def dedekind_sum_sawtooth(c: int, d: int) -> Fraction:
    """Oracle: sum over n of ((n/d)) ((nc/d)), exact and O(d)."""
    c = _normalize(c, d)
    # ((n/d))((nc/d)) = (2n - d)(2(nc mod d) - d) / (4 d^2) for 0 < n < d
    total = 0
    for n in range(1, d):
        total += (2 * n - d) * (2 * (n * c % d) - d)
    return Fraction(total, 4 * d * d)


def _cot_pi(num: int, den: int) -> float:
    r = num % den
    if 2 * r == den:
        return 0.0
    x = math.pi * r / den
    return math.cos(x) / math.sin(x)


def dedekind_sum_cotangent(c: int, d: int, precision: int = 53) -> float:
    """Oracle: (1/4d) sum cot(pi n/d) cot(pi n c/d) in floating point."""
    c = _normalize(c, d)
    if d < 2:
        raise DomainError("cotangent form needs d >= 2")
    if precision <= 53:
        terms = [_cot_pi(n, d) * _cot_pi(n * c, d) for n in range(1, d)]
        return math.fsum(terms) / (4 * d)
    import mpmath

    with mpmath.workprec(precision):
        total = mpmath.mpf(0)
        for n in range(1, d):
            if 2 * n == d:
                continue
            total += mpmath.cot(mpmath.pi * n / d) * mpmath.cot(mpmath.pi * (n * c % d) / d)
        return float(total / (4 * d))


def full_sum(d: int) -> Fraction:
    """Sum of s(c, d) over units c mod d; zero by the pairing c <-> d - c."""
    if d < 2:
        raise DomainError(f"full_sum needs d >= 2, got {d}")
    total = sum(dedekind_numerator(c, d) for c in range(1, d) if gcd(c, d) == 1)
    return Fraction(total, 12 * d)


def residue_class_sum(p: int) -> Fraction:
    """Sum of s(c, p) over the quadratic residues c mod p, for primes 3 < p = 3 (mod 4)."""
    if not (p > 3 and p % 4 == 3 and is_prime(p)):
        raise DomainError(f"residue_class_sum needs a prime p > 3 with p = 3 mod 4, got {p}")
    residues = {c * c % p for c in range(1, p)}
    total = sum(dedekind_numerator(c, p) for c in residues)
    return Fraction(total, 12 * p)


def character_weighted_sum(chi, f: int, d: int) -> CyclotomicNumber:
    """sum over units b mod f of chi(b) s(b, d), for d | f."""
    if f != chi.modulus:
        raise DomainError(f"character has modulus {chi.modulus}, not {f}")
    if d < 1 or f % d:
        raise DomainError(f"{d} does not divide {f}")
    order = chi.order
    sums = [0] * order
    table = chi.value_exponents
    for b in range(1, f + 1):
        t = table[b % f]
        if t >= 0:
            sums[t] += dedekind_numerator(b, d)
    return CyclotomicNumber.from_exponent_sums(order, sums, 12 * d)


def legendre_weighted_sum(p: int) -> Fraction:
    """sum_b (b|p) s(b, p) computed straight from Legendre symbols."""
    total = sum(kronecker(b, p) * dedekind_numerator(b, p) for b in range(1, p))
    return Fraction(total, 12 * p)
