"""Class numbers of imaginary quadratic fields from Dedekind sums.

h(-D)^2 = (w^2 / 4) * sum_{0<n<D, gcd(n,D)=1} chi(n) s(n, D),  chi = (-D | .)

This is the analytic class number formula squared, with |L(1, chi)|^2
written as a Dedekind-sum average; h is the exact integer square root of the
right side.  Two independent oracles check it: counting reduced forms, and
the cotangent expression for L(1, chi) fed into the class number formula.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
import math

from .arith import fundamental_discriminants, is_fundamental_negative, is_prime, kronecker
from .characters import DirichletCharacter, quadratic_field_character
from .dedekind import _cot_pi, dedekind_numerator, residue_class_sum
from .errors import DomainError, InconsistencyError

ORACLES = ("forms", "analytic")


@dataclass(frozen=True)
class QuadraticFieldSpec:
    D: int
    w: int
    chi: DirichletCharacter


def roots_of_unity_quadratic(D: int) -> int:
    return 6 if D == 3 else 4 if D == 4 else 2


def quadratic_field(D: int) -> QuadraticFieldSpec:
    return QuadraticFieldSpec(D, roots_of_unity_quadratic(D), quadratic_field_character(D))


@dataclass
class ClassNumberReport:
    D: int
    h: int
    w: int
    exact_sum: Fraction
    h_squared: int
    method: str = "formula"
    forms_h: int | None = None
    analytic_value: float | None = None
    analytic_error: float | None = None
    agreement: dict = field(default_factory=dict)

    @property
    def oracles_agree(self) -> bool | None:
        if not self.agreement:
            return None
        return all(self.agreement.values())

    def to_dict(self) -> dict:
        return {
            "D": self.D,
            "h": self.h,
            "w": self.w,
            "exact_sum": str(self.exact_sum),
            "h_squared": self.h_squared,
            "method": self.method,
            "forms_oracle": self.forms_h,
            "analytic_oracle": self.analytic_value,
            "analytic_error": self.analytic_error,
            "agreement": dict(sorted(self.agreement.items())),
            "oracles_agree": self.oracles_agree,
        }


def _require_fundamental(D: int) -> None:
    if not is_fundamental_negative(D):
        raise DomainError(f"-{D} is not a fundamental discriminant")


def real_character_values(D: int, upto: int) -> list[int]:
    """kronecker(-D, n) for 0 <= n <= upto, filled multiplicatively from a prime sieve."""
    vals = [0] * (upto + 1)
    if upto >= 1:
        vals[1] = 1
    spf = list(range(upto + 1))
    for p in range(2, isqrt(upto) + 1):
        if spf[p] == p:
            for m in range(p * p, upto + 1, p):
                if spf[m] == m:
                    spf[m] = p
    for n in range(2, upto + 1):
        p = spf[n]
        vals[n] = kronecker(-D, p) if p == n else vals[p] * vals[n // p]
    return vals


def character_dedekind_sum(D: int) -> Fraction:
    """sum_{gcd(n,D)=1} chi(n) s(n, D), exact.

    chi(D - n) s(D - n, D) = chi(n) s(n, D) because both factors are odd, so
    the lower half of the range is summed and doubled.
    """
    _require_fundamental(D)
    half = (D - 1) // 2
    chi = real_character_values(D, half)
    total = 0
    for n in range(1, half + 1):
        if chi[n]:
            total += chi[n] * dedekind_numerator(n, D)
    # D is never 2, so n = D/2 (if integral) is not a unit and is skipped
    return Fraction(2 * total, 12 * D)


def class_number_forms_oracle(D: int) -> int:
    """Count reduced primitive forms (a, b, c), b^2 - 4ac = -D."""
    _require_fundamental(D)
    count = 0
    a = 1
    while 3 * a * a <= D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b + D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, abs(b)), c) == 1:
                count += 1
        a += 1
    return count


def l1_analytic_oracle(chi: DirichletCharacter, precision: int = 53) -> float:
    """|L(1, chi)| = (pi / 2f) |sum chi(n) cot(pi n / f)| for odd primitive chi."""
    f = chi.modulus
    if f <= 2 or not chi.is_odd or not chi.is_primitive:
        raise DomainError("analytic oracle needs an odd primitive character modulo f > 2")
    if precision > 53:
        import mpmath

        with mpmath.workprec(precision):
            total = mpmath.mpc(0)
            for n in range(1, f):
                t = chi.exponent_at(n)
                if t >= 0 and 2 * n != f:
                    total += mpmath.expjpi(mpmath.mpf(2 * t) / chi.order) * mpmath.cot(mpmath.pi * n / f)
            return float(mpmath.pi / (2 * f) * abs(total))
    re_parts, im_parts = [], []
    for n in range(1, f):
        t = chi.exponent_at(n)
        if t < 0:
            continue
        cot = _cot_pi(n, f)
        z = chi.complex_value(n)
        re_parts.append(z.real * cot)
        im_parts.append(z.imag * cot)
    return math.pi / (2 * f) * abs(complex(math.fsum(re_parts), math.fsum(im_parts)))


def l1_real_float(D: int) -> float:
    """L(1, chi_{-D}) by the cotangent sum, using kronecker values (no dlog table)."""
    _require_fundamental(D)
    chi = real_character_values(D, D - 1)
    terms = [chi[n] * _cot_pi(n, D) for n in range(1, D) if chi[n]]
    return abs(math.pi / (2 * D) * math.fsum(terms))


def class_number(D: int, oracles=()) -> ClassNumberReport:
    """h(-D) by the Dedekind-sum formula, optionally cross-checked.

    Raises InconsistencyError unless (w^2/4) * sum is the square of a positive
    integer.  Oracle disagreement is reported in ``agreement``, not raised.
    """
    _require_fundamental(D)
    w = roots_of_unity_quadratic(D)
    s = character_dedekind_sum(D)
    h_sq = Fraction(w * w, 4) * s
    h = isqrt(h_sq.numerator) if h_sq.denominator == 1 and h_sq > 0 else 0
    if h < 1 or h * h != h_sq:
        raise InconsistencyError(f"(w^2/4) * sum for D={D} is {h_sq}, not a positive square (sum={s})")
    report = ClassNumberReport(D=D, h=h, w=w, exact_sum=s, h_squared=h * h)
    for name in oracles:
        if name == "forms":
            report.forms_h = class_number_forms_oracle(D)
            report.agreement["forms"] = report.forms_h == report.h
        elif name == "analytic":
            value = w * math.sqrt(D) / (2 * math.pi) * l1_real_float(D)
            report.analytic_value = value
            report.analytic_error = abs(value - report.h)
            report.agreement["analytic"] = report.analytic_error < 1e-6
        else:
            raise DomainError(f"unknown oracle {name!r}")
    return report


def _require_prime_3mod4(p: int) -> None:
    if not (p > 3 and p % 4 == 3 and is_prime(p)):
        raise DomainError(f"need a prime p > 3 with p = 3 mod 4, got {p}")


def class_number_squared_prime(p: int) -> Fraction:
    """sum_{b=1}^{p-1} (b|p) s(b, p), which equals h(-p)^2."""
    _require_prime_3mod4(p)
    total = sum(kronecker(b, p) * dedekind_numerator(b, p) for b in range(1, p))
    return Fraction(total, 12 * p)


def parity_check(p: int) -> bool:
    _require_prime_3mod4(p)
    return class_number(p).h % 2 == 1


@dataclass(frozen=True)
class PrimeIdentityCheck:
    p: int
    h: int
    squared_sum: Fraction
    residue_sum: Fraction

    @property
    def ok(self) -> bool:
        return self.squared_sum == self.h**2 == 2 * self.residue_sum and self.h % 2 == 1


def prime_identity(p: int) -> PrimeIdentityCheck:
    h = class_number(p).h
    return PrimeIdentityCheck(p, h, class_number_squared_prime(p), residue_class_sum(p))


def _sweep_one(args) -> ClassNumberReport:
    D, oracles = args
    return class_number(D, oracles)


def sweep(max_d: int, min_d: int = 3, oracles=ORACLES, jobs: int = 1) -> list[ClassNumberReport]:
    """class_number over every fundamental -D in range; results in ascending D."""
    work = [(D, tuple(oracles)) for D in fundamental_discriminants(max_d, min_d)]
    if jobs <= 1:
        return [_sweep_one(a) for a in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_sweep_one, work, chunksize=32))
