"""Exact arithmetic in Q(zeta_m).

Values live in the group-algebra basis ``zeta_m^0, ..., zeta_m^(m-1)`` so that
multiplication is just exponent addition mod m.  That basis is redundant; a
single reduction modulo the cyclotomic polynomial Phi_m happens only when a
canonical form is needed (equality, rationality, printing).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import cmath
import math
import re

from .arith import divisors, euler_phi, lcm
from .errors import DomainError, NotRational


@dataclass(frozen=True)
class CyclotomicPolynomial:
    order: int
    coeffs: tuple[int, ...]  # ascending powers, monic

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        s = "".join(f" {sgn} {b}" for sgn, b in terms).strip()
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den monic, ascending coefficients
    num = list(num)
    dd = len(den) - 1
    q = [0] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return q, num[:dd]


@lru_cache(maxsize=None)
def _phi_coeffs(m: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m):
        if d < m:
            poly, rem = _poly_divmod(poly, list(_phi_coeffs(d)))
            assert not any(rem)
    return tuple(poly)


def cyclotomic_polynomial(m: int) -> CyclotomicPolynomial:
    """Phi_m, by exact division of x^m - 1 by Phi_d for the proper divisors d of m."""
    if m < 1:
        raise DomainError(f"cyclotomic order must be >= 1, got {m}")
    return CyclotomicPolynomial(m, _phi_coeffs(m))


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class CyclotomicNumber:
    """Immutable element ``sum(coeffs[k] * zeta_order^k)`` of Q(zeta_order)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise DomainError(f"cyclotomic order must be >= 1, got {order}")
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if len(coeffs) != order:
            raise DomainError(f"expected {order} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    __hash__ = None  # equal values can have different orders

    @classmethod
    def rational(cls, q, order: int = 1) -> "CyclotomicNumber":
        return cls(order, [q] + [0] * (order - 1))

    @classmethod
    def zero(cls, order: int = 1) -> "CyclotomicNumber":
        return cls(order, [0] * order)

    @classmethod
    def from_exponent_sums(cls, order: int, sums, denominator: int = 1) -> "CyclotomicNumber":
        """Build from integer coefficients per exponent over one common denominator."""
        return cls(order, [Fraction(s, denominator) for s in sums])

    # -- order handling --------------------------------------------------

    def lift(self, order: int) -> "CyclotomicNumber":
        """Same value viewed in Q(zeta_order); requires self.order | order."""
        if order % self.order:
            raise DomainError(f"cannot lift order {self.order} into order {order}")
        if order == self.order:
            return self
        step = order // self.order
        out = [Fraction(0)] * order
        for k, c in enumerate(self.coeffs):
            out[k * step] = c
        return CyclotomicNumber(order, out)

    def _coerce(self, other, lift: bool = True):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.rational(other, self.order)
        elif not isinstance(other, CyclotomicNumber):
            return None, None
        if other.order == self.order:
            return self, other
        if not lift:
            raise DomainError(f"order mismatch {self.order} vs {other.order} with lifting disabled")
        m = lcm(self.order, other.order)
        return self.lift(m), other.lift(m)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return CyclotomicNumber(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return CyclotomicNumber(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, [c * other for c in self.coeffs])
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        m = a.order
        out = [Fraction(0)] * m
        bnz = [(j, y) for j, y in enumerate(b.coeffs) if y]
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in bnz:
                    out[(i + j) % m] += x * y
        return CyclotomicNumber(m, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers are not supported")
        result = CyclotomicNumber.rational(1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "CyclotomicNumber":
        m = self.order
        out = [Fraction(0)] * m
        for k, c in enumerate(self.coeffs):
            out[(-k) % m] = c
        return CyclotomicNumber(m, out)

    def real_part(self) -> "CyclotomicNumber":
        return (self + self.conjugate()) * Fraction(1, 2)

    # -- canonical form --------------------------------------------------

    def reduced(self) -> tuple[Fraction, ...]:
        """Coefficients of the remainder modulo Phi_order, in the power basis."""
        den = 1
        for c in self.coeffs:
            if c.denominator != 1:
                den = lcm(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        _, rem = _poly_divmod(ints, list(_phi_coeffs(self.order)))
        return tuple(Fraction(x, den) for x in rem)

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return (a - b).is_zero()

    def is_rational(self) -> bool:
        return not any(self.reduced()[1:])

    def to_rational(self) -> Fraction:
        red = self.reduced()
        if any(red[1:]):
            raise NotRational(format_reduced(self.order, red))
        return red[0] if red else Fraction(0)

    def to_complex(self, precision: int = 53) -> complex:
        """Numerical value with zeta_m = exp(2 pi i / m); extra bits go through mpmath."""
        m = self.order
        if precision <= 53:
            re_parts, im_parts = [], []
            for k, c in enumerate(self.coeffs):
                if c:
                    z = _unit_root(m, k)
                    re_parts.append(float(c) * z.real)
                    im_parts.append(float(c) * z.imag)
            return complex(math.fsum(re_parts), math.fsum(im_parts))
        import mpmath

        with mpmath.workprec(precision):
            total = mpmath.mpc(0)
            for k, c in enumerate(self.coeffs):
                if c:
                    total += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(mpmath.mpf(2 * k) / m)
            return complex(total)

    def __str__(self):
        return format_reduced(self.order, self.reduced())

    def __repr__(self):
        return f"CyclotomicNumber({self.order}, '{self}')"

    @classmethod
    def parse(cls, text: str) -> "CyclotomicNumber":
        """Inverse of ``str``: accepts sums of ``q`` and ``q*zeta_m^k`` terms."""
        s = text.replace(" ", "")
        if not s:
            raise DomainError("empty cyclotomic literal")
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise DomainError(f"bad cyclotomic literal {text!r}")
        parsed = []
        order = 1
        for t in terms:
            sign = -1 if t.startswith("-") else 1
            body = t.lstrip("+-")
            mz = re.fullmatch(r"(?:(\d+(?:/\d+)?)\*)?zeta_(\d+)\^(\d+)", body)
            if mz:
                q = Fraction(mz.group(1)) if mz.group(1) else Fraction(1)
                m, k = int(mz.group(2)), int(mz.group(3))
                if m < 1:
                    raise DomainError(f"bad root order in {text!r}")
                order = lcm(order, m)
                parsed.append((sign * q, m, k))
            elif re.fullmatch(r"\d+(?:/\d+)?", body):
                parsed.append((sign * Fraction(body), 1, 0))
            else:
                raise DomainError(f"bad cyclotomic term {t!r}")
        out = [Fraction(0)] * order
        for q, m, k in parsed:
            out[(k * (order // m)) % order] += q
        return cls(order, out)


@lru_cache(maxsize=4096)
def _unit_root(m: int, k: int) -> complex:
    k %= m
    # exact values at the axis points keep cot/real-part checks clean
    if 4 * k % m == 0:
        return (1, 1j, -1, -1j)[4 * k // m]
    return cmath.exp(2j * math.pi * k / m)


def format_reduced(order: int, reduced) -> str:
    parts = []
    for k, q in enumerate(reduced):
        if not q:
            continue
        if k == 0:
            term = str(q)
        elif q == 1:
            term = f"zeta_{order}^{k}"
        elif q == -1:
            term = f"-zeta_{order}^{k}"
        else:
            term = f"{q}*zeta_{order}^{k}"
        parts.append(term)
    if not parts:
        return "0"
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


# -- functional surface -----------------------------------------------------


def root_of_unity(m: int, k: int = 1) -> CyclotomicNumber:
    if m < 1:
        raise DomainError(f"root of unity order must be >= 1, got {m}")
    out = [0] * m
    out[k % m] = 1
    return CyclotomicNumber(m, out)


def add(z: CyclotomicNumber, w: CyclotomicNumber, *, lift: bool = True) -> CyclotomicNumber:
    a, b = z._coerce(w, lift)
    return a + b


def mul(z: CyclotomicNumber, w: CyclotomicNumber, *, lift: bool = True) -> CyclotomicNumber:
    a, b = z._coerce(w, lift)
    return a * b


def neg(z: CyclotomicNumber) -> CyclotomicNumber:
    return -z


def conjugate(z: CyclotomicNumber) -> CyclotomicNumber:
    return z.conjugate()


def real_part(z: CyclotomicNumber) -> CyclotomicNumber:
    return z.real_part()


def to_rational(z: CyclotomicNumber) -> Fraction:
    return z.to_rational()


def to_complex_float(z: CyclotomicNumber, precision: int = 53) -> complex:
    return z.to_complex(precision)


def degree(m: int) -> int:
    return euler_phi(m)
