"""Dirichlet characters modulo f.

A character is identified by its modulus and an exponent vector on the CRT
generators of (Z/fZ)*: if the i-th generator g_i has order o_i, then
chi(g_i) = zeta_{o_i}^{e_i}.  Values are read through a discrete-log table
built once per modulus.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import gcd

from .arith import euler_phi, factorize, is_fundamental_negative, kronecker, lcm
from .cyclotomic import CyclotomicNumber, root_of_unity
from .errors import DomainError

DLOG_LIMIT = 10**6


def _multiplicative_order(g: int, n: int, group_order: int) -> int:
    order = group_order
    for p, _ in factorize(group_order):
        while order % p == 0 and pow(g, order // p, n) == 1:
            order //= p
    return order


def _primitive_root_prime_power(p: int, k: int) -> int:
    q = p**k
    phi = q - q // p
    g = 2
    while True:
        if g % p and _multiplicative_order(g, q, phi) == phi:
            return g
        g += 1


def _crt_lift(residue: int, q: int, f: int) -> int:
    """The x mod f with x = residue (mod q) and x = 1 (mod f/q)."""
    rest = f // q
    if rest == 1:
        return residue % f
    # x = 1 + rest * t,  rest*t = residue - 1 (mod q)
    t = ((residue - 1) * pow(rest, -1, q)) % q
    return (1 + rest * t) % f


@dataclass(frozen=True, eq=False)
class UnitGroupStructure:
    """(Z/fZ)* as a product of cyclic groups <g_i> of order o_i."""

    modulus: int
    components: tuple[tuple[int, int], ...]  # (generator, order)
    # (p, k, kind) behind each component; kind is "cyclic", "minus_one" or "five"
    component_primes: tuple[tuple[int, int, str], ...]

    @property
    def generators(self) -> list[int]:
        return [g for g, _ in self.components]

    @property
    def orders(self) -> list[int]:
        return [o for _, o in self.components]

    @property
    def order(self) -> int:
        out = 1
        for _, o in self.components:
            out *= o
        return out

    @property
    def exponent(self) -> int:
        out = 1
        for _, o in self.components:
            out = lcm(out, o)
        return out

    @cached_property
    def dlog(self) -> list:
        """dlog[n] is the exponent vector of n on the generators, or None for non-units."""
        f = self.modulus
        if f > DLOG_LIMIT:
            raise DomainError(f"modulus {f} exceeds the discrete-log table cap {DLOG_LIMIT}")
        table = [None] * f
        elems = [(1 % f, ())]
        for g, o in self.components:
            powers = [pow(g, j, f) for j in range(o)]
            elems = [(x * gp % f, vec + (j,)) for x, vec in elems for j, gp in enumerate(powers)]
        for x, vec in elems:
            table[x] = vec
        return table


@lru_cache(maxsize=512)
def unit_group(f: int) -> UnitGroupStructure:
    if f < 1:
        raise DomainError(f"modulus must be >= 1, got {f}")
    comps, prims = [], []
    for p, k in factorize(f):
        q = p**k
        if p == 2:
            if k >= 2:
                comps.append((_crt_lift(-1, q, f), 2))
                prims.append((2, k, "minus_one"))
            if k >= 3:
                comps.append((_crt_lift(5, q, f), 2 ** (k - 2)))
                prims.append((2, k, "five"))
        else:
            comps.append((_crt_lift(_primitive_root_prime_power(p, k), q, f), q - q // p))
            prims.append((p, k, "cyclic"))
    return UnitGroupStructure(f, tuple(comps), tuple(prims))


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        grp = unit_group(self.modulus)
        if len(self.exponents) != len(grp.components):
            raise DomainError(
                f"modulus {self.modulus} needs {len(grp.components)} exponents, got {len(self.exponents)}"
            )
        object.__setattr__(
            self, "exponents", tuple(e % o for e, (_, o) in zip(self.exponents, grp.components))
        )

    @property
    def group(self) -> UnitGroupStructure:
        return unit_group(self.modulus)

    @cached_property
    def order(self) -> int:
        out = 1
        for e, o in zip(self.exponents, self.group.orders):
            out = lcm(out, o // gcd(o, e))
        return out

    @cached_property
    def value_exponents(self) -> list[int]:
        """t[n] with chi(n) = zeta_order^t[n], or -1 when gcd(n, f) > 1."""
        ord_ = self.order
        weights = [e * ord_ // o for e, o in zip(self.exponents, self.group.orders)]
        out = []
        for vec in self.group.dlog:
            if vec is None:
                out.append(-1)
            else:
                out.append(sum(w * k for w, k in zip(weights, vec)) % ord_)
        return out

    def exponent_at(self, n: int) -> int:
        return self.value_exponents[n % self.modulus]

    def __call__(self, n: int) -> CyclotomicNumber:
        return evaluate(self, n)

    def complex_value(self, n: int) -> complex:
        from .cyclotomic import _unit_root

        t = self.exponent_at(n)
        return 0j if t < 0 else _unit_root(self.order, t)

    @property
    def is_principal(self) -> bool:
        return not any(self.exponents)

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    @cached_property
    def is_odd(self) -> bool:
        # log(-1) is o/2 on a cyclic component, 1 on the (-1) slot, 0 on the (5) slot
        t = 0
        for e, (_, o), (_, _, kind) in zip(self.exponents, self.group.components, self.group.component_primes):
            if kind == "cyclic":
                t += e * (o // 2) * self.order // o
            elif kind == "minus_one":
                t += e * self.order // o
        return 2 * (t % self.order) == self.order

    @property
    def parity(self) -> str:
        return "odd" if self.is_odd else "even"

    @cached_property
    def conductor(self) -> int:
        return conductor(self)

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if other.modulus != self.modulus:
            raise DomainError("characters have different moduli")
        return DirichletCharacter(self.modulus, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, tuple(-e for e in self.exponents))

    def sort_key(self):
        return (self.modulus, self.exponents)

    def label(self) -> str:
        return f"{self.modulus}:[{','.join(map(str, self.exponents))}]"

    def __repr__(self):
        return f"DirichletCharacter({self.modulus}, {self.exponents})"


def all_characters(f: int) -> list[DirichletCharacter]:
    grp = unit_group(f)
    return [DirichletCharacter(f, e) for e in product(*(range(o) for o in grp.orders))]


def principal_character(f: int) -> DirichletCharacter:
    return DirichletCharacter(f, (0,) * len(unit_group(f).components))


def evaluate(chi: DirichletCharacter, n: int) -> CyclotomicNumber:
    t = chi.exponent_at(n)
    if t < 0:
        return CyclotomicNumber.zero(chi.order)
    return root_of_unity(chi.order, t)


def parity(chi: DirichletCharacter) -> str:
    return chi.parity


def conductor(chi: DirichletCharacter) -> int:
    """Conductor, assembled from the local conductor at each prime power.

    At an odd p^k the local character of order r is trivial on the kernel of
    reduction to p^j iff r | phi(p^j).  At 2^k the generator 5 generates the
    classes = 1 mod 4, so the 5-part of order r needs 2^(2 + v_2(r)).
    """
    grp = chi.group
    out = 1
    minus_one, r5 = 0, 1
    for e, (_, o), (p, _, kind) in zip(chi.exponents, grp.components, grp.component_primes):
        r = o // gcd(o, e)
        if kind == "minus_one":
            minus_one = e
        elif kind == "five":
            r5 = r
        elif r > 1:
            j = 1
            while (p - 1) * p ** (j - 1) % r:
                j += 1
            out *= p**j
    if r5 > 1:
        out *= 2 ** (1 + r5.bit_length())
    elif minus_one:
        out *= 4
    return out


def conductor_bruteforce(chi: DirichletCharacter) -> int:
    """Smallest d | f with chi trivial on units x = 1 (mod d); checks the definition directly."""
    f = chi.modulus
    t = chi.value_exponents
    for d in range(1, f + 1):
        if f % d == 0 and all(t[x % f] == 0 for x in range(1, f + 1, d) if gcd(x, f) == 1):
            return d
    return f


def is_primitive(chi: DirichletCharacter) -> bool:
    return chi.is_primitive


def primitive_part(chi: DirichletCharacter) -> DirichletCharacter:
    """The character modulo the conductor that induces chi."""
    c = chi.conductor
    if c == chi.modulus:
        return chi
    f = chi.modulus
    sub = unit_group(c)
    exps = []
    for h, o in sub.components:
        n = h
        while gcd(n, f) != 1:
            n += c
        t = chi.exponent_at(n)
        # chi(n)^o = 1, so zeta_ord^t = zeta_o^(t*o/ord)
        exps.append(t * o // chi.order)
    return DirichletCharacter(c, tuple(exps))


def conjugate_character(chi: DirichletCharacter) -> DirichletCharacter:
    return chi.conjugate()


def quadratic_field_character(D: int) -> DirichletCharacter:
    """The real odd primitive character n -> kronecker(-D, n) modulo D."""
    if not is_fundamental_negative(D):
        raise DomainError(f"-{D} is not a fundamental discriminant")
    grp = unit_group(D)
    exps = tuple(0 if kronecker(-D, g) == 1 else o // 2 for g, o in grp.components)
    return DirichletCharacter(D, exps)


def odd_characters(f: int) -> list[DirichletCharacter]:
    return [chi for chi in all_characters(f) if chi.is_odd]


def primitive_odd_characters(f: int) -> list[DirichletCharacter]:
    if f <= 2:
        return []
    return [chi for chi in all_characters(f) if chi.is_odd and chi.is_primitive]


def group_size_check(f: int) -> bool:
    return unit_group(f).order == euler_phi(f)
