"""Relative class numbers of imaginary abelian fields.

K is given by its group X_K of Dirichlet characters modulo a common modulus.
Writing X_K^- for the odd members (as primitive characters),

    h^- = Q w prod_{chi in X_K^-} sqrt(f_chi) / (2 pi) * L(1, chi).

A conjugate pair {chi, chi-bar} contributes (f/4pi^2)|L(1,chi)|^2, which is
exactly (1/4) sum chi(n) s(n, f).  A real odd chi of conductor D contributes
h(-D)/w(-D).  Every factor is exact, so the product is an exact rational.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
import math

from .arith import factorize, lcm
from .characters import (
    DirichletCharacter,
    all_characters,
    primitive_part,
    principal_character,
    quadratic_field_character,
)
from .cyclotomic import CyclotomicNumber
from .dedekind import dedekind_numerator
from .errors import DomainError, InconsistencyError, NotRational, UndeterminedUnitIndex
from .quadratic import class_number, l1_analytic_oracle


def _prim_key(chi: DirichletCharacter) -> tuple:
    p = primitive_part(chi)
    return (p.modulus, p.exponents)


@dataclass
class AbelianFieldSpec:
    modulus: int
    generators: list[DirichletCharacter]
    hasse_q_override: int | None = None
    name: str | None = None

    def __post_init__(self):
        for chi in self.generators:
            if chi.modulus != self.modulus:
                raise DomainError(f"generator {chi!r} is not a character modulo {self.modulus}")
        if self.hasse_q_override not in (None, 1, 2):
            raise DomainError("Hasse unit index must be 1 or 2")

    @cached_property
    def group(self) -> list[DirichletCharacter]:
        """X_K: the subgroup generated by ``generators``, sorted."""
        seen = {principal_character(self.modulus)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for chi in frontier:
                for g in self.generators:
                    prod = chi * g
                    if prod not in seen:
                        seen.add(prod)
                        nxt.append(prod)
            frontier = nxt
        return sorted(seen, key=DirichletCharacter.sort_key)

    @property
    def degree(self) -> int:
        return len(self.group)

    @cached_property
    def odd_characters(self) -> list[DirichletCharacter]:
        """X_K^-: odd members, primitivized, sorted by (conductor, exponents)."""
        prims = [primitive_part(chi) for chi in self.group if chi.is_odd]
        return sorted(prims, key=DirichletCharacter.sort_key)

    @property
    def is_imaginary(self) -> bool:
        return bool(self.odd_characters)

    @cached_property
    def primitive_keys(self) -> frozenset:
        return frozenset(_prim_key(chi) for chi in self.group)

    @property
    def is_cyclic(self) -> bool:
        return any(chi.order == self.degree for chi in self.group)

    @cached_property
    def cyclotomic_index(self) -> int | None:
        """n if K = Q(zeta_n) with n != 2 mod 4, else None."""
        for m in sorted({d for d in range(1, 2 * self.modulus + 1) if (2 * self.modulus) % d == 0}, reverse=True):
            if m % 4 == 2:
                continue
            keys = {_prim_key(chi) for chi in all_characters(m)}
            if keys == set(self.primitive_keys):
                return m
        return None

    @cached_property
    def w(self) -> int:
        return roots_of_unity_count(self)

    @cached_property
    def hasse(self) -> tuple[int, str]:
        return _hasse_unit_index(self)

    @property
    def Q(self) -> int:
        return self.hasse[0]

    def describe(self) -> dict:
        return {
            "modulus": self.modulus,
            "name": self.name,
            "generators": [chi.label() for chi in self.generators],
            "degree": self.degree,
            "imaginary": self.is_imaginary,
            "odd_characters": [chi.label() for chi in self.odd_characters],
        }


def field_from_characters(modulus: int, generators, hasse_q: int | None = None, name=None) -> AbelianFieldSpec:
    gens = [g if isinstance(g, DirichletCharacter) else DirichletCharacter(modulus, tuple(g)) for g in generators]
    return AbelianFieldSpec(modulus, gens, hasse_q, name)


def cyclotomic_field(n: int, hasse_q: int | None = None) -> AbelianFieldSpec:
    if n < 3 or n % 4 == 2:
        raise DomainError(f"Q(zeta_{n}): need n >= 3 and n != 2 mod 4")
    grp = all_characters(n)
    # the one-hot exponent vectors generate the full group
    gens = [DirichletCharacter(n, tuple(int(i == j) for j in range(len(grp[0].exponents))))
            for i in range(len(grp[0].exponents))]
    return AbelianFieldSpec(n, gens, hasse_q, f"Q(zeta_{n})")


def imaginary_quadratic_field(D: int) -> AbelianFieldSpec:
    return AbelianFieldSpec(D, [quadratic_field_character(D)], None, f"Q(sqrt(-{D}))")


def roots_of_unity_count(spec: AbelianFieldSpec) -> int:
    """Largest m | 2f with every character of Q(zeta_m) in X_K."""
    twice = 2 * spec.modulus
    best = 2
    keys = spec.primitive_keys
    for m in range(1, twice + 1):
        if twice % m == 0 and m > best:
            if all(_prim_key(chi) in keys for chi in all_characters(m)):
                best = m
    return best


def _hasse_unit_index(spec: AbelianFieldSpec) -> tuple[int, str]:
    if spec.hasse_q_override is not None:
        return spec.hasse_q_override, "user-supplied"
    if not spec.is_imaginary:
        raise DomainError("Hasse unit index is only defined here for imaginary fields")
    if spec.degree == 2:
        return 1, "rule: imaginary quadratic"
    n = spec.cyclotomic_index
    if n is not None:
        if len(factorize(n)) == 1:
            return 1, f"rule: Q(zeta_{n}), prime-power conductor"
        return 2, f"rule: Q(zeta_{n}), composite conductor"
    if spec.degree == 4 and spec.is_cyclic:
        return 1, "rule: imaginary cyclic quartic"
    raise UndeterminedUnitIndex("no rule fixes Q_K for this field; pass an explicit Hasse unit index")


def hasse_unit_index(spec: AbelianFieldSpec) -> int:
    return spec.Q


def _require_odd_primitive(chi: DirichletCharacter) -> None:
    if chi.modulus <= 2 or not chi.is_odd or not chi.is_primitive:
        raise DomainError(f"{chi!r}: need an odd primitive character modulo f > 2")


def l1sq_scaled(chi: DirichletCharacter) -> CyclotomicNumber:
    """sum_{gcd(n,f)=1} chi(n) s(n, f), i.e. (f / pi^2) |L(1, chi)|^2, exactly."""
    _require_odd_primitive(chi)
    f, order = chi.modulus, chi.order
    sums = [0] * order
    table = chi.value_exponents
    for n in range(1, f):
        t = table[n]
        if t >= 0:
            sums[t] += dedekind_numerator(n, f)
    return CyclotomicNumber.from_exponent_sums(order, sums, 12 * f)


def l1sq_scaled_halfrange(chi: DirichletCharacter) -> CyclotomicNumber:
    """sum_{1 <= n < f/2, gcd(n,f)=1} Re(chi(n)) s(n, f); half of ``l1sq_scaled``."""
    _require_odd_primitive(chi)
    f, order = chi.modulus, chi.order
    sums = [0] * order
    table = chi.value_exponents
    for n in range(1, (f + 1) // 2):
        t = table[n]
        if t >= 0:
            v = dedekind_numerator(n, f)
            sums[t] += v
            sums[-t % order] += v
    # Re(zeta^t) = (zeta^t + zeta^-t) / 2
    return CyclotomicNumber.from_exponent_sums(order, sums, 24 * f)


@dataclass
class Contribution:
    characters: list[DirichletCharacter]
    conductor: int
    kind: str  # "pair" or "real"
    value: CyclotomicNumber
    source: str

    def to_dict(self) -> dict:
        return {
            "characters": [c.label() for c in self.characters],
            "conductor": self.conductor,
            "kind": self.kind,
            "value": str(self.value),
            "source": self.source,
        }


@dataclass
class RelativeClassNumberReport:
    spec: AbelianFieldSpec
    h_minus: int
    Q: int
    Q_source: str
    w: int
    product: Fraction
    contributions: list[Contribution] = field(default_factory=list)
    float_value: float = 0.0

    @property
    def float_agrees(self) -> bool:
        return round(self.float_value) == self.h_minus and abs(self.float_value - self.h_minus) < 1e-6 * max(1, self.h_minus)

    def to_dict(self) -> dict:
        return {
            "field": self.spec.describe(),
            "h_minus": self.h_minus,
            "hasse_unit_index": self.Q,
            "hasse_unit_index_source": self.Q_source,
            "roots_of_unity": self.w,
            "exact_product": str(self.product),
            "contributions": [c.to_dict() for c in self.contributions],
            "float_cross_check": self.float_value,
            "float_agrees": self.float_agrees,
        }


def _contributions(spec: AbelianFieldSpec) -> list[Contribution]:
    out = []
    done = set()
    for chi in spec.odd_characters:
        if chi in done:
            continue
        bar = chi.conjugate()
        done.update((chi, bar))
        if chi == bar:
            D = chi.conductor
            if quadratic_field_character(D) != chi:
                raise InconsistencyError(f"real odd primitive {chi!r} is not the quadratic character mod {D}")
            rep = class_number(D)
            value = CyclotomicNumber.rational(Fraction(rep.h, rep.w))
            out.append(Contribution([chi], D, "real", value, f"h(-{D})/w = {rep.h}/{rep.w}"))
        else:
            value = l1sq_scaled(chi) * Fraction(1, 4)
            out.append(Contribution([chi, bar], chi.conductor, "pair", value, "sum chi(n) s(n,f) / 4"))
    return out


def _float_product(spec: AbelianFieldSpec) -> float:
    logs = [
        math.log(math.sqrt(chi.modulus) / (2 * math.pi) * l1_analytic_oracle(chi))
        for chi in spec.odd_characters
    ]
    return spec.Q * spec.w * math.exp(math.fsum(logs))


def relative_class_number(spec: AbelianFieldSpec) -> RelativeClassNumberReport:
    if not spec.is_imaginary:
        raise DomainError("relative class number needs an imaginary field")
    Q, Q_source = spec.hasse
    w = spec.w
    contribs = _contributions(spec)
    order = 1
    for c in contribs:
        order = lcm(order, c.value.order)
    prod = CyclotomicNumber.rational(1, order)
    for c in contribs:
        prod = prod * c.value.lift(order)
    try:
        exact = prod.to_rational()
    except NotRational as exc:
        raise InconsistencyError(f"product over odd characters is not rational: {exc.reduced}") from exc
    h = Q * w * exact
    if h.denominator != 1 or h < 1:
        raise InconsistencyError(f"h^- came out as {h} (Q={Q}, w={w}, product={exact})")
    return RelativeClassNumberReport(
        spec=spec,
        h_minus=int(h),
        Q=Q,
        Q_source=Q_source,
        w=w,
        product=exact,
        contributions=contribs,
        float_value=_float_product(spec),
    )
