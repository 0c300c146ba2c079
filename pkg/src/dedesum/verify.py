"""Property suites behind ``dedesum verify``.

Each suite walks a range, counts checks, and keeps the first counterexample.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
import math
import random

from .abelian import l1sq_scaled, l1sq_scaled_halfrange
from .arith import divisors, is_prime
from .characters import all_characters, primitive_odd_characters
from .dedekind import (
    character_weighted_sum,
    dedekind_sum,
    dedekind_sum_cotangent,
    dedekind_sum_sawtooth,
)
from .quadratic import l1_analytic_oracle, prime_identity, sweep


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    violations: int = 0
    first_counterexample: dict | None = None
    params: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def record(self, passed: bool, **details):
        self.checked += 1
        if not passed:
            self.violations += 1
            if self.first_counterexample is None:
                self.first_counterexample = {k: _jsonable(v) for k, v in details.items()}

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "params": self.params,
            "checked": self.checked,
            "violations": self.violations,
            "first_counterexample": self.first_counterexample,
        }


def _jsonable(v):
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)


def reciprocity_rhs(c: int, d: int) -> Fraction:
    return Fraction(-1, 4) + Fraction(c * c + d * d + 1, 12 * c * d)


def verify_reciprocity(max_d: int = 2000, samples: int = 10_000, sample_max_d: int | None = None,
                       exhaustive_d: int = 100, seed: int = 0) -> SuiteResult:
    """Exhaustive for d <= exhaustive_d, then random coprime pairs up to sample_max_d."""
    res = SuiteResult("reciprocity", params={"max_d": max_d, "samples": samples, "seed": seed})
    top = sample_max_d or max_d

    def check(c, d):
        lhs = dedekind_sum(c, d) + dedekind_sum(d, c)
        s = dedekind_sum(c, d)
        res.record(lhs == reciprocity_rhs(c, d) and (6 * d * s).denominator == 1, c=c, d=d, lhs=lhs)

    for d in range(2, min(exhaustive_d, max_d) + 1):
        for c in range(1, d):
            if gcd(c, d) == 1:
                check(c, d)
    rng = random.Random(seed)
    if top > 2:
        for _ in range(samples):
            d = rng.randint(3, top)
            c = rng.randint(1, d - 1)
            while gcd(c, d) != 1:
                c = rng.randint(1, d - 1)
            check(c, d)
    return res


def verify_oddness(max_d: int = 500) -> SuiteResult:
    res = SuiteResult("oddness", params={"max_d": max_d})
    for d in range(2, max_d + 1):
        for c in range(1, d):
            if gcd(c, d) == 1:
                res.record(dedekind_sum(d - c, d) == -dedekind_sum(c, d), c=c, d=d)
    return res


def verify_inversion(max_d: int = 300) -> SuiteResult:
    res = SuiteResult("inversion", params={"max_d": max_d})
    for d in range(2, max_d + 1):
        for c in range(1, d):
            if gcd(c, d) == 1:
                res.record(dedekind_sum(pow(c, -1, d), d) == dedekind_sum(c, d), c=c, d=d)
    return res


def verify_oracle(max_d: int = 200) -> SuiteResult:
    """Fast path = sawtooth exactly, = cotangent within d * 2^-40."""
    res = SuiteResult("oracle", params={"max_d": max_d})
    for d in range(2, max_d + 1):
        for c in range(1, d):
            if gcd(c, d) != 1:
                continue
            s = dedekind_sum(c, d)
            saw = dedekind_sum_sawtooth(c, d)
            cot = dedekind_sum_cotangent(c, d)
            res.record(s == saw and abs(float(s) - cot) <= d * 2.0**-40, c=c, d=d, fast=s, sawtooth=saw, cotangent=cot)
    return res


def verify_vanishing(max_f: int = 100) -> SuiteResult:
    """S(chi, f, d) = 0 for primitive chi mod f and proper divisors d of f."""
    res = SuiteResult("vanishing", params={"max_f": max_f})
    for f in range(3, max_f + 1):
        divs = [d for d in divisors(f) if d < f]
        for chi in all_characters(f):
            if not chi.is_primitive:
                continue
            for d in divs:
                value = character_weighted_sum(chi, f, d)
                res.record(value.is_zero(), chi=chi.label(), d=d, value=value)
    return res


def verify_parity(max_p: int = 5000) -> SuiteResult:
    res = SuiteResult("parity", params={"max_p": max_p})
    for p in range(7, max_p + 1, 4):
        if is_prime(p):
            chk = prime_identity(p)
            res.record(chk.ok, p=p, h=chk.h, squared_sum=chk.squared_sum, residue_sum=chk.residue_sum)
    return res


def verify_lvalue(max_f: int = 100, tol: float = 1e-8) -> SuiteResult:
    res = SuiteResult("lvalue", params={"max_f": max_f, "tol": tol})
    for f in range(3, max_f + 1):
        for chi in primitive_odd_characters(f):
            exact = l1sq_scaled(chi)
            numeric = f / math.pi**2 * l1_analytic_oracle(chi) ** 2
            err = abs(numeric - exact.to_complex().real)
            real = exact == exact.conjugate()
            half = l1sq_scaled_halfrange(chi) * 2 == exact
            res.record(err < tol and real and half, chi=chi.label(), exact=exact, float=numeric, error=err)
    return res


def verify_classnum(max_d: int = 10_000, jobs: int = 1) -> SuiteResult:
    res = SuiteResult("classnum", params={"max_d": max_d})
    for rep in sweep(max_d, jobs=jobs):
        res.record(bool(rep.oracles_agree), D=rep.D, h=rep.h, forms=rep.forms_h, analytic=rep.analytic_value)
    return res


SUITES = {
    "reciprocity": verify_reciprocity,
    "oddness": verify_oddness,
    "inversion": verify_inversion,
    "oracle": verify_oracle,
    "vanishing": verify_vanishing,
    "parity": verify_parity,
    "lvalue": verify_lvalue,
    "classnum": verify_classnum,
}
