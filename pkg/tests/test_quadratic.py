import math
from fractions import Fraction

import mpmath
import pytest

from dedesum.arith import fundamental_discriminants, is_prime, kronecker
from dedesum.dedekind import dedekind_sum
from dedesum.characters import DirichletCharacter, all_characters, quadratic_field_character
from dedesum.errors import DomainError
from dedesum.quadratic import (
    class_number,
    class_number_forms_oracle,
    class_number_squared_prime,
    l1_analytic_oracle,
    l1_real_float,
    parity_check,
    prime_identity,
    quadratic_field,
    sweep,
    character_dedekind_sum,
)


def l1_digamma(f, values):
    """L(1, chi) = -(1/f) sum chi(a) psi(a/f); independent of every cotangent path."""
    return complex(-sum(values(a) * mpmath.digamma(mpmath.mpf(a) / f) for a in range(1, f)) / f)


@pytest.mark.parametrize("D,h", [(3, 1), (4, 1), (7, 1), (23, 3)])
def test_class_number_examples(D, h):
    assert class_number(D).h == h


def test_class_number_sums():
    # (36/4) (s(1,3) - s(2,3)) = 9 * (1/9) = 1
    assert character_dedekind_sum(3) == Fraction(1, 9)
    # w = 4: 4 (s(1,4) - s(3,4)) = 8 s(1,4) = 1
    assert character_dedekind_sum(4) == Fraction(1, 4)
    assert class_number(23).exact_sum == 9 and class_number(23).h_squared == 9


def test_character_dedekind_sum_uses_the_field_character():
    for D in fundamental_discriminants(300):
        chi = quadratic_field_character(D)
        full = sum(
            (1 if chi.exponent_at(n) == 0 else -1) * dedekind_sum(n, D)
            for n in range(1, D) if chi.exponent_at(n) >= 0
        )
        assert character_dedekind_sum(D) == full


def test_quadratic_field_spec():
    assert [quadratic_field(D).w for D in (3, 4, 7, 8)] == [6, 4, 2, 2]
    assert quadratic_field(7).chi == quadratic_field_character(7)


@pytest.mark.parametrize("D", [1, 5, 12, 16, -3])
def test_class_number_rejects_non_fundamental(D):
    with pytest.raises(DomainError):
        class_number(D)
    with pytest.raises(DomainError):
        class_number_forms_oracle(D)


@pytest.mark.parametrize("D,h", [(3, 1), (23, 3), (163, 1), (4, 1), (20, 2), (47, 5), (71, 7)])
def test_forms_oracle(D, h):
    assert class_number_forms_oracle(D) == h


@pytest.mark.parametrize("p,value", [(7, 1), (23, 9), (11, 1)])
def test_class_number_squared_prime(p, value):
    assert class_number_squared_prime(p) == value


def test_squared_prime_term_by_term_for_seven():
    # s(n,7) for n = 1..6 is 5/14, 1/14, -1/14, 1/14, -1/14, -5/14; Legendre signs + + - + - -
    terms = [Fraction(5, 14), Fraction(1, 14), Fraction(-1, 14), Fraction(1, 14), Fraction(-1, 14), Fraction(-5, 14)]
    signs = [kronecker(n, 7) for n in range(1, 7)]
    assert sum(s * t for s, t in zip(signs, terms)) == 1 == class_number_squared_prime(7)


@pytest.mark.parametrize("p", [3, 5, 13, 15, 27])
def test_squared_prime_domain(p):
    with pytest.raises(DomainError):
        class_number_squared_prime(p)
    with pytest.raises(DomainError):
        parity_check(p)


@pytest.mark.parametrize("p", [7, 23, 163])
def test_parity_examples(p):
    assert parity_check(p)


def test_prime_identity_small_range():
    for p in range(7, 800, 4):
        if is_prime(p):
            assert prime_identity(p).ok, p


def test_l1_oracle_examples():
    chi3 = quadratic_field_character(3)
    chi4 = quadratic_field_character(4)
    chi7 = quadratic_field_character(7)
    assert abs(l1_analytic_oracle(chi3) - math.pi / math.sqrt(27)) < 1e-12
    assert abs(l1_analytic_oracle(chi4) - math.pi / 4) < 1e-12
    assert abs(l1_analytic_oracle(chi7) - math.pi / math.sqrt(7)) < 1e-12
    assert abs(l1_analytic_oracle(chi7, precision=150) - 1.1874104117237259) < 1e-14
    # Leibniz partial sums bracket pi/4
    leibniz = math.fsum((-1) ** k / (2 * k + 1) for k in range(200_000))
    assert abs(leibniz - l1_analytic_oracle(chi4)) < 1e-5


def test_l1_oracle_rejects_even_or_imprimitive():
    with pytest.raises(DomainError):
        l1_analytic_oracle(DirichletCharacter(5, (2,)))  # even quadratic mod 5
    lifted = [c for c in all_characters(9) if c.order == 2][0]
    with pytest.raises(DomainError):
        l1_analytic_oracle(lifted)


def test_l1_oracle_against_digamma():
    for f in (5, 7, 8, 11, 12, 13, 15, 16):
        for chi in all_characters(f):
            if chi.is_odd and chi.is_primitive:
                expected = abs(l1_digamma(f, chi.complex_value))
                assert abs(l1_analytic_oracle(chi) - expected) < 1e-10


def test_real_float_matches_character_oracle():
    for D in fundamental_discriminants(400):
        assert abs(l1_real_float(D) - l1_analytic_oracle(quadratic_field_character(D))) < 1e-12


def test_oracles_in_report():
    rep = class_number(23, ("forms", "analytic"))
    assert rep.forms_h == 3 and rep.oracles_agree is True
    assert rep.analytic_error < 1e-6
    assert class_number(23).oracles_agree is None
    with pytest.raises(DomainError):
        class_number(23, ("bogus",))


def test_sweep_ordering_with_jobs():
    serial = sweep(600, jobs=1)
    parallel = sweep(600, jobs=2)
    assert [r.D for r in serial] == [r.D for r in parallel] == fundamental_discriminants(600)
    assert [r.h for r in serial] == [r.h for r in parallel]
    assert all(r.oracles_agree for r in serial)
