"""Exact Dedekind sums, |L(1, chi)|^2 and (relative) class numbers."""

__version__ = "0.1.0"

from .arith import BigRational, euler_phi, factorize, gcd, kronecker, moebius
from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial, root_of_unity
from .dedekind import dedekind_sum, dedekind_sum_cotangent, dedekind_sum_sawtooth
from .characters import DirichletCharacter, all_characters, quadratic_field_character, unit_group
from .quadratic import class_number, class_number_forms_oracle, l1_analytic_oracle
from .abelian import cyclotomic_field, field_from_characters, relative_class_number
from .errors import DomainError, InconsistencyError, NotRational, UndeterminedUnitIndex
