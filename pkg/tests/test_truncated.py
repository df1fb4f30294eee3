"""Truncated sums mod p^2 against exact Fraction arithmetic."""

from fractions import Fraction
from math import factorial

import pytest

from padichyper.padic import DomainError, centered_residue, is_prime
from padichyper.truncated import (TruncSum, gamma_sign, trunc_3f2_rising,
                                  trunc_sum)


def _factorial_term(kind, n):
    f = factorial
    if kind == "eq1":
        return Fraction(f(2 * n) ** 3, f(n) ** 6 * 64 ** n)
    if kind == "eq2":
        return Fraction(f(3 * n) * f(2 * n), f(n) ** 5 * 108 ** n)
    if kind == "eq3":
        return Fraction(f(4 * n), f(n) ** 4 * 256 ** n)
    return Fraction(f(6 * n), f(3 * n) * f(n) ** 3 * 1728 ** n)


def _rising(x, n):
    out = Fraction(1)
    for k in range(n):
        out *= x + k
    return out


def _rising_term(d, n):
    return _rising(Fraction(1, 2), n) * _rising(Fraction(1, d), n) \
        * _rising(Fraction(d - 1, d), n) / Fraction(factorial(n) ** 3)


def _mod_p2(x, p):
    m = p * p
    assert x.denominator % p != 0
    return centered_residue(x.numerator * pow(x.denominator, -1, m), p, 2)


def test_leading_term_is_one():
    for kind in ("eq1", "eq2", "eq3", "eq4"):
        assert _factorial_term(kind, 0) == 1
    for d in (2, 3, 4, 6):
        assert _rising_term(d, 0) == 1


def test_sums_match_exact_rationals():
    for p in (5, 7, 13):
        for kind in ("eq1", "eq2", "eq3", "eq4"):
            exact = sum(_factorial_term(kind, n) for n in range(p))
            assert trunc_sum(kind, p) == _mod_p2(exact, p)
        for d in (2, 3, 4, 6):
            exact = sum(_rising_term(d, n) for n in range(p))
            assert trunc_3f2_rising(d, p) == _mod_p2(exact, p)


def test_frozen_small_values():
    # five-term rational sums at p=5
    assert trunc_sum("eq2", 5) == 0
    assert trunc_sum("eq4", 5) == 6
    assert gamma_sign(5) == -1  # so 6 = -a(5)


def test_rising_equals_factorial_kinds():
    for d, kind in ((2, "eq1"), (3, "eq2"), (4, "eq3"), (6, "eq4")):
        for p in (5, 7, 11, 13):
            assert trunc_3f2_rising(d, p) == trunc_sum(kind, p)
    assert trunc_3f2_rising(6, 5) == 6


def test_term_equivalence_exact():
    for d, kind in ((2, "eq1"), (3, "eq2"), (4, "eq3"), (6, "eq4")):
        for n in range(51):
            assert _rising_term(d, n) == _factorial_term(kind, n)


def test_gamma_sign_classes():
    for p in range(5, 200):
        if is_prime(p):
            assert gamma_sign(p) == (-1 if p % 12 == 5 else 1)


def test_guards():
    with pytest.raises(DomainError):
        trunc_sum("eq1", 3)
    with pytest.raises(DomainError):
        trunc_sum("eq1", 9)
    with pytest.raises(DomainError):
        trunc_sum("eq5", 5)
    with pytest.raises(DomainError):
        trunc_3f2_rising(5, 7)


def test_trunc_sum_record():
    rec = TruncSum.compute("eq2", 5)
    assert rec == TruncSum("eq2", 5, 0)
