"""Eta products, their coefficients, and the quadratic-form closed form."""

import random

import pytest

from padichyper.modforms import (QSeries, cornacchia, eta_factor,
                                 newform_coeffs, pentagonal, phi_m)
from padichyper.padic import DomainError, is_prime, legendre


def _naive_mul(a, b, limit):
    out = [0] * (limit + 1)
    for i, v in enumerate(a[:limit + 1]):
        for j, w in enumerate(b[:limit + 1]):
            if i + j <= limit:
                out[i + j] += v * w
    return out


def test_pentagonal_expansion():
    got = pentagonal(1, 12)
    assert got.coeffs == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]
    scaled = pentagonal(3, 20)
    assert [n for n, c in enumerate(scaled.coeffs) if c] == [0, 3, 6, 15]


def test_qseries_mul_matches_naive():
    rng = random.Random(99)
    for _ in range(20):
        limit = rng.randrange(1, 25)
        a = [rng.randrange(-3, 4) for _ in range(limit + 1)]
        b = [rng.randrange(-3, 4) for _ in range(limit + 1)]
        got = QSeries(a, limit) * QSeries(b, limit)
        assert got.coeffs == _naive_mul(a, b, limit)


def test_qseries_shift_truncate():
    s = QSeries([1, 2, 3], 5)
    assert s.shift(2).coeffs == [0, 0, 1, 2, 3, 0]
    assert s.truncate(2).coeffs == [1, 2, 3]
    with pytest.raises(DomainError):
        QSeries([1], 0)


def test_eta_factor_square_law():
    one = eta_factor(1, 0, 10)
    assert one.coeffs == [1] + [0] * 10
    e1 = eta_factor(1, 1, 40)
    assert (e1 * e1).coeffs == eta_factor(1, 2, 40).coeffs


def test_eta_factor_truncation_exactness():
    small = eta_factor(2, 3, 50)
    big = eta_factor(2, 3, 200)
    assert big.truncate(50).coeffs == small.coeffs


def test_form_a_hand_expansion():
    # q prod (1-q^{4n})^6: the q^5 coefficient comes from -6 q^4
    base = [1, 0, 0, 0, -1]  # 1 - q^4, enough for limit 4
    prod = [1]
    for _ in range(6):
        prod = _naive_mul(prod, base, 4)
    assert prod[4] == -6
    coeffs = newform_coeffs("a", 6)
    assert coeffs[1] == 1
    assert coeffs[5] == -6
    assert 4 * 1 * 1 - 2 * 5 == -6


def test_form_b_hand_expansion():
    # q prod (1-q^{6n})^3 (1-q^{2n})^3 up to q^7
    f6 = [1, 0, 0, 0, 0, 0, -1]
    f2 = [1, 0, -1, 0, -1, 0, 0]  # (1-q^2)(1-q^4)(1-q^6) truncated at q^6
    prod = [1]
    for _ in range(3):
        prod = _naive_mul(prod, f6, 6)
    got = [1]
    for _ in range(3):
        got = _naive_mul(got, f2, 6)
    full = _naive_mul(prod, got, 6)
    assert full[6] == 2
    assert newform_coeffs("b", 8)[7] == 2
    assert 4 * 2 * 2 - 2 * 7 == 2


def test_form_c_hand_expansion():
    # q (1-q)^2 (1-q^2)^2 ... : the q^3 coefficient is -2
    assert newform_coeffs("c", 4)[3] == -2
    assert 4 * 1 * 1 - 2 * 3 == -2 and 3 == 1 + 2 * 1


def test_newform_guards():
    with pytest.raises(DomainError):
        newform_coeffs("z", 10)
    with pytest.raises(DomainError):
        newform_coeffs("a", 1)
    assert newform_coeffs("a", 2)[:2] == (0, 1)


def test_cornacchia_frozen_and_exhaustive():
    assert cornacchia(3, 7) == (2, 1)
    assert cornacchia(1, 5) == (1, 2)  # x odd picked over (2, 1)
    assert cornacchia(2, 5) is None
    assert legendre(-2, 5) == -1
    with pytest.raises(DomainError):
        cornacchia(14, 7)
    for m in (1, 2, 3, 4, 7):
        for p in range(3, 100, 2):
            if not is_prime(p) or m % p == 0:
                continue
            got = cornacchia(m, p)
            reps = [(x, y) for x in range(1, p) for y in range(1, p)
                    if x * x + m * y * y == p]
            if m == 1:
                reps = [r for r in reps if r[0] % 2]
            assert (got in reps) if reps else (got is None)
            if reps:
                assert got[0] ** 2 + m * got[1] ** 2 == p


def test_phi_m_values():
    assert phi_m(2, 3) == -2
    assert phi_m(3, 5) == 0
    assert phi_m(4, 5) == -6
    assert phi_m(4, 13) == 10
    with pytest.raises(DomainError):
        phi_m(5, 7)


def test_coefficients_match_quadratic_forms():
    # eta expansion vs closed form, both ways, for all usable odd primes
    limit = 200
    pairs = (("a", 4, 3), ("b", 3, 5), ("c", 2, 3))
    for form, m, first in pairs:
        coeffs = newform_coeffs(form, limit)
        for p in range(first, limit, 2):
            if is_prime(p):
                assert coeffs[p] == phi_m(m, p)


def test_deligne_bound_small():
    limit = 500
    for form in ("a", "b", "c"):
        coeffs = newform_coeffs(form, limit)
        for p in range(2, limit):
            if is_prime(p):
                assert abs(coeffs[p]) <= 2 * p
