"""Morita gamma: definition-product oracle, continuity, functional equations."""

from fractions import Fraction

import pytest

from padichyper.padic import DomainError, frac_floor, legendre
from padichyper.pgamma import (GammaTable, gamma_p, gamma_seq, gamma_table,
                               quartet_sign)


def _def_product(r, p, m):
    """(-1)^r times the product of j < r prime to p, reduced mod m."""
    v = 1
    for j in range(1, r):
        if j % p:
            v = v * j % m
    return (m - v) % m if r % 2 else v % m


def test_table_matches_definition_everywhere():
    for p, digits in ((5, 3), (7, 2), (13, 2)):
        table = GammaTable(p, digits)
        m = p ** digits
        acc = 1
        for r in range(m):
            want = (m - acc) % m if r % 2 else acc
            assert table.unit_at(r) == want
            if r % p:
                acc = acc * r % m


def test_anchor_values():
    assert gamma_p(0, 5, 2).residue(2) == 1
    assert gamma_p(1, 5, 2).residue(2) == 24
    g = gamma_p(Fraction(1, 2), 5, 2)
    assert g.residue(2) == 18
    # integer representative of 1/2 mod 25 is 13; direct product from there
    assert pow(2, -1, 25) == 13
    assert _def_product(13, 5, 25) == 18
    # the square is minus the quadratic character of -1
    assert 18 * 18 % 25 == (-legendre(-1, 5)) % 25


def test_value_is_unit_and_continuous():
    for x in (Fraction(1, 3), Fraction(22, 7), Fraction(-5, 9)):
        a = gamma_p(x, 5, 3)
        assert a.valuation == 0
        assert a == gamma_p(x + 125, 5, 3)
        assert a.residue(2) == gamma_p(x + 25, 5, 2).residue(2)


def test_factorial_recurrence():
    # gamma(r+1)/gamma(r) is -r when p does not divide r, else -1
    p, digits = 7, 2
    m = p ** digits
    t = gamma_table(p, digits)
    for r in range(m - 1):
        step = -r if r % p else -1
        assert t.unit_at(r + 1) == t.unit_at(r) * step % m


def test_reflection_pairs_are_signs():
    p, digits = 7, 2
    for a in range(1, p - 1):
        x = Fraction(a, p - 1)
        v = (gamma_p(x, p, digits) * gamma_p(1 - x, p, digits)).centered(digits)
        assert v in (1, -1)


def test_gamma_seq_matches_pointwise():
    p, digits = 7, 2
    for c in (Fraction(1, 2), Fraction(1, 3), Fraction(5, 6), Fraction(0)):
        seq = gamma_seq(c, p, digits)
        assert len(seq) == p - 1
        for a, got in enumerate(seq):
            frac = frac_floor(c - Fraction(a, p - 1))[0]
            assert got == gamma_p(frac, p, digits)


def test_gamma_seq_head():
    assert gamma_seq(Fraction(1, 2), 5, 2)[0].residue(2) == 18


def test_quartet_sign():
    assert quartet_sign(5) == -1
    assert quartet_sign(7) == 1
    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        assert quartet_sign(p) == legendre(2, p)
        assert quartet_sign(p) == (-1) ** ((p - 1) // 4 + (p - 1) // 2)


def test_domain_guards():
    with pytest.raises(DomainError):
        gamma_p(Fraction(1, 5), 5, 2)
    with pytest.raises(DomainError):
        gamma_seq(Fraction(1, 7), 7, 2)
    with pytest.raises(DomainError):
        GammaTable(2, 2)
    with pytest.raises(DomainError):
        GammaTable(5, 0)


def test_table_is_cached():
    assert gamma_table(5, 2) is gamma_table(5, 2)
