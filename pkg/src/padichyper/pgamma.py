"""Morita's p-adic gamma function at fixed precision.

For a nonnegative integer r the function is (-1)^r times the product of
the integers below r that are prime to p; it extends continuously to Z_p,
and the value mod p^digits only depends on the argument mod p^digits.  A
full value table of size p^digits is too large once digits reaches 3, so
GammaTable keeps one running product per block of p consecutive integers:
p^(digits-1) entries, and a point query finishes the remaining partial
block with a single C-level product of fewer than p integers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import prod

from .padic import DomainError, PadicNum, frac_floor


class GammaTable:
    """Block prefix products of j prime to p, modulo p^digits."""

    def __init__(self, p: int, digits: int):
        if p < 3 or digits < 1:
            raise DomainError("need an odd prime and at least one digit")
        self.p = p
        self.digits = digits
        self.modulus = m = p ** digits
        nblocks = p ** (digits - 1)
        pref = [1] * (nblocks + 1)
        acc = 1
        for k in range(1, nblocks + 1):
            # the multiple of p at the block edge is excluded by the range
            acc = acc * (prod(range((k - 1) * p + 1, k * p)) % m) % m
            pref[k] = acc
        self._pref = pref

    def unit_at(self, r: int) -> int:
        """Residue of gamma at the integer representative r in [0, p^digits)."""
        k, s = divmod(r, self.p)
        v = self._pref[k]
        if s > 1:
            v = v * (prod(range(k * self.p + 1, r)) % self.modulus) % self.modulus
        if r & 1:
            v = self.modulus - v
        return v % self.modulus


@lru_cache(maxsize=48)
def gamma_table(p: int, digits: int) -> GammaTable:
    return GammaTable(p, digits)


def _rep(x: Fraction, p: int, m: int) -> int:
    if x.denominator % p == 0:
        raise DomainError(f"{x} is not a {p}-adic integer")
    return x.numerator * pow(x.denominator, -1, m) % m


def gamma_p(x, p: int, digits: int) -> PadicNum:
    """p-adic gamma at a rational x with p-free denominator.

    The value is always a unit; it is computed at the integer representative
    of x mod p^digits, which continuity makes exact at this precision.
    """
    x = Fraction(x)
    t = gamma_table(p, digits)
    return PadicNum(p, t.unit_at(_rep(x, p, t.modulus)), 0, digits)


def gamma_seq_units(c, p: int, digits: int) -> list[int]:
    """Raw residues of gamma at <c - a/(p-1)> for a = 0 .. p-2.

    The representatives mod p^digits of that argument progression differ by
    a fixed step plus an occasional +1 when the fractional part wraps, so
    the whole list costs one table query per entry and no rational
    arithmetic in the loop.
    """
    t = gamma_table(p, digits)
    m = t.modulus
    fc, _ = frac_floor(Fraction(c))
    u, v = fc.numerator, fc.denominator
    if v % p == 0:
        raise DomainError(f"{c} is not a {p}-adic integer")
    rep0 = u * pow(v, -1, m) % m
    w = pow(p - 1, -1, m)
    up = u * (p - 1)
    out = []
    for a in range(p - 1):
        wrap = 1 if a * v > up else 0
        out.append(t.unit_at((rep0 - a * w + wrap) % m))
    return out


def gamma_seq(c, p: int, digits: int) -> list[PadicNum]:
    """PadicNum version of gamma_seq_units (entry a is gamma(<c - a/(p-1)>))."""
    return [PadicNum(p, u, 0, digits) for u in gamma_seq_units(c, p, digits)]


def quartet_sign(p: int) -> int:
    """Product gamma(1/4)gamma(3/4)gamma(1/2)^2, which is +-1.

    Equals (-1)^(floor((p-1)/4) + (p-1)/2); callers can also get it as the
    quadratic residue symbol of 2.
    """
    g = gamma_p(Fraction(1, 4), p, 1) * gamma_p(Fraction(3, 4), p, 1) \
        * gamma_p(Fraction(1, 2), p, 1) ** 2
    s = g.centered(1)
    if s not in (1, -1):
        raise ArithmeticError("quartet product is not a sign")
    return s
