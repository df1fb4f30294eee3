"""Truncated factorial-ratio and rising-factorial sums modulo p^2.

Each term is p-integral but its factorial building blocks are not, so a
term is never reduced naively: the term-to-term ratio is a small integer
fraction whose denominator stays coprime to p (for p > 3 and the kinds
supported here), and any p-power in the numerator moves into an explicit
valuation counter before reduction mod p^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .padic import DomainError, centered_residue, is_prime

# numerator factors of T(n+1)/T(n) as polynomial coefficients (c, d) for
# (c*n + d), plus the constant denominator multiplying (n+1)^3
_KINDS = {
    "eq1": (((2, 1), (2, 1), (2, 1)), 8),
    "eq2": (((3, 1), (3, 2), (2, 1)), 18),
    "eq3": (((4, 1), (2, 1), (4, 3)), 32),
    "eq4": (((6, 1), (2, 1), (6, 5)), 72),
}


def _check_p(p):
    if p <= 3 or not is_prime(p):
        raise DomainError(f"p = {p} must be a prime greater than 3")


def _ratio_sum(factors, den_const, p: int) -> int:
    """Sum of p terms linked by T(n+1)/T(n) = prod(c*n+d) / (den*(n+1)^3),
    reduced mod p^2 with exact valuation bookkeeping."""
    m = p * p
    if den_const % p == 0:
        raise DomainError("denominator constant divisible by p")
    inv_den = pow(den_const, -1, m)
    unit, val = 1, 0
    total = 1
    for n in range(p - 1):
        for c, d in factors:
            f = c * n + d
            while f % p == 0:
                f //= p
                val += 1
            unit = unit * f % m
        step = n + 1
        # (n+1) <= p-1 here, so the denominator is p-free
        unit = unit * pow(step, -3, m) % m * inv_den % m
        if val < 2:
            total += unit * p ** val
    return total % m


def trunc_sum(kind: str, p: int) -> int:
    """Centered value mod p^2 of one of four factorial-ratio sums over
    n = 0 .. p-1:

        eq1: (2n)!^3 / n!^6 / 64^n        eq2: (3n)!(2n)! / n!^5 / 108^n
        eq3: (4n)! / n!^4 / 256^n         eq4: (6n)! / ((3n)! n!^3) / 1728^n
    """
    _check_p(p)
    if kind not in _KINDS:
        raise DomainError(f"unknown kind {kind!r}")
    factors, den = _KINDS[kind]
    return centered_residue(_ratio_sum(factors, den, p) % (p * p), p, 2)


def trunc_3f2_rising(d: int, p: int) -> int:
    """Centered value mod p^2 of the rising-factorial sum over n = 0..p-1
    of (1/2)_n (1/d)_n ((d-1)/d)_n / n!^3.  Term-by-term equal to the
    matching trunc_sum kind for d in {2, 3, 4, 6}."""
    _check_p(p)
    if d not in (2, 3, 4, 6):
        raise DomainError("d must be one of 2, 3, 4, 6")
    factors = ((2, 1), (d, 1), (d, d - 1))
    return centered_residue(_ratio_sum(factors, 2 * d * d, p) % (p * p), p, 2)


def gamma_sign(p: int) -> int:
    """-1 for p = 5 mod 12, else +1."""
    return -1 if p % 12 == 5 else 1


@dataclass(frozen=True)
class TruncSum:
    kind: str
    p: int
    value: int

    @classmethod
    def compute(cls, kind: str, p: int) -> "TruncSum":
        return cls(kind, p, trunc_sum(kind, p))
