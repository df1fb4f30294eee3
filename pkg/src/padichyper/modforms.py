"""q-expansions of three weight-3 eta-product newforms and the quadratic
form closed form for their prime coefficients.

Series are plain integer coefficient lists truncated at a hard limit; no
coefficient beyond the limit is ever produced or trusted.  Each product
of the shape prod (1 - q^(m*n)) is expanded sparsely via Euler's
pentagonal number theorem before any dense multiplication happens, so the
three forms at limit 10^4 cost a handful of short convolutions.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .padic import DomainError, legendre


class QSeries:
    """Integer power series in q, truncated above `limit`."""

    def __init__(self, coeffs, limit):
        if limit <= 0:
            raise DomainError("truncation limit must be positive")
        self.limit = limit
        self.coeffs = list(coeffs[:limit + 1])
        self.coeffs += [0] * (limit + 1 - len(self.coeffs))

    @classmethod
    def one(cls, limit):
        return cls([1], limit)

    def __eq__(self, other):
        return isinstance(other, QSeries) and self.coeffs == other.coeffs

    def __getitem__(self, n):
        return self.coeffs[n]

    def __mul__(self, other):
        limit = min(self.limit, other.limit)
        a, b = self.coeffs, other.coeffs
        # iterate the sparser factor's support
        sa = [i for i, v in enumerate(a[:limit + 1]) if v]
        sb = [i for i, v in enumerate(b[:limit + 1]) if v]
        if len(sb) < len(sa):
            a, b, sa, sb = b, a, sb, sa
        out = [0] * (limit + 1)
        for i in sa:
            v = a[i]
            for j in sb:
                if i + j > limit:
                    break
                out[i + j] += v * b[j]
        return QSeries(out, limit)

    def truncate(self, limit):
        return QSeries(self.coeffs, limit)

    def shift(self, k):
        """Multiply by q^k."""
        return QSeries([0] * k + self.coeffs, self.limit)


def pentagonal(scale: int, limit: int) -> QSeries:
    """prod_{n>=1} (1 - q^(scale*n)) via the pentagonal number theorem."""
    if limit <= 0:
        raise DomainError("truncation limit must be positive")
    out = [0] * (limit + 1)
    out[0] = 1
    k = 1
    while True:
        g1 = scale * k * (3 * k - 1) // 2
        g2 = scale * k * (3 * k + 1) // 2
        if g1 > limit:
            break
        sign = -1 if k % 2 else 1
        out[g1] += sign
        if g2 <= limit:
            out[g2] += sign
        k += 1
    return QSeries(out, limit)


def eta_factor(scale: int, exponent: int, limit: int) -> QSeries:
    """prod (1 - q^(scale*n))^exponent, exponent >= 0."""
    if limit <= 0:
        raise DomainError("truncation limit must be positive")
    base = pentagonal(scale, limit)
    out = QSeries.one(limit)
    for _ in range(exponent):
        out = out * base
    return out


_FORM_FACTORS = {
    "a": ((4, 6),),
    "b": ((6, 3), (2, 3)),
    "c": ((8, 2), (4, 1), (2, 1), (1, 2)),
}


@lru_cache(maxsize=8)
def newform_coeffs(which: str, limit: int) -> tuple[int, ...]:
    """Coefficient list (index = exponent) of one of the three newforms:

        a: eta(4z)^6        b: eta(6z)^3 eta(2z)^3
        c: eta(8z)^2 eta(4z) eta(2z) eta(z)^2

    The eta prefactors q^(1/24) always combine to a single leading q, so
    entry 1 is 1 and entry 0 is 0.
    """
    if which not in _FORM_FACTORS:
        raise DomainError(f"unknown form {which!r}")
    if limit < 2:
        raise DomainError("limit must be at least 2")
    prod = QSeries.one(limit - 1)
    for scale, exponent in _FORM_FACTORS[which]:
        prod = prod * eta_factor(scale, exponent, limit - 1)
    return (0, *prod.coeffs)


def cornacchia(m: int, p: int) -> tuple[int, int] | None:
    """A representation p = x^2 + m*y^2 with x, y > 0, or None.

    For m = 1 the representative with x odd is returned (for p = 2 or
    p congruent 3 mod 4 there is none).  Bounded exhaustive search: exact
    and instant at the prime sizes used here.
    """
    if m % p == 0:
        raise DomainError("p must not divide m")
    for y in range(1, isqrt(p // m) + 1):
        r = p - m * y * y
        if r <= 0:
            break
        x = isqrt(r)
        if x >= 1 and x * x == r:
            if m == 1 and x % 2 == 0:
                if y % 2:
                    return (y, x)
                continue
            return (x, y)
    return None


def phi_m(m: int, p: int) -> int:
    """Prime coefficient of the level-4m form: 0 when -m is a nonresidue,
    else 4a^2 - 2p for p = a^2 + m*b^2.  Supported m: 2, 3, 4."""
    if m not in (2, 3, 4):
        raise DomainError("m must be 2, 3, or 4")
    if legendre(-m, p) == -1:
        return 0
    rep = cornacchia(m, p)
    assert rep is not None
    return 4 * rep[0] * rep[0] - 2 * p
