"""Jacobi sums and finite-field hypergeometric sums over F_p.

Multiplicative characters are powers of the Teichmuller character w and are
referred to by their exponent j mod (p-1); j = 0 is the trivial character,
j = (p-1)/2 the quadratic one.  Every character is extended by zero at 0.
Character values live in Z_p at a fixed number of digits, so all sums here
are exact integer arithmetic.

Tables are memoized per (p, digits).  The memo dicts are only touched from
the process that owns them; parallel suite runs confine each prime to one
worker, so no locking is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .padic import DomainError, PadicNum, is_prime
from .pgamma import gamma_p


@dataclass(frozen=True)
class CharIdx:
    """A multiplicative character of F_p^*, stored as exponent mod order."""

    j: int
    order: int

    def __post_init__(self):
        object.__setattr__(self, "j", self.j % self.order)

    @classmethod
    def trivial(cls, p):
        return cls(0, p - 1)

    @classmethod
    def quadratic(cls, p):
        return cls((p - 1) // 2, p - 1)

    def __mul__(self, other):
        return CharIdx(self.j + other.j, self.order)

    def conj(self):
        return CharIdx(-self.j, self.order)

    def __index__(self):
        return self.j


def _idx(x) -> int:
    return x.j if isinstance(x, CharIdx) else int(x)


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root(p: int) -> int:
    qs = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")


class CharTable:
    """Discrete logs and Teichmuller powers for one (p, digits)."""

    def __init__(self, p: int, digits: int):
        if p < 3 or not is_prime(p):
            raise DomainError(f"p = {p} must be an odd prime")
        self.p = p
        self.digits = digits
        self.modulus = m = p ** digits
        g = primitive_root(p)
        dlog = [0] * p
        x = 1
        for k in range(p - 1):
            dlog[x] = k
            x = x * g % p
        wg = pow(g, p ** (digits - 1), m)
        powers = [1] * (p - 1)
        for k in range(1, p - 1):
            powers[k] = powers[k - 1] * wg % m
        self.dlog = dlog
        self.powers = powers

    def chi(self, j: int, x: int) -> int:
        """Residue of w^j(x) for x not divisible by p."""
        return self.powers[j * self.dlog[x % self.p] % (self.p - 1)]


class JacobiTable:
    """Memoized Jacobi sum residues J(w^i, w^j) mod p^digits."""

    def __init__(self, p: int, digits: int):
        self.chars = CharTable(p, digits)
        self._memo: dict[tuple[int, int], int] = {}

    def residue(self, i: int, j: int) -> int:
        p = self.chars.p
        i %= p - 1
        j %= p - 1
        key = (i, j) if i <= j else (j, i)
        r = self._memo.get(key)
        if r is None:
            dlog, powers = self.chars.dlog, self.chars.powers
            i, j = key
            s = 0
            for x in range(2, p):
                s += powers[(i * dlog[x] + j * dlog[p + 1 - x]) % (p - 1)]
            r = self._memo[key] = s % self.chars.modulus
        return r


@lru_cache(maxsize=48)
def jacobi_table(p: int, digits: int) -> JacobiTable:
    return JacobiTable(p, digits)


def jacobi_sum(i, j, p: int, digits: int) -> PadicNum:
    """J(w^i, w^j) = sum over x of w^i(x) w^j(1-x), as a PadicNum."""
    r = jacobi_table(p, digits).residue(_idx(i), _idx(j))
    return PadicNum.from_residue(r, p, digits)


def greene_binom(i, j, p: int, digits: int) -> PadicNum:
    """Normalised binomial (w^i | w^j) = w^j(-1)/p * J(w^i, w^-j).

    Valuation is -1 unless the Jacobi sum picks up a factor p.
    """
    i, j = _idx(i), _idx(j)
    r = jacobi_table(p, digits + 1).residue(i, -j)
    if j % 2:
        r = -r
    return PadicNum.from_residue(r, p, digits + 1)._shift(-1)


def _scaled_binom(jt: JacobiTable, i: int, j: int) -> int:
    """Residue of p * (w^i | w^j): an ordinary integer."""
    p = jt.chars.p
    r = jt.residue(i, -j)
    return jt.chars.modulus - r if j % 2 and r else r


def greene_hyper(upper, lower, x: int, p: int, digits: int) -> PadicNum:
    """Finite-field hypergeometric sum with n+1 upper and n lower characters:

        p/(p-1) * sum_chi binom(A_0 chi, chi) * prod_i binom(A_i chi, B_i chi)
                         * chi(x)

    Zero at x = 0 since every character kills 0.
    """
    up = [_idx(a) for a in upper]
    lo = [_idx(b) for b in lower]
    n = len(lo)
    if len(up) != n + 1:
        raise DomainError("need one more upper than lower character")
    if x % p == 0:
        return PadicNum.zero(p)
    wd = digits + n + 2
    jt = jacobi_table(p, wd)
    ct = jt.chars
    m = ct.modulus
    lx = ct.dlog[x % p]
    s = 0
    for j in range(p - 1):
        pb = _scaled_binom(jt, up[0] + j, j)
        for ai, bi in zip(up[1:], lo):
            pb = pb * _scaled_binom(jt, ai + j, bi + j) % m
        s += pb * ct.powers[j * lx % (p - 1)]
    r = s % m * pow(p - 1, -1, m) % m
    return PadicNum.from_residue(r, p, wd)._shift(-n)


def _divisor_jacobi(jt: JacobiTable, up, lo) -> int:
    m = jt.chars.modulus
    r = 1
    for ai, bi in zip(up, lo):
        r = r * jt.residue(ai, bi - ai) % m
    return r


def period_hyper(upper, lower, x: int, p: int, digits: int) -> PadicNum:
    """Period-normalised variant: delta(x) * prod J(A_i, conj(A_i)B_i) plus
    p^n times the sign prod A_iB_i(-1) times the hypergeometric sum."""
    up = [_idx(a) for a in upper]
    lo = [_idx(b) for b in lower]
    n = len(lo)
    wd = digits + n + 2
    jt = jacobi_table(p, wd)
    if x % p == 0:
        return PadicNum.from_residue(_divisor_jacobi(jt, up[1:], lo), p, wd)
    f = greene_hyper(upper, lower, x, p, digits)
    sign = -1 if (sum(up[1:]) + sum(lo)) % 2 else 1
    return (f * sign)._shift(n)


def normalized_period_hyper(upper, lower, x: int, p: int, digits: int) -> PadicNum:
    """period_hyper divided by its product of Jacobi sums."""
    up = [_idx(a) for a in upper]
    lo = [_idx(b) for b in lower]
    n = len(lo)
    wd = digits + n + 2
    jt = jacobi_table(p, wd)
    d = PadicNum.from_residue(_divisor_jacobi(jt, up[1:], lo), p, wd)
    if d.is_zero_like:
        raise DomainError("division by a vanishing Jacobi sum product")
    return period_hyper(upper, lower, x, p, digits) * d.inverse()


def jacobi_gamma_sides(a: int, b: int, p: int, digits: int):
    """Both sides of the Jacobi-sum / gamma-quotient identity

        J(w^-a, w^-b) = -(-p)^e * G(<a/(p-1)>) G(<b/(p-1)>) / G(<(a+b)/(p-1)>)

    where e in {0,1} is the carry of the fractional parts.  Needs a, b and
    a+b all nonzero mod p-1.  Returns (lhs, rhs) as PadicNums.
    """
    pm1 = p - 1
    a %= pm1
    b %= pm1
    if a == 0 or b == 0 or (a + b) % pm1 == 0:
        raise DomainError("indices and their sum must be nontrivial")
    lhs = jacobi_sum(-a, -b, p, digits)
    e = (a + b) // pm1
    g = gamma_p(Fraction(a, pm1), p, digits) \
        * gamma_p(Fraction(b, pm1), p, digits) \
        * gamma_p(Fraction((a + b) % pm1, pm1), p, digits).inverse()
    rhs = (g * (1 if e % 2 else -1))._shift(e)
    return lhs, rhs


def jacobi_gamma_crosscheck(a: int, b: int, p: int, digits: int) -> bool:
    lhs, rhs = jacobi_gamma_sides(a, b, p, digits)
    return lhs.eq_mod(rhs, digits)
