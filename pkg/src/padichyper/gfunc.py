"""Degree-n p-adic hypergeometric kernel and its prime sweeps.

For rational parameter lists A = (a_1..a_n), B = (b_1..b_n) and t in F_p^*
the kernel is

    -1/(p-1) * sum_{a=0}^{p-2} (-1)^(a n) w^-a(t)
        * prod_k (-p)^( -floor(<a_k> - a/(p-1)) - floor(<-b_k> + a/(p-1)) )
            * G(<a_k - a/(p-1)>) / G(<a_k>)
            * G(<-b_k + a/(p-1)>) / G(<-b_k>)

with G the p-adic gamma function, w the Teichmuller character and <.> the
fractional part.  Everything except the w^-a(t) twist is independent of t,
so a sweep over all t shares one cached factor list and costs O(p) per
argument after an O(p^2) build.

Precision: each summand is a unit times p^E with E >= -(number of
non-integral b_k), so carrying that many extra gamma digits returns the
value to the requested absolute precision exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .padic import (DomainError, PadicNum, PrecisionError, char_value,
                    frac_floor, is_prime)
from .pgamma import gamma_p, gamma_seq_units


@dataclass(frozen=True)
class GParams:
    """Upper and lower rational parameter tuples of equal arity."""

    upper: tuple
    lower: tuple

    @classmethod
    def of(cls, upper, lower) -> "GParams":
        up = tuple(Fraction(x) for x in upper)
        lo = tuple(Fraction(x) for x in lower)
        if len(up) != len(lo) or not up:
            raise DomainError("parameter lists must have equal positive length")
        return cls(up, lo)

    @property
    def arity(self) -> int:
        return len(self.upper)

    def validate(self, p: int):
        for x in self.upper + self.lower:
            if x.denominator % p == 0:
                raise DomainError(f"parameter {x} is not a {p}-adic integer")

    def __str__(self):
        return "[%s; %s]" % (",".join(map(str, self.upper)),
                             ",".join(map(str, self.lower)))


def _check_prime(p: int):
    if p < 3 or not is_prime(p):
        raise DomainError(f"p = {p} must be an odd prime")


def eval_G(params: GParams, t: int, p: int, digits: int) -> PadicNum:
    """Single evaluation of the kernel, straight from the definition.

    Independent of the sweep path: fractional parts and floors are done in
    Fraction arithmetic and each gamma value is a fresh point query.
    """
    _check_prime(p)
    params.validate(p)
    if t % p == 0:
        raise DomainError("argument must be a unit mod p")
    n = params.arity
    fas = [frac_floor(a)[0] for a in params.upper]
    fbs = [frac_floor(-b)[0] for b in params.lower]
    shift = sum(1 for fb in fbs if fb != 0)
    gd = digits + shift
    inv_a0 = [gamma_p(fa, p, gd).inverse() for fa in fas]
    inv_b0 = [gamma_p(fb, p, gd).inverse() for fb in fbs]
    total = PadicNum.zero(p)
    for a in range(p - 1):
        f = Fraction(a, p - 1)
        term = char_value(a, t, p, gd)
        if a * n % 2:
            term = -term
        for k in range(n):
            fr1, fl1 = frac_floor(fas[k] - f)
            fr2, fl2 = frac_floor(fbs[k] + f)
            e = -fl1 - fl2
            term = term * gamma_p(fr1, p, gd) * inv_a0[k] \
                        * gamma_p(fr2, p, gd) * inv_b0[k]
            if e % 2:
                term = -term
            term = term._shift(e)
        total = total + term
    out = total * PadicNum.from_int(1 - p, p, gd).inverse()
    if out.abs_prec < digits:
        raise PrecisionError(f"result certified only mod p^{out.abs_prec}")
    return out


class GFactorCache:
    """The t-independent part of every summand, as raw residues.

    entries[a] is the full signed summand except for the w^-a(t) twist,
    scaled by p^shift so that it is an ordinary integer mod p^gdigits.
    Summing entries[a] * w^-a(t), scaling by -1/(p-1) and unscaling the
    p^shift reproduces eval_G for every t.
    """

    def __init__(self, params: GParams, p: int, digits: int):
        _check_prime(p)
        params.validate(p)
        self.p = p
        self.digits = digits
        self.arity = n = params.arity
        fas = [frac_floor(a)[0] for a in params.upper]
        fbs = [frac_floor(-b)[0] for b in params.lower]
        self.shift = sum(1 for fb in fbs if fb != 0)
        self.gdigits = gd = digits + self.shift
        self.modulus = m = p ** gd
        cols = []
        for fa, fb in zip(fas, fbs):
            au = gamma_seq_units(fa, p, gd)
            bu = gamma_seq_units(fb, p, gd)
            cols.append((fa.numerator * (p - 1), fa.denominator,
                         fb.denominator,
                         (fb.denominator - fb.numerator) * (p - 1),
                         au, pow(au[0], -1, m), bu, pow(bu[0], -1, m)))
        pm1 = p - 1
        entries = []
        for a in range(pm1):
            u = 1
            e_tot = 0
            for ua_p, va, vb, gap, au, ia0, bu, ib0 in cols:
                if a * va > ua_p:
                    e_tot += 1
                if a * vb >= gap:  # floor(<-b_k> + a/(p-1)) reached 1
                    e_tot -= 1
                u = u * au[a] % m * ia0 % m * bu[pm1 - a if a else 0] % m * ib0 % m
            c = u * p ** (e_tot + self.shift) % m
            if (a * n + e_tot) % 2:
                c = (m - c) % m
            entries.append(c)
        self.entries = entries
        self._neg_inv_pm1 = (-pow(pm1, -1, m)) % m

    def value_at(self, t: int) -> PadicNum:
        """Kernel value at a unit t, via the cached factors."""
        p, m = self.p, self.modulus
        if t % p == 0:
            raise DomainError("argument must be a unit mod p")
        w = pow(t % m, p ** (self.gdigits - 1), m)
        wt = pow(w, -1, m)
        s = 0
        pw = 1
        for c in self.entries:
            s += c * pw
            pw = pw * wt % m
        r = s % m * self._neg_inv_pm1 % m
        return PadicNum.from_residue(r, p, self.gdigits)._shift(-self.shift)


def eval_G_sweep(params: GParams, p: int, digits: int) -> dict[int, PadicNum]:
    """Kernel values at every t in F_p^*, keyed by t, in ascending order."""
    cache = GFactorCache(params, p, digits)
    return {t: cache.value_at(t) for t in range(1, p)}
