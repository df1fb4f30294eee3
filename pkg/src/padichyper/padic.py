"""Exact arithmetic in Z_p (and Q_p) truncated to a fixed number of digits.

Everything here is plain integer arithmetic: a value is a unit times a power
of p, with the unit known modulo p^precision.  No floats anywhere.  Values
are immutable, so they can be shared freely between worker processes.
"""

from __future__ import annotations

from fractions import Fraction
from math import inf, isqrt


class DomainError(ValueError):
    """Input lies outside an operation's mathematical domain."""


class PrecisionError(ArithmeticError):
    """A result cannot be certified to the requested number of digits."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def padic_val(n: int, p: int) -> int:
    """Exponent of p in n.  Requires n != 0."""
    if n == 0:
        raise DomainError("valuation of zero is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def frac_floor(r) -> tuple[Fraction, int]:
    """Split a rational into (fractional part in [0,1), floor)."""
    r = Fraction(r)
    fl = r.numerator // r.denominator
    return r - fl, fl


def legendre(a: int, p: int) -> int:
    """Quadratic residue symbol mod an odd prime: one of -1, 0, 1."""
    a %= p
    if a == 0:
        return 0
    s = pow(a, (p - 1) // 2, p)
    return 1 if s == 1 else -1


def centered_residue(r: int, p: int, digits: int) -> int:
    """Representative of r mod p^digits inside (-p^digits/2, p^digits/2]."""
    m = p ** digits
    r %= m
    return r if 2 * r <= m else r - m


class PadicNum:
    """unit * p^valuation with `precision` known digits of the unit.

    unit == 0 encodes a zero: precision None means exactly zero, otherwise
    the value is only known to vanish modulo p^valuation.
    """

    __slots__ = ("p", "unit", "valuation", "precision")

    def __init__(self, p, unit, valuation, precision):
        self.p = p
        self.unit = unit
        self.valuation = valuation
        self.precision = precision

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p):
        return cls(p, 0, 0, None)

    @classmethod
    def zero_mod(cls, p, abs_prec):
        """A value known only to be divisible by p^abs_prec."""
        return cls(p, 0, abs_prec, 0)

    @classmethod
    def from_int(cls, n, p, digits):
        if digits < 1:
            raise DomainError("need at least one digit")
        if n == 0:
            return cls.zero(p)
        v = padic_val(n, p)
        return cls(p, (n // p ** v) % p ** digits, v, digits)

    @classmethod
    def from_rational(cls, r, p, digits):
        r = Fraction(r)
        if r == 0:
            return cls.zero(p)
        num, den = r.numerator, r.denominator
        v = padic_val(num, p) - padic_val(den, p)
        m = p ** digits
        u = (num // p ** max(0, v)) * pow(den // p ** max(0, -v), -1, m) % m
        return cls(p, u, v, digits)

    @classmethod
    def from_residue(cls, r, p, abs_prec):
        """The value r + O(p^abs_prec), normalised to unit form."""
        m = p ** abs_prec
        r %= m
        if r == 0:
            return cls.zero_mod(p, abs_prec)
        v = padic_val(r, p)
        return cls(p, (r // p ** v) % p ** (abs_prec - v), v, abs_prec - v)

    # -- structure -----------------------------------------------------

    @property
    def is_exact_zero(self):
        return self.unit == 0 and self.precision is None

    @property
    def is_zero_like(self):
        return self.unit == 0

    @property
    def abs_prec(self):
        if self.precision is None:
            return inf
        return self.valuation + self.precision

    def __repr__(self):
        if self.is_exact_zero:
            return f"PadicNum(0, p={self.p})"
        if self.is_zero_like:
            return f"PadicNum(O({self.p}^{self.valuation}))"
        return (f"PadicNum({self.unit}*{self.p}^{self.valuation}"
                f" + O({self.p}^{self.abs_prec}))")

    def __str__(self):
        if self.is_exact_zero:
            return "0"
        if self.is_zero_like:
            return f"O({self.p}^{self.valuation})"
        if self.valuation >= 0:
            return f"{self.centered(self.abs_prec)} + O({self.p}^{self.abs_prec})"
        return (f"{self.unit}*{self.p}^({self.valuation})"
                f" + O({self.p}^{self.abs_prec})")

    def __eq__(self, other):
        if not isinstance(other, PadicNum):
            return NotImplemented
        return (self.p, self.unit, self.valuation, self.precision) == \
               (other.p, other.unit, other.valuation, other.precision)

    def __hash__(self):
        return hash((self.p, self.unit, self.valuation, self.precision))

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PadicNum):
            if other.p != self.p:
                raise DomainError("mixed primes")
            return other
        if isinstance(other, int):
            # exact integers carry unlimited precision into + and *
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, int):
            if o == 0:
                return self
            if self.is_exact_zero:
                return PadicNum.from_int(o, self.p, 1 + padic_val(o, self.p))
            o = PadicNum.from_int(o, self.p, max(1, self.abs_prec - padic_val(o, self.p)))
        if self.is_exact_zero:
            return o
        if o.is_exact_zero:
            return self
        a = min(self.abs_prec, o.abs_prec)
        shift = min(self.valuation, o.valuation, 0)
        if a - shift <= 0:
            return PadicNum.zero_mod(self.p, a)
        m = self.p ** (a - shift)
        r = (self.unit * self.p ** (self.valuation - shift)
             + o.unit * self.p ** (o.valuation - shift)) % m
        out = PadicNum.from_residue(r, self.p, a - shift)
        return out._shift(shift)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero_like:
            return self
        m = self.p ** self.precision
        return PadicNum(self.p, (-self.unit) % m, self.valuation, self.precision)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, int):
            return self + (-o)
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, int):
            # an exact scalar never costs digits
            if o == 0 or self.is_exact_zero:
                return PadicNum.zero(self.p)
            v = padic_val(o, self.p)
            if self.is_zero_like:
                return PadicNum.zero_mod(self.p, self.valuation + v)
            m = self.p ** self.precision
            return PadicNum(self.p, self.unit * (o // self.p ** v) % m,
                            self.valuation + v, self.precision)
        if self.is_exact_zero or o.is_exact_zero:
            return PadicNum.zero(self.p)
        if self.is_zero_like or o.is_zero_like:
            return PadicNum.zero_mod(self.p, self.valuation + o.valuation)
        n = min(self.precision, o.precision)
        m = self.p ** n
        return PadicNum(self.p, self.unit * o.unit % m,
                        self.valuation + o.valuation, n)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero_like:
            raise DomainError("inverse of zero")
        m = self.p ** self.precision
        return PadicNum(self.p, pow(self.unit, -1, m), -self.valuation, self.precision)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, int):
            o = PadicNum.from_int(o, self.p, max(1, self.precision or 1))
        return self * o.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if self.is_zero_like:
            if k == 0:
                raise DomainError("0^0 with zero base")
            return self if self.is_exact_zero else PadicNum.zero_mod(self.p, self.valuation * k)
        m = self.p ** self.precision
        return PadicNum(self.p, pow(self.unit, k, m), self.valuation * k, self.precision)

    def _shift(self, k):
        """Multiply by p^k exactly."""
        if self.is_exact_zero or k == 0:
            return self
        return PadicNum(self.p, self.unit, self.valuation + k, self.precision)

    # -- extraction ----------------------------------------------------

    def residue(self, digits: int) -> int:
        """The value mod p^digits as an integer in [0, p^digits)."""
        if self.is_exact_zero:
            return 0
        if self.abs_prec < digits:
            raise PrecisionError(f"value known mod p^{self.abs_prec}, "
                                 f"requested mod p^{digits}")
        if self.is_zero_like:
            return 0
        if self.valuation < 0:
            raise PrecisionError("negative valuation has no residue")
        return self.unit * self.p ** self.valuation % self.p ** digits

    def centered(self, digits: int) -> int:
        return centered_residue(self.residue(digits), self.p, digits)

    def is_zero_mod(self, digits: int) -> bool:
        if self.is_exact_zero:
            return True
        if self.unit != 0:
            return self.valuation >= digits
        if self.valuation >= digits:
            return True
        raise PrecisionError("cannot certify vanishing at this precision")

    def eq_mod(self, other, digits: int) -> bool:
        return (self - other).is_zero_mod(digits)


def embed_rational(r, p: int, digits: int) -> PadicNum:
    """Embed a rational with p-free denominator (p in the denominator is
    fine too: the valuation just goes negative)."""
    return PadicNum.from_rational(r, p, digits)


def teichmuller(t: int, p: int, digits: int) -> PadicNum:
    """The (p-1)-st root of unity congruent to t mod p.

    Computed as t^(p^(digits-1)) mod p^digits, which Hensel-converges to
    the exact root at this precision.
    """
    if t % p == 0:
        raise DomainError("Teichmuller lift needs a unit argument")
    m = p ** digits
    u = pow(t % m, p ** (digits - 1), m)
    return PadicNum(p, u, 0, digits)


def char_value(a: int, t: int, p: int, digits: int) -> PadicNum:
    """Value at t of the inverse Teichmuller character raised to a.

    Returns the exact zero for t divisible by p (all multiplicative
    characters are extended by zero there).
    """
    if t % p == 0:
        return PadicNum.zero(p)
    m = p ** digits
    u = pow(t % m, p ** (digits - 1), m)
    return PadicNum(p, pow(u, (-a) % (p - 1), m), 0, digits)


def centered_lift(x: PadicNum, digits: int) -> int:
    """Centered representative of x mod p^digits; valuation must be >= 0."""
    return x.centered(digits)
