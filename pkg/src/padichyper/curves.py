"""Elliptic curves over F_p: model reduction, Frobenius traces, twists.

Curves are held in long Weierstrass form with coefficients reduced mod p.
Traces come from the quadratic-character sum over x, which is exact and
fast enough for the prime ranges this package sweeps (p up to a few
thousand).
"""

from __future__ import annotations

from dataclasses import dataclass

from .padic import DomainError, legendre


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1*xy + a3*y = x^3 + a2*x^2 + a4*x + a6."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int


def reduce_to_even_form(curve: WeierstrassCurve, p: int) -> WeierstrassCurve:
    """Complete the square in y: returns an isomorphic model with a1=a3=0.

    The cross terms fold into b2 = a1^2 + 4*a2, b4 = 2*a4 + a1*a3,
    b6 = a3^2 + 4*a6 and the result is y^2 = x^3 + (b2/4)x^2 + (b4/2)x
    + (b6/4).  The divisions force p > 3.
    """
    if p <= 3:
        raise DomainError("reduction divides by 2 and 4: need p > 3")
    b2 = curve.a1 * curve.a1 + 4 * curve.a2
    b4 = 2 * curve.a4 + curve.a1 * curve.a3
    b6 = curve.a3 * curve.a3 + 4 * curve.a6
    i4 = pow(4, -1, p)
    return WeierstrassCurve(0, b2 * i4 % p, 0, b4 * i4 * 2 % p, b6 * i4 % p)


def cubic_disc(a: int, b: int, c: int, p: int) -> int:
    """Discriminant of x^3 + a*x^2 + b*x + c mod p."""
    return (18 * a * b * c - 4 * a ** 3 * c + a * a * b * b
            - 4 * b ** 3 - 27 * c * c) % p


def legendre_table(p: int) -> list[int]:
    """lt[v] = quadratic character of v mod p."""
    lt = [-1] * p
    lt[0] = 0
    for x in range(1, p):
        lt[x * x % p] = 1
    return lt


def ap(curve: WeierstrassCurve, p: int, lt: list[int] | None = None) -> int:
    """Trace of Frobenius p + 1 - #E(F_p), by summing the quadratic
    character of the reduced cubic over all x."""
    red = reduce_to_even_form(curve, p)
    a, b, c = red.a2, red.a4, red.a6
    if cubic_disc(a, b, c, p) == 0:
        raise DomainError("singular curve")
    if lt is None:
        lt = legendre_table(p)
    s = 0
    for x in range(p):
        s += lt[(((x + a) * x + b) * x + c) % p]
    assert s * s <= 4 * p
    return -s


def quadratic_twist(curve: WeierstrassCurve, d: int, p: int) -> WeierstrassCurve:
    """Twist y^2 = x^3 + a*x^2 + b*x + c by d: scales (a, b, c) by
    (d, d^2, d^3).  Trace relation: ap(E) = legendre(d, p) * ap(twist)."""
    if curve.a1 % p or curve.a3 % p:
        raise DomainError("twist needs the even form a1 = a3 = 0")
    if d % p == 0:
        raise DomainError("twist factor must be nonzero mod p")
    return WeierstrassCurve(0, d * curve.a2 % p,
                            0, d * d * curve.a4 % p,
                            d ** 3 * curve.a6 % p)


def three_torsion_curve(t: int, p: int) -> WeierstrassCurve:
    """The family y^2 + 3xy + t*y = x^3 (nonsingular for t != 0, 1)."""
    return WeierstrassCurve(3, 0, t % p, 0, 0)


def twist_family_relation(p: int) -> bool:
    """True iff ap at parameter t matches legendre(-3, p) times ap at 1-t
    across the whole family y^2 + 3xy + t*y = x^3, t != 0, 1."""
    lt = legendre_table(p)
    s = legendre(-3, p)
    traces = {t: ap(three_torsion_curve(t, p), p, lt) for t in range(2, p)}
    return all(traces[t] == s * traces[(1 - t) % p] for t in range(2, p))
