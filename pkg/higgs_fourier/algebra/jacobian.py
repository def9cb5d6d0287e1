"""
The Jacobian as degree-0 divisor classes in Mumford form (u, v).

A class (u, v) stands for D(u, v) - (deg u)*inf where D(u, v) is the effective
divisor of the points (x0, v(x0)) over the roots x0 of u. Composition and
reduction follow Cantor.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Iterator, Union

from ..errors import IrrationalSupport, NonzeroDegree
from .arith import Polynomial, poly_xgcd
from .curve import INFINITY, Divisor, HyperellipticCurve, Place, random_place

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReducedDivisor:
    u: Polynomial
    v: Polynomial

    @property
    def degree(self) -> int:
        return self.u.degree

    def is_identity(self) -> bool:
        return self.u.degree == 0

    def as_dict(self) -> dict:
        return {"u": list(self.u.coeffs), "v": list(self.v.coeffs)}

    def __repr__(self):
        return f"<{self.u!r}, {self.v!r}>"


def identity(c: HyperellipticCurve) -> ReducedDivisor:
    return ReducedDivisor(Polynomial.constant(1, c.p), Polynomial.zero(c.p))


def is_reduced(c: HyperellipticCurve, xi: ReducedDivisor) -> bool:
    u, v = xi.u, xi.v
    return (
        u.leading == 1
        and u.degree <= c.genus
        and v.degree < u.degree
        and ((v * v - c.f) % u).is_zero()
    )


def _reduce(c: HyperellipticCurve, u: Polynomial, v: Polynomial) -> ReducedDivisor:
    v = v % u
    while u.degree > c.genus:
        u = (c.f - v * v) // u
        v = (-v) % u
    u_monic = u.monic()
    return ReducedDivisor(u_monic, v % u_monic)


def cantor_add(c: HyperellipticCurve, a: ReducedDivisor, b: ReducedDivisor) -> ReducedDivisor:
    """
    Sum of two classes in Mumford form.

    Args:
        c: The curve.
        a: A reduced divisor on c.
        b: A reduced divisor on c.

    Returns:
        The reduced representative of a + b; the identity is (1, 0).
    """
    u1, v1, u2, v2 = a.u, a.v, b.u, b.v
    # Composition: d = gcd(u1, u2, v1 + v2) = s1 u1 + s2 u2 + s3 (v1 + v2)
    d1, e1, e2 = poly_xgcd(u1, u2)
    d, c1, c2 = poly_xgcd(d1, v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2) // (d * d)
    v = ((s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + c.f)) // d) % u
    return _reduce(c, u, v)


def negate(c: HyperellipticCurve, xi: ReducedDivisor) -> ReducedDivisor:
    return ReducedDivisor(xi.u, (-xi.v) % xi.u)


def scalar_multiply(c: HyperellipticCurve, n: int, xi: ReducedDivisor) -> ReducedDivisor:
    if n < 0:
        return scalar_multiply(c, -n, negate(c, xi))
    result = identity(c)
    base = xi
    while n > 0:
        if n & 1:
            result = cantor_add(c, result, base)
        base = cantor_add(c, base, base)
        n >>= 1
    return result


def point_class(c: HyperellipticCurve, pl: Place) -> ReducedDivisor:
    """The class of pl - inf."""
    if pl.is_infinity:
        return identity(c)
    return ReducedDivisor(Polynomial((-pl.x, 1), c.p), Polynomial.constant(pl.y, c.p))


def from_divisor(c: HyperellipticCurve, D: Divisor) -> ReducedDivisor:
    """Mumford form of the class of a degree-0 divisor."""
    if D.degree != 0:
        raise NonzeroDegree(f"divisor {D!r} has degree {D.degree}")
    result = identity(c)
    for pl, n in D.finite_part().items():
        result = cantor_add(c, result, scalar_multiply(c, n, point_class(c, pl)))
    return result


def to_divisor(c: HyperellipticCurve, xi: ReducedDivisor) -> Divisor:
    """
    The degree-0 divisor D(u, v) - (deg u)*inf of a class.

    Raises:
        IrrationalSupport: If u does not split over F_p.
    """
    roots = xi.u.roots()
    if sum(m for _, m in roots) != xi.u.degree:
        raise IrrationalSupport(f"u = {xi.u!r} does not split over F_{c.p}")
    terms: dict[Place, int] = {INFINITY: -xi.u.degree}
    for x0, m in roots:
        terms[Place.point(x0, xi.v(x0))] = m
    return Divisor(terms)


def _as_rng(seed: Union[int, random.Random]) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_jac_point(c: HyperellipticCurve, seed: Union[int, random.Random]) -> ReducedDivisor:
    """Class of Q1 + Q2 - 2*inf for random rational points Q1, Q2."""
    rng = _as_rng(seed)
    while True:
        q1, q2 = random_place(c, rng), random_place(c, rng)
        xi = cantor_add(c, point_class(c, q1), point_class(c, q2))
        if xi.u.splits():
            return xi


def enumerate_jacobian(c: HyperellipticCurve) -> Iterator[ReducedDivisor]:
    """Every reduced divisor; p^(2g) candidates, small fields only."""
    p = c.p
    for k in range(c.genus + 1):
        for low in itertools.product(range(p), repeat=k):
            u = Polynomial(list(low) + [1], p)
            for vc in itertools.product(range(p), repeat=k):
                v = Polynomial(vc, p)
                if ((v * v - c.f) % u).is_zero():
                    yield ReducedDivisor(u, v)


def jacobian_order(c: HyperellipticCurve) -> int:
    n = sum(1 for _ in enumerate_jacobian(c))
    logger.debug(f"#Jac = {n} for {c!r}")
    return n


def point_order(c: HyperellipticCurve, xi: ReducedDivisor, bound: int) -> int:
    """Smallest n <= bound with n*xi = 0; raises ValueError past the bound."""
    acc = xi
    for n in range(1, bound + 1):
        if acc.is_identity():
            return n
        acc = cantor_add(c, acc, xi)
    raise ValueError(f"order of {xi!r} exceeds {bound}")
