"""
Odd-degree hyperelliptic curves y^2 = f(x) over F_p.

Places are the finite rational points plus the single place at infinity.
Valuations and values at finite places come from truncated power-series
expansions in a local parameter: x - x0 at ordinary points, y at Weierstrass
points. At infinity the orders of x and y have different parity, so the order
of a + y*b is read off from degrees alone.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence, Union

from ..errors import (
    BadDegree,
    IrrationalSupport,
    NoRationalFibre,
    NotSquarefree,
    PoleAtPlace,
    ZeroDifferential,
    ZeroFunction,
)
from .arith import (
    CurveFunction,
    FieldElement,
    Polynomial,
    PrimeField,
    inverse_mod,
    poly_gcd,
)

logger = logging.getLogger(__name__)

Series = list[int]


@dataclass(frozen=True, order=True)
class Place:
    """A rational point (x, y) of the curve, or the place at infinity.

    Finite places sort by coordinates; infinity sorts last.
    """
    at_infinity: bool
    x: int = 0
    y: int = 0

    @classmethod
    def point(cls, x: int, y: int) -> "Place":
        return cls(False, x, y)

    @property
    def is_infinity(self) -> bool:
        return self.at_infinity

    def __repr__(self):
        return "inf" if self.at_infinity else f"({self.x},{self.y})"


INFINITY = Place(True)


class Divisor:
    """A finite formal sum of places with integer multiplicities."""
    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[Place, int], Iterable[tuple[Place, int]], None] = None):
        acc: dict[Place, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for place, n in items:
            acc[place] = acc.get(place, 0) + int(n)
        self._terms = tuple(sorted((pl, n) for pl, n in acc.items() if n != 0))

    @classmethod
    def zero(cls) -> "Divisor":
        return cls()

    @classmethod
    def infinity(cls, n: int) -> "Divisor":
        return cls({INFINITY: n})

    @classmethod
    def place(cls, pl: Place, n: int = 1) -> "Divisor":
        return cls({pl: n})

    def items(self) -> tuple[tuple[Place, int], ...]:
        return self._terms

    def support(self) -> list[Place]:
        return [pl for pl, _ in self._terms]

    def multiplicity(self, pl: Place) -> int:
        for q, n in self._terms:
            if q == pl:
                return n
        return 0

    @property
    def degree(self) -> int:
        return sum(n for _, n in self._terms)

    def finite_part(self) -> "Divisor":
        return Divisor((pl, n) for pl, n in self._terms if not pl.is_infinity)

    def is_effective(self) -> bool:
        return all(n >= 0 for _, n in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(self._terms + other._terms)

    def __neg__(self) -> "Divisor":
        return Divisor((pl, -n) for pl, n in self._terms)

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __mul__(self, k: int) -> "Divisor":
        return Divisor((pl, k * n) for pl, n in self._terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{n}*{pl!r}" for pl, n in self._terms)


@dataclass(frozen=True)
class Differential:
    """The regular differential h(x) dx/y, deg h <= g - 1."""
    h: Polynomial

    def is_zero(self) -> bool:
        return self.h.is_zero()

    def __add__(self, other: "Differential") -> "Differential":
        return Differential(self.h + other.h)

    def __neg__(self) -> "Differential":
        return Differential(-self.h)

    def __sub__(self, other: "Differential") -> "Differential":
        return Differential(self.h - other.h)

    def scale(self, c: int) -> "Differential":
        return Differential(self.h.scale(c))

    def monic(self) -> "Differential":
        return Differential(self.h.monic())

    def ratio(self, f: Polynomial) -> CurveFunction:
        """The function self / (dx/y)."""
        return CurveFunction.from_polynomial(self.h, f)

    def __repr__(self):
        return f"({self.h!r}) dx/y"


class HyperellipticCurve:
    """The curve y^2 = f(x), deg f = 2g + 1 >= 5, f squarefree, over F_p."""

    def __init__(self, p: int, f: Union[Polynomial, Sequence[int]]):
        self.field = PrimeField(p)
        self.p = p
        coeffs = f.coeffs if isinstance(f, Polynomial) else f
        self.f = Polynomial(coeffs, p)
        d = self.f.degree
        if d % 2 == 0 or d < 5:
            raise BadDegree(f"deg f = {d}; need odd degree at least 5")
        if not poly_gcd(self.f, self.f.derivative()).is_constant():
            raise NotSquarefree(f"f = {self.f!r} has a repeated root over F_{p}")
        self.genus = (d - 1) // 2
        self.canonical_divisor = Divisor.infinity(2 * self.genus - 2)

    @property
    def g(self) -> int:
        return self.genus

    @property
    def K(self) -> Divisor:
        return self.canonical_divisor

    @property
    def ident(self) -> str:
        return f"y^2={self.f.coeffs}/F{self.p}"

    def function(self, a=0, b=0) -> CurveFunction:
        return CurveFunction(a, b, self.f)

    def constant(self, c: int) -> CurveFunction:
        return CurveFunction.constant(c, self.f)

    def x(self) -> CurveFunction:
        return CurveFunction.x(self.f)

    def y(self) -> CurveFunction:
        return CurveFunction.y(self.f)

    def poly(self, coeffs: Sequence[int]) -> Polynomial:
        return Polynomial(coeffs, self.p)

    def is_on_curve(self, pl: Place) -> bool:
        return pl.is_infinity or (pl.y * pl.y - self.f(pl.x)) % self.p == 0

    def is_weierstrass(self, pl: Place) -> bool:
        return not pl.is_infinity and pl.y % self.p == 0

    def places_above(self, x0: int) -> list[Place]:
        """Rational places with x = x0; empty when f(x0) is a non-residue."""
        fx = self.f(x0)
        if fx == 0:
            return [Place.point(x0, 0)]
        r = self.field.sqrt(fx)
        if r is None:
            return []
        return sorted([Place.point(x0, r), Place.point(x0, self.p - r)])

    def __eq__(self, other):
        return isinstance(other, HyperellipticCurve) and self.p == other.p and self.f == other.f

    def __hash__(self):
        return hash((self.p, self.f))

    def __repr__(self):
        return f"HyperellipticCurve(y^2 = {self.f!r} over F_{self.p}, g={self.genus})"


def new_curve(p: int, f: Union[Polynomial, Sequence[int]]) -> HyperellipticCurve:
    c = HyperellipticCurve(p, f)
    logger.debug(f"Created {c!r}")
    return c


def rational_points(c: HyperellipticCurve) -> list[Place]:
    points: list[Place] = []
    for x0 in range(c.p):
        points.extend(c.places_above(x0))
    return points


def weierstrass_places(c: HyperellipticCurve) -> list[Place]:
    return [Place.point(r, 0) for r, _ in c.f.roots()]


def random_place(c: HyperellipticCurve, rng: random.Random) -> Place:
    """A uniformly chosen finite rational place.

    Raises:
        NoRationalFibre: If the curve has no finite rational points.
    """
    points = _points_cached(c)
    if not points:
        raise NoRationalFibre(f"{c!r} has no finite rational points over F_{c.p}")
    return points[rng.randrange(len(points))]


@lru_cache(maxsize=32)
def _points_cached(c: HyperellipticCurve) -> tuple[Place, ...]:
    return tuple(rational_points(c))


def canonical_basis(c: HyperellipticCurve) -> list[Differential]:
    return [Differential(Polynomial.monomial(i, c.p)) for i in range(c.genus)]


def local_parameter(c: HyperellipticCurve, pl: Place) -> CurveFunction:
    if pl.is_infinity:
        return c.x() ** c.genus / c.y()
    if c.is_weierstrass(pl):
        return c.y()
    return c.function(Polynomial((-pl.x, 1), c.p))


# Truncated power series, coefficient lists of a fixed length.

def series_mul(a: Series, b: Series, n: int, p: int) -> Series:
    out = [0] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for j in range(min(len(b), n - i)):
                out[i + j] += ai * b[j]
    return [v % p for v in out]


def compose_series(poly: Polynomial, X: Series, n: int, p: int) -> Series:
    """poly(X(t)) truncated to n terms."""
    acc = [0] * n
    for coeff in reversed(poly.coeffs):
        acc = series_mul(acc, X, n, p)
        acc[0] = (acc[0] + coeff) % p
    return acc


def _order(s: Series) -> Optional[int]:
    for k, v in enumerate(s):
        if v:
            return k
    return None


@lru_cache(maxsize=4096)
def local_expansion(c: HyperellipticCurve, pl: Place, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Series of x and y in the local parameter at a finite place, n terms."""
    p = c.p
    if c.is_weierstrass(pl):
        # t = y; x = x0 + z with f(x0 + z) = t^2, z = t^2 / f'(x0) + O(t^4).
        F = c.f.shift(pl.x).coeffs
        inv = inverse_mod(F[1], p)
        z = [0] * n
        for _ in range(n):
            acc = [0] * n
            if n > 2:
                acc[2] = 1
            power = z
            for k in range(2, len(F)):
                power = series_mul(power, z, n, p)
                for i in range(n):
                    acc[i] -= F[k] * power[i]
            z_next = [v * inv % p for v in acc]
            if z_next == z:
                break
            z = z_next
        X = [(pl.x + z[0]) % p] + z[1:]
        Y = [0] * n
        if n > 1:
            Y[1] = 1
        return tuple(X), tuple(Y)
    # t = x - x0; Y^2 = f(x0 + t) solved coefficientwise from Y[0] = y0.
    F = list(c.f.shift(pl.x).coeffs) + [0] * n
    inv2y = inverse_mod(2 * pl.y, p)
    Y = [pl.y % p] + [0] * (n - 1)
    for k in range(1, n):
        s = F[k] - sum(Y[i] * Y[k - i] for i in range(1, k))
        Y[k] = s * inv2y % p
    X = [pl.x % p] + ([1] if n > 1 else []) + [0] * max(n - 2, 0)
    return tuple(X), tuple(Y)


def _numerator_bound(c: HyperellipticCurve, A: Polynomial, B: Polynomial) -> int:
    """Upper bound on the zero order of A + yB at any finite place."""
    return max(2 * A.degree, 2 * c.genus + 1 + 2 * B.degree, 0)


def _local_orders(c: HyperellipticCurve, fn: CurveFunction, pl: Place) -> tuple[int, Series, Series]:
    """(valuation, numerator series, denominator series) at a finite place."""
    A, B, d = fn.common_form()
    n = _numerator_bound(c, A, B) + 2 * d.degree + 2
    X, Y = local_expansion(c, pl, n)
    X, Y = list(X), list(Y)
    numerator = [
        (a + b) % c.p
        for a, b in zip(compose_series(A, X, n, c.p), series_mul(Y, compose_series(B, X, n, c.p), n, c.p))
    ]
    denominator = compose_series(d, X, n, c.p)
    return _order(numerator) - _order(denominator), numerator, denominator


def valuation(c: HyperellipticCurve, fn: CurveFunction, pl: Place) -> int:
    """
    Order of fn at pl.

    Args:
        c: The curve fn lives on.
        fn: A nonzero function.
        pl: A rational place or infinity.

    Returns:
        The order of vanishing, negative for a pole.

    Raises:
        ZeroFunction: If fn is zero.
    """
    if fn.is_zero():
        raise ZeroFunction("valuation of the zero function")
    A, B, d = fn.common_form()
    if pl.is_infinity:
        # x has order -2 and y order -(2g+1); the two parities never cancel
        orders = []
        if not A.is_zero():
            orders.append(-2 * A.degree)
        if not B.is_zero():
            orders.append(-(2 * c.genus + 1) - 2 * B.degree)
        return min(orders) + 2 * d.degree
    # Regular and nonzero at pl: no expansion needed
    if d(pl.x) != 0 and (A(pl.x) + pl.y * B(pl.x)) % c.p != 0:
        return 0
    return _local_orders(c, fn, pl)[0]


def evaluate(c: HyperellipticCurve, fn: CurveFunction, pl: Place) -> FieldElement:
    """
    Value of fn at pl, resolving removable singularities of the (A + yB)/d form.

    At infinity a function of order 0 has deg A = deg d, and its value is
    the ratio of their leading coefficients.

    Raises:
        PoleAtPlace: If fn has a pole at pl.
    """
    if fn.is_zero():
        return c.field.element(0)
    A, B, d = fn.common_form()
    if pl.is_infinity:
        v = valuation(c, fn, pl)
        if v < 0:
            raise PoleAtPlace(f"{fn!r} has a pole of order {-v} at infinity")
        if v > 0:
            return c.field.element(0)
        return c.field.element(A.leading * inverse_mod(d.leading, c.p))
    dx = d(pl.x)
    if dx != 0:
        return c.field.element((A(pl.x) + pl.y * B(pl.x)) * inverse_mod(dx, c.p))
    v, numerator, denominator = _local_orders(c, fn, pl)
    if v < 0:
        raise PoleAtPlace(f"{fn!r} has a pole of order {-v} at {pl!r}")
    if v > 0:
        return c.field.element(0)
    k = _order(denominator)
    return c.field.element(numerator[k] * inverse_mod(denominator[k], c.p))


def principal_divisor(c: HyperellipticCurve, fn: CurveFunction) -> Divisor:
    """div(fn); IrrationalSupport when some zero or pole is not a rational place."""
    if fn.is_zero():
        raise ZeroFunction("divisor of the zero function")
    A, B, d = fn.common_form()
    norm = A * A - c.f * B * B
    candidates = sorted({r for r, _ in norm.roots()} | {r for r, _ in d.roots()})
    terms: dict[Place, int] = {INFINITY: valuation(c, fn, INFINITY)}
    for x0 in candidates:
        for pl in c.places_above(x0):
            terms[pl] = valuation(c, fn, pl)
    D = Divisor(terms)
    if D.degree != 0:
        raise IrrationalSupport(f"div({fn!r}) has support outside the rational places")
    return D


def differential_divisor(c: HyperellipticCurve, w: Differential) -> Divisor:
    if w.is_zero():
        raise ZeroDifferential("divisor of the zero differential")
    return principal_divisor(c, w.ratio(c.f)) + c.K
