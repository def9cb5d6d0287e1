"""
Riemann-Roch spaces L(D) on a hyperelliptic curve.

Every element of L(D) is written (A(x) + y*B(x)) / d(x) with d fixed by the
finite poles D allows. Pole order at infinity bounds the monomials x^i and
y*x^j that may occur in A + y*B; zero conditions at finite places become
vanishing of low-order local series coefficients. L(D) is the kernel of that
linear system.

H^1 is never modelled by cocycles: h1(D) = h0(K - D), and maps on H^1 are
transposes of multiplication maps between Serre-dual spaces.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Optional

from ..errors import IrrationalSupport, NoRationalFibre, NotASection
from .arith import (
    CurveFunction,
    Matrix,
    Polynomial,
    RationalFunction,
    Vector,
    kernel_basis,
    solve,
)
from .curve import (
    INFINITY,
    Divisor,
    HyperellipticCurve,
    Place,
    compose_series,
    series_mul,
    local_expansion,
)

logger = logging.getLogger(__name__)

# ("x", i) is x^i, ("y", j) is y*x^j.
Monomial = tuple[str, int]


def pole_order(c: HyperellipticCurve, mono: Monomial) -> int:
    kind, e = mono
    return 2 * e if kind == "x" else 2 * c.genus + 1 + 2 * e


class RRBasis:
    """A basis of L(D), sorted by pole order at infinity."""

    def __init__(
        self,
        curve: HyperellipticCurve,
        divisor: Divisor,
        denominator: Polynomial,
        monomials: tuple[Monomial, ...],
        vectors: tuple[Vector, ...],
    ):
        self.curve = curve
        self.divisor = divisor
        self.denominator = denominator
        self.monomials = monomials
        self.vectors = vectors
        self.basis = tuple(self.combination_of_monomials(v) for v in vectors)
        self._matrix = Matrix.from_columns(vectors, len(monomials), curve.p)

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, i: int) -> CurveFunction:
        return self.basis[i]

    def combination_of_monomials(self, vec: Vector) -> CurveFunction:
        p = self.curve.p
        a = [0] * (max((e for k, e in self.monomials if k == "x"), default=-1) + 1)
        b = [0] * (max((e for k, e in self.monomials if k == "y"), default=-1) + 1)
        for (kind, e), coeff in zip(self.monomials, vec):
            (a if kind == "x" else b)[e] = coeff
        return CurveFunction(
            RationalFunction(Polynomial(a, p), self.denominator),
            RationalFunction(Polynomial(b, p), self.denominator),
            self.curve.f,
        )

    def combination(self, coords: Vector) -> CurveFunction:
        """The function sum coords[k] * basis[k]."""
        if len(coords) != len(self.basis):
            raise ValueError("coordinate vector has the wrong length")
        result = self.curve.constant(0)
        for k, fn in zip(coords, self.basis):
            if k % self.curve.p:
                result = result + fn * k
        return result

    def coordinates(self, fn: CurveFunction) -> Optional[Vector]:
        """Coordinates of fn in this basis, or None when fn is not in L(D)."""
        if not self.basis:
            return () if fn.is_zero() else None
        scaled = fn * CurveFunction.from_polynomial(self.denominator, self.curve.f)
        if not (scaled.a.is_polynomial() and scaled.b.is_polynomial()):
            return None
        A, B = scaled.a.num, scaled.b.num
        index = {mono: k for k, mono in enumerate(self.monomials)}
        vec = [0] * len(self.monomials)
        for kind, poly in (("x", A), ("y", B)):
            for e, coeff in enumerate(poly.coeffs):
                if coeff == 0:
                    continue
                k = index.get((kind, e))
                if k is None:
                    return None
                vec[k] = coeff
        return solve(self._matrix, vec)

    def __repr__(self):
        return f"RRBasis(L({self.divisor!r}), dim={len(self.basis)})"


def _check_places(c: HyperellipticCurve, D: Divisor) -> None:
    for pl in D.support():
        if not c.is_on_curve(pl):
            raise IrrationalSupport(f"{pl!r} is not a rational place of {c!r}")


def _denominator_exponents(c: HyperellipticCurve, D: Divisor) -> dict[int, int]:
    """Exponent of (x - x0) needed in the common denominator."""
    exponents: dict[int, int] = {}
    for pl, n in D.finite_part().items():
        if n <= 0:
            continue
        e = (n + 1) // 2 if c.is_weierstrass(pl) else n
        exponents[pl.x] = max(exponents.get(pl.x, 0), e)
    return exponents


def _monomials(c: HyperellipticCurve, allowance: int) -> list[Monomial]:
    monos: list[Monomial] = [("x", i) for i in range(allowance // 2 + 1)] if allowance >= 0 else []
    top_y = allowance - 2 * c.genus - 1
    if top_y >= 0:
        monos.extend(("y", j) for j in range(top_y // 2 + 1))
    return monos


def _monomial_series(c: HyperellipticCurve, pl: Place, monos: list[Monomial], n: int) -> list[list[int]]:
    X, Y = local_expansion(c, pl, n)
    X, Y = list(X), list(Y)
    out = []
    for kind, e in monos:
        s = compose_series(Polynomial.monomial(e, c.p), X, n, c.p)
        if kind == "y":
            s = series_mul(Y, s, n, c.p)
        out.append(s)
    return out


@lru_cache(maxsize=4096)
def rr_basis(c: HyperellipticCurve, D: Divisor) -> RRBasis:
    """
    Basis of L(D) = {f : div(f) + D >= 0} + {0}.

    Every element is written as (A + y*B)/d with d fixed by the positive
    finite part of D; the numerator ranges over monomials whose pole order at
    infinity fits D, and the vanishing required at finite places becomes
    linear conditions on their local expansions.

    Args:
        c: The curve.
        D: A divisor supported on rational places.

    Returns:
        An RRBasis ordered by increasing pole order at infinity.

    Raises:
        IrrationalSupport: If D has a place that is not on the curve.
    """
    _check_places(c, D)
    # Common denominator clearing the allowed finite poles
    exponents = _denominator_exponents(c, D)
    d = Polynomial.constant(1, c.p)
    for x0, e in sorted(exponents.items()):
        d = d * Polynomial((-x0, 1), c.p) ** e
    allowance = D.multiplicity(INFINITY) + 2 * d.degree
    monos = sorted(_monomials(c, allowance), key=lambda m: -pole_order(c, m))
    if not monos:
        return RRBasis(c, D, d, (), ())

    # One block of conditions per place where d forces extra vanishing
    places = set(D.finite_part().support())
    for x0 in exponents:
        places.update(c.places_above(x0))
    rows: list[list[int]] = []
    for pl in sorted(places):
        e = exponents.get(pl.x, 0)
        v_d = 2 * e if c.is_weierstrass(pl) else e
        required = v_d - D.multiplicity(pl)
        if required <= 0:
            continue
        series = _monomial_series(c, pl, monos, required)
        for k in range(required):
            rows.append([s[k] for s in series])

    if rows:
        kernel = kernel_basis(Matrix(rows, c.p, len(monos)))
    else:
        kernel = [tuple(int(i == j) for j in range(len(monos))) for i in range(len(monos))]
    if not kernel:
        return RRBasis(c, D, d, tuple(monos), ())
    # Rows of the RREF lead with distinct monomials, highest pole order first.
    reduced, pivots = Matrix(kernel, c.p, len(monos)).rref()
    vectors = [reduced.rows[k] for k in range(len(pivots))]
    vectors.sort(key=lambda v: pole_order(c, monos[next(i for i, a in enumerate(v) if a)]))
    logger.debug(f"L({D!r}): {len(monos)} monomials, {len(rows)} conditions, dim {len(vectors)}")
    return RRBasis(c, D, d, tuple(monos), tuple(vectors))


def h0(c: HyperellipticCurve, D: Divisor) -> int:
    return len(rr_basis(c, D))


def h1(c: HyperellipticCurve, D: Divisor) -> int:
    return h0(c, c.K - D)


def is_section(c: HyperellipticCurve, fn: CurveFunction, D: Divisor) -> bool:
    """fn in L(D)."""
    if fn.is_zero():
        return True
    return rr_basis(c, D).coordinates(fn) is not None


def mult_map(c: HyperellipticCurve, s: CurveFunction, source: Divisor, target: Divisor) -> Matrix:
    """Matrix of L(source) -> L(target), fn -> s*fn, in the rr_basis bases."""
    dom, cod = rr_basis(c, source), rr_basis(c, target)
    if s.is_zero():
        return Matrix.zeros(len(cod), len(dom), c.p)
    columns = []
    for fn in dom:
        coords = cod.coordinates(s * fn)
        if coords is None:
            raise NotASection(f"{s!r} does not map L({source!r}) into L({target!r})")
        columns.append(coords)
    return Matrix.from_columns(columns, len(cod), c.p)


def cech_h1(c: HyperellipticCurve, D: Divisor) -> int:
    """h1(D) from the cover by X - inf and X - F, F a rational fibre of x.

    0 -> O(D) -> O(D + n*inf) + O(D + n*F) -> O(D + n*inf + n*F) -> 0 is exact
    and the middle terms have no H^1 for n large, so h1(D) is the corank of
    the difference map on global sections.

    Args:
        c: The curve.
        D: A divisor supported on rational places.

    Returns:
        dim H^1(X, O(D)) computed from the two-set cover.

    Raises:
        NoRationalFibre: If every rational fibre of x meets supp(D), or the
            curve has no finite rational points at all.
    """
    _check_places(c, D)
    support = set(D.support())
    # Find the first fibre x = x0 with rational points away from supp(D)
    fibre: Optional[list[Place]] = None
    for x0 in range(c.p):
        above = c.places_above(x0)
        if above and not support.intersection(above):
            fibre = above
            break
    if fibre is None:
        raise NoRationalFibre(f"no rational fibre of x on {c!r} avoids the support of {D!r}")
    logger.debug(f"Cech cover of {D!r} uses the fibre {fibre!r}")
    F = Divisor((pl, 1) for pl in fibre)
    n = max(2 * c.genus - 1 - D.degree, 0) + 1
    left, right = D + Divisor.infinity(n), D + F * n
    union = left + F * n
    one = c.constant(1)
    incl = Matrix.block(
        [[mult_map(c, one, left, union), mult_map(c, one, right, union)]], c.p
    )
    return h0(c, union) - incl.rank()
