"""
Chart-level reconstruction of a Higgs bundle from its cokernel datum.

On an open affine U = Spec A where the form alpha does not vanish and every
summand of E is trivial, E|_U = A^r and theta / alpha is an r x r matrix u over
A. The A[T]-module presented by T*I + u recovers u as the action of T, and
two covering charts glue through the frame change on their overlap.

Sign convention: with P(T) = T*I + C, the class of T acts on coker P as -C.
"plus" presents u as T*I + u (T acts as -u), "minus" as T*I - u (T acts as u).
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Optional, Sequence

from .algebra import (
    INFINITY,
    CurveFunction,
    Differential,
    Divisor,
    HyperellipticCurve,
    Matrix,
    Place,
    Polynomial,
    evaluate,
    rational_points,
    valuation,
)
from .errors import (
    ChartsDontCover,
    InvariantViolation,
    NotInvertible,
    NotLinearizable,
    NotTrivializable,
    ZeroDifferential,
)
from .higgs import FunctionGrid, HiggsBundle, char_poly_coefficients, invert, matmul

logger = logging.getLogger(__name__)

SIGN_CONVENTIONS = ("plus", "minus")


@dataclass(frozen=True)
class AffineChart:
    """U = X minus the zeros of alpha and either infinity or every Weierstrass place.

    A is the ring of functions regular on U.
    """
    curve: HyperellipticCurve
    form: Differential
    contains_infinity: bool = False

    @property
    def h(self) -> Polynomial:
        return self.form.h

    @property
    def removed(self) -> Polynomial:
        """Polynomial whose roots are the x-coordinates removed from the affine part."""
        return self.curve.f * self.h if self.contains_infinity else self.h

    def contains(self, pl: Place) -> bool:
        if pl.is_infinity:
            return self.contains_infinity
        return self.removed(pl.x) != 0

    def is_regular(self, fn: CurveFunction) -> bool:
        if fn.is_zero():
            return True
        _, _, d = fn.common_form()
        if d.degree > 0 and not ((self.removed ** d.degree) % d).is_zero():
            return False
        return not self.contains_infinity or valuation(self.curve, fn, INFINITY) >= 0

    def is_unit(self, fn: CurveFunction) -> bool:
        return not fn.is_zero() and self.is_regular(fn) and self.is_regular(fn.inverse())

    def frame(self, D: Divisor) -> CurveFunction:
        """A generator t of O(D) on U: div(t) = -D there."""
        c = self.curve
        for pl in D.finite_part().support():
            if self.contains(pl):
                raise NotTrivializable(f"O({D!r}) has support {pl!r} inside the chart")
        if not self.contains_infinity:
            return c.constant(1)
        n = D.multiplicity(INFINITY)
        x0 = c.f.roots()[0][0]
        shifted = c.function(Polynomial((-x0, 1), c.p))
        if n % 2 == 0:
            return shifted ** (n // 2)
        return c.y() * shifted ** ((n - 2 * c.genus - 1) // 2)

    def ratio(self) -> CurveFunction:
        """alpha / (dx/y)."""
        return self.form.ratio(self.curve.f)

    def as_dict(self) -> dict[str, Any]:
        return {"alpha": list(self.h.coeffs), "contains_infinity": self.contains_infinity}


def affine_chart(c: HyperellipticCurve, alpha: Differential) -> AffineChart:
    """U = X - inf - zeros(alpha); for alpha = dx/y this is the whole affine curve."""
    if alpha.is_zero():
        raise ZeroDifferential("a chart needs a nonzero form")
    return AffineChart(c, alpha, False)


def chart_at_infinity(c: HyperellipticCurve, alpha: Differential) -> AffineChart:
    """U = X minus the finite Weierstrass places and zeros of alpha; inf lies in U.

    alpha must not vanish at inf (deg alpha/(dx/y) = g - 1), and f needs a
    rational root to write the frames of O(n*inf).
    """
    if alpha.is_zero():
        raise ZeroDifferential("a chart needs a nonzero form")
    if alpha.h.degree != c.genus - 1:
        raise NotTrivializable(f"{alpha!r} vanishes at infinity")
    if not c.f.roots():
        raise NotTrivializable("f has no rational root to build frames at infinity")
    return AffineChart(c, alpha, True)


@dataclass(frozen=True)
class ModulePresentation:
    """M = A^r with T acting through u, recorded with the frames used."""
    chart: AffineChart
    frames: tuple[CurveFunction, ...]
    u: FunctionGrid

    @property
    def rank(self) -> int:
        return len(self.u)

    def as_dict(self) -> dict[str, Any]:
        return {
            "chart": self.chart.as_dict(),
            "rank": self.rank,
            "frames": [t.as_dict() for t in self.frames],
            "u": [[e.as_dict() for e in row] for row in self.u],
        }


@dataclass(frozen=True)
class RawPresentation:
    """P(T) = sum_k T^k * coefficients[k] over A[T]."""
    chart: AffineChart
    coefficients: tuple[FunctionGrid, ...]

    @property
    def size(self) -> int:
        return len(self.coefficients[0]) if self.coefficients else 0


def cokernel_presentation(c: HyperellipticCurve, H: HiggsBundle, chart: AffineChart) -> ModulePresentation:
    """u_ij = theta_ij * t_j / (t_i * h) in the frames t_i of O(D_i) on U."""
    frames = tuple(chart.frame(D) for D in H.summands)
    h = chart.ratio()
    u = tuple(
        tuple(H.theta(i, j) * frames[j] / (frames[i] * h) for j in range(H.rank))
        for i in range(H.rank)
    )
    for i, j in product(range(H.rank), repeat=2):
        if not chart.is_regular(u[i][j]):
            raise InvariantViolation(f"u[{i}][{j}] = {u[i][j]!r} has a pole on the chart")
    return ModulePresentation(chart, frames, u)


def local_higgs_field(pres: ModulePresentation, u: Optional[Sequence[Sequence[CurveFunction]]] = None) -> FunctionGrid:
    """theta_ij = u_ij * t_i * h / t_j, undoing the chart frames."""
    u = pres.u if u is None else u
    h = pres.chart.ratio()
    t = pres.frames
    r = len(u)
    return tuple(tuple(u[i][j] * t[i] * h / t[j] for j in range(r)) for i in range(r))


def _check_convention(convention: str) -> None:
    if convention not in SIGN_CONVENTIONS:
        raise ValueError(f"sign convention must be one of {SIGN_CONVENTIONS}, got {convention!r}")


def presentation_matrix(pres: ModulePresentation, convention: str = "plus") -> RawPresentation:
    _check_convention(convention)
    c, r = pres.chart.curve, pres.rank
    sign = 1 if convention == "plus" else -1
    constant = tuple(tuple(e * sign for e in row) for row in pres.u)
    linear = tuple(tuple(c.constant(int(i == j)) for j in range(r)) for i in range(r))
    return RawPresentation(pres.chart, (constant, linear))


def perturb(raw: RawPresentation, i: int = 0, j: int = 0, amount: int = 1) -> RawPresentation:
    """Add a constant to one entry of the T^0 coefficient."""
    constant = [list(row) for row in raw.coefficients[0]]
    constant[i][j] = constant[i][j] + amount
    return RawPresentation(raw.chart, (tuple(map(tuple, constant)),) + raw.coefficients[1:])


def _linearize(raw: RawPresentation) -> tuple[FunctionGrid, FunctionGrid]:
    """(L^-1 C, L^-1) for P = T*L + C with L invertible over A."""
    coefficients = list(raw.coefficients)
    while coefficients and all(e.is_zero() for row in coefficients[-1] for e in row):
        coefficients.pop()
    if len(coefficients) != 2:
        raise NotLinearizable(f"presentation has degree {len(coefficients) - 1} in T")
    C, L = coefficients
    c = raw.chart.curve
    try:
        L_inv = invert(L, c)
    except NotInvertible:
        raise NotLinearizable("T-coefficient is singular")
    if not all(raw.chart.is_regular(e) for row in L_inv for e in row):
        raise NotLinearizable("T-coefficient is not invertible over the chart ring")
    return matmul(L_inv, C, c), L_inv


def recover_endomorphism(raw: RawPresentation) -> FunctionGrid:
    """The action of T on coker P(T) in the A-basis of A^r: -L^-1 C."""
    normalized, _ = _linearize(raw)
    return tuple(tuple(-e for e in row) for row in normalized)


def recover_bundle_rank(raw: RawPresentation) -> int:
    _linearize(raw)
    return raw.size


def recover_higgs_field(raw: RawPresentation, convention: str = "plus") -> FunctionGrid:
    """u from the T-action under the chosen sign convention."""
    _check_convention(convention)
    action = recover_endomorphism(raw)
    if convention == "minus":
        return action
    return tuple(tuple(-e for e in row) for row in action)


def spectral_polynomial(pres: ModulePresentation) -> list[CurveFunction]:
    """Coefficients of det(T - u) over A."""
    return char_poly_coefficients(pres.u, pres.chart.curve)


def evaluate_grid(c: HyperellipticCurve, grid: Sequence[Sequence[CurveFunction]], pl: Place) -> Matrix:
    return Matrix([[int(evaluate(c, e, pl)) for e in row] for row in grid], c.p, len(grid[0]))


def chart_points(chart: AffineChart, other: Optional[AffineChart] = None) -> list[Place]:
    """Rational places of U (or of the overlap with other)."""
    places = rational_points(chart.curve) + [INFINITY]
    return [pl for pl in places if chart.contains(pl) and (other is None or other.contains(pl))]


def conjugacy_test(
    u: Sequence[Sequence[CurveFunction]],
    u2: Sequence[Sequence[CurveFunction]],
    chart: AffineChart,
    n_points: int = 20,
    seed: int = 0,
) -> tuple[bool, Optional[Place]]:
    """Equal characteristic polynomials at random points of U; necessary for conjugacy.

    Args:
        u: A square matrix of functions regular on the chart.
        u2: Another matrix of the same size.
        chart: The chart whose rational points are sampled.
        n_points: How many points to compare at.
        seed: Seed for choosing the points.

    Returns:
        (passed, first witness place where they differ).
    """
    c = chart.curve
    points = chart_points(chart)
    rng = random.Random(seed)
    for pl in rng.sample(points, min(n_points, len(points))):
        a, b = evaluate_grid(c, u, pl), evaluate_grid(c, u2, pl)
        if a.characteristic_polynomial() != b.characteristic_polynomial():
            return False, pl
    return True, None


def transition(chart_a: AffineChart, chart_b: AffineChart, pres_a: ModulePresentation, frames_b: Sequence[CurveFunction]) -> FunctionGrid:
    """u in chart B's frames from u in chart A's: (h_A/h_B) G^-1 u^A G, G = diag(t^B / t^A)."""
    ratio = chart_a.ratio() / chart_b.ratio()
    G = [tb / ta for ta, tb in zip(pres_a.frames, frames_b)]
    r = pres_a.rank
    return tuple(
        tuple(ratio * pres_a.u[i][j] * G[j] / G[i] for j in range(r)) for i in range(r)
    )


def covers(chart_a: AffineChart, chart_b: AffineChart) -> bool:
    if not (chart_a.contains_infinity or chart_b.contains_infinity):
        return False
    common = chart_a.removed
    other = chart_b.removed
    while not other.is_zero():
        common, other = other, common % other
    return common.degree == 0


@dataclass
class RoundTrip:
    chart: AffineChart
    presentation: ModulePresentation
    recovered: FunctionGrid
    rank: int
    field_recovered: bool

    @property
    def passed(self) -> bool:
        return self.recovered == self.presentation.u and self.field_recovered

    def as_dict(self) -> dict[str, Any]:
        return {
            "chart": self.chart.as_dict(),
            "rank": self.rank,
            "u_recovered": self.recovered == self.presentation.u,
            "field_recovered": self.field_recovered,
            "pass": self.passed,
        }


def round_trip(
    c: HyperellipticCurve,
    H: HiggsBundle,
    chart: AffineChart,
    convention: str = "plus",
    perturbation: int = 0,
) -> RoundTrip:
    """
    Present H on the chart, optionally perturb one entry, and recover it.

    Args:
        c: The curve.
        H: The Higgs bundle; every summand must be trivial on the chart.
        chart: The affine chart to present on.
        convention: "plus" for T + u, "minus" for T - u.
        perturbation: Constant added to entry (0, 0) of the T^0 coefficient.

    Returns:
        A RoundTrip that passes when both u and theta come back exactly.
    """
    pres = cokernel_presentation(c, H, chart)
    raw = presentation_matrix(pres, convention)
    if perturbation:
        raw = perturb(raw, amount=perturbation)
    recovered = recover_higgs_field(raw, convention)
    # Undo the chart frames and compare with theta itself
    field_ok = local_higgs_field(pres, recovered) == H.field.entries
    return RoundTrip(chart, pres, recovered, recover_bundle_rank(raw), field_ok)


@dataclass
class GlueReport:
    charts: tuple[AffineChart, AffineChart]
    round_trips: tuple[RoundTrip, RoundTrip]
    exact_agreement: bool
    samples: list[tuple[Place, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            all(rt.passed for rt in self.round_trips)
            and self.exact_agreement
            and all(ok for _, ok in self.samples)
        )

    def as_dict(self) -> dict[str, Any]:
        return {
            "charts": [ch.as_dict() for ch in self.charts],
            "round_trips": [rt.as_dict() for rt in self.round_trips],
            "exact_agreement": self.exact_agreement,
            "samples": [{"point": repr(pl), "agree": ok} for pl, ok in self.samples],
            "pass": self.passed,
        }


def glue_check(
    c: HyperellipticCurve,
    H: HiggsBundle,
    chart_a: AffineChart,
    chart_b: AffineChart,
    n_points: int = 10,
    seed: int = 0,
    convention: str = "plus",
) -> GlueReport:
    """Recover u on both charts and compare them on the overlap.

    Identical charts are accepted as the degenerate case; otherwise the
    charts must cover the curve.
    """
    if chart_a != chart_b and not covers(chart_a, chart_b):
        raise ChartsDontCover("the two charts leave a common place uncovered")
    trips = (round_trip(c, H, chart_a, convention), round_trip(c, H, chart_b, convention))
    pres_a = trips[0].presentation
    u_b = trips[1].recovered
    moved = transition(chart_a, chart_b, pres_a, trips[1].presentation.frames)
    report = GlueReport((chart_a, chart_b), trips, moved == u_b)
    overlap = chart_points(chart_a, chart_b)
    rng = random.Random(seed)
    chosen = sorted(rng.sample(overlap, min(n_points, len(overlap))))
    if len(chosen) < n_points:
        logger.warning(f"Overlap has only {len(chosen)} rational points")
    ratio = chart_a.ratio() / chart_b.ratio()
    for pl in chosen:
        G = [int(evaluate(c, tb / ta, pl)) for ta, tb in zip(pres_a.frames, trips[1].presentation.frames)]
        ua = evaluate_grid(c, trips[0].recovered, pl)
        ub = evaluate_grid(c, u_b, pl)
        k = int(evaluate(c, ratio, pl))
        r = H.rank
        expected = [
            [k * ua[i, j] * G[j] * pow(G[i], c.p - 2, c.p) % c.p for j in range(r)] for i in range(r)
        ]
        report.samples.append((pl, Matrix(expected, c.p, r) == ub))
    logger.info(f"Glue check: exact={report.exact_agreement}, {sum(ok for _, ok in report.samples)}/{len(report.samples)} points agree")
    return report
