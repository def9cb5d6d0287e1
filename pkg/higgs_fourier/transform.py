"""
Fiberwise total Fourier transform over Jac(X) x P^g.

The fiber at an interior point (xi, alpha) is H^1 of E(alpha) (x) M_xi. At a
boundary point [alpha] of the hyperplane at infinity it is H^1 of the complex
E -> E (x) omega given by alpha * id, twisted by M_xi. The sheaf itself is
never built; fibers, a P^g fiber computation and the Chow-level numbers
are what gets checked.
"""

from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass, field
from math import comb
from typing import Any, Optional

from .algebra import (
    INFINITY,
    Differential,
    HyperellipticCurve,
    Matrix,
    Polynomial,
    ReducedDivisor,
    canonical_basis,
    evaluate,
    identity,
    local_parameter,
    random_jac_point,
    rr_basis,
    to_divisor,
)
from .errors import EvaluationFailure, NonzeroDegree, PoleAtPlace
from .higgs import (
    HiggsBundle,
    certify_stable,
    characteristic_coefficients,
    is_trivial,
    twist_by_form,
    twist_by_line_bundle,
)
from .hypercoh import complex_of, hypercoh, new_complex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BaseSpacePoint:
    """(xi, alpha) in Jac(X) x U, or (xi, [alpha]) on the boundary P^g - U."""
    xi: ReducedDivisor
    form: Differential
    boundary: bool = False

    def __post_init__(self):
        if self.boundary:
            if self.form.is_zero():
                raise ValueError("boundary points need a nonzero form")
            if self.form.h.leading != 1:
                object.__setattr__(self, "form", self.form.monic())

    def as_dict(self) -> dict[str, Any]:
        return {
            "xi": self.xi.as_dict(),
            "alpha": list(self.form.h.coeffs),
            "boundary": self.boundary,
        }


@dataclass(frozen=True)
class TransformFiber:
    point: BaseSpacePoint
    dims: tuple[int, int, int]
    h1_basis: tuple
    expected: tuple[int, int, int]

    @property
    def passed(self) -> bool:
        return self.dims == self.expected

    def as_dict(self) -> dict[str, Any]:
        h0, h1, h2 = self.dims
        return {"point": self.point.as_dict(), "h0": h0, "h1": h1, "h2": h2, "pass": self.passed}


def expected_dims(c: HyperellipticCurve, rank: int) -> tuple[int, int, int]:
    return 0, (2 * c.genus - 2) * rank, 0


def fiber(c: HyperellipticCurve, H: HiggsBundle, pt: BaseSpacePoint) -> TransformFiber:
    """
    Hypercohomology of the transform complex restricted to one base point.

    Interior points (xi, alpha) use E (x) M_xi with theta + alpha; boundary
    points [alpha : 0] use E (x) M_xi with alpha * id alone.

    Args:
        c: The curve.
        H: A degree-0 Higgs bundle.
        pt: The base point.

    Returns:
        The fiber dims, an H^1 basis and the dims expected under IT(1).

    Raises:
        NonzeroDegree: If H does not have degree 0.
    """
    if H.degree != 0:
        raise NonzeroDegree(f"transform needs degree 0, got {H.degree}")
    if pt.boundary:
        D = to_divisor(c, pt.xi)
        h = pt.form.ratio(c.f)
        zero = c.constant(0)
        entries = [[h if i == j else zero for j in range(H.rank)] for i in range(H.rank)]
        T = new_complex([Di + D for Di in H.summands], entries)
    else:
        T = complex_of(twist_by_line_bundle(twist_by_form(H, pt.form), pt.xi))
    result = hypercoh(c, T)
    return TransformFiber(pt, result.dims, result.h1_basis, expected_dims(c, H.rank))


def _random_form(c: HyperellipticCurve, rng: random.Random, nonzero: bool) -> Differential:
    while True:
        h = Polynomial([rng.randrange(c.p) for _ in range(c.genus)], c.p)
        if not (nonzero and h.is_zero()):
            return Differential(h)


def sample_points(c: HyperellipticCurve, n: int, seed: int, boundary: bool) -> list[BaseSpacePoint]:
    """Deterministic samples; the interior list starts at the origin (0, 0)."""
    rng = random.Random(f"higgs-fourier/{seed}/{'boundary' if boundary else 'interior'}")
    points: list[BaseSpacePoint] = []
    if not boundary and n > 0:
        points.append(BaseSpacePoint(identity(c), Differential(Polynomial.zero(c.p))))
    while len(points) < n:
        xi = random_jac_point(c, rng)
        points.append(BaseSpacePoint(xi, _random_form(c, rng, boundary), boundary))
    return points


@dataclass
class IT1Report:
    curve: str
    rank: int
    seed: int
    certified: bool
    nontrivial: bool
    fibers: list[TransformFiber] = field(default_factory=list)

    @property
    def violations(self) -> list[TransformFiber]:
        return [f for f in self.fibers if not f.passed]

    @property
    def passed(self) -> bool:
        return bool(self.fibers) and not self.violations

    def as_dict(self) -> dict[str, Any]:
        return {
            "curve": self.curve,
            "rank": self.rank,
            "seed": self.seed,
            "certified_stable": self.certified,
            "nontrivial": self.nontrivial,
            "fibers": [f.as_dict() for f in self.fibers],
            "pass": self.passed,
        }


def verify_IT1(c: HyperellipticCurve, H: HiggsBundle, n_samples: int, seed: int) -> IT1Report:
    """Sample n interior and n boundary fibers and check dims (0, (2g-2)r, 0).

    Args:
        c: The curve.
        H: A degree-0 Higgs bundle on c.
        n_samples: Number of interior points, and again of boundary points.
        seed: Seed for the deterministic sampler.

    Returns:
        An IT1Report holding every sampled fiber; it passes only when at
        least one fiber was sampled and none violates the expected dims.

    Raises:
        NonzeroDegree: If H does not have degree 0.
    """
    if H.degree != 0:
        raise NonzeroDegree(
            f"verify_IT1 needs a degree-0 Higgs bundle; the input of rank {H.rank} has degree {H.degree}"
        )
    certified = certify_stable(H)
    report = IT1Report(c.ident, H.rank, seed, certified, not is_trivial(H))
    if not certified:
        logger.warning("Input is not certified stable; vanishing is not expected to hold")
    for boundary in (False, True):
        for pt in sample_points(c, n_samples, seed, boundary):
            fib = fiber(c, H, pt)
            report.fibers.append(fib)
            if not fib.passed:
                level = logging.WARNING if certified else logging.INFO
                logger.log(level, f"IT(1) fails at {pt.as_dict()}: dims {fib.dims}")
    logger.info(
        f"IT(1): {len(report.fibers) - len(report.violations)}/{len(report.fibers)} fibers "
        f"with dims {expected_dims(c, H.rank)}"
    )
    return report


@dataclass(frozen=True)
class Fingerprint:
    curve: str
    seed: int
    samples: tuple[tuple[BaseSpacePoint, tuple[int, int, int]], ...]
    spectral: tuple[tuple[int, ...], ...]

    def as_dict(self) -> dict[str, Any]:
        return {
            "curve": self.curve,
            "seed": self.seed,
            "samples": [{"point": pt.as_dict(), "dims": list(d)} for pt, d in self.samples],
            "spectral": [list(v) for v in self.spectral],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))


def spectral_data(H: HiggsBundle) -> tuple[tuple[int, ...], ...]:
    """Characteristic coefficients as points of L(K) + L(2K) + ... + L(rK)."""
    c = H.curve
    data = []
    for i, coeff in enumerate(characteristic_coefficients(H), start=1):
        coords = rr_basis(c, c.K * i).coordinates(coeff)
        if coords is None:
            raise EvaluationFailure(f"characteristic coefficient {i} is not in L({i}K)")
        data.append(tuple(coords))
    return tuple(data)


def fingerprint(c: HyperellipticCurve, H: HiggsBundle, n_samples: int, seed: int) -> Fingerprint:
    samples = []
    for boundary in (False, True):
        for pt in sample_points(c, n_samples, seed, boundary):
            samples.append((pt, fiber(c, H, pt).dims))
    return Fingerprint(c.ident, seed, tuple(samples), spectral_data(H))


@dataclass
class PgFiberTable:
    genus: int
    rank: int
    evaluation: Matrix
    injective: bool
    fiber_dims: tuple[int, ...]
    table: list[tuple[int, int]]

    @property
    def passed(self) -> bool:
        return self.injective and self.fiber_dims[1] == self.rank * self.genus

    def as_dict(self) -> dict[str, Any]:
        return {
            "genus": self.genus,
            "rank": self.rank,
            "evaluation_rank": self.evaluation.rank(),
            "injective": self.injective,
            "fiber_dims": list(self.fiber_dims),
            "table": [{"p": p, "dim": d} for p, d in self.table],
            "pass": self.passed,
        }


def theta_at_base_point(c: HyperellipticCurve, H: HiggsBundle) -> Matrix:
    """theta(P) at P = inf in the local frames s^-n of O(n inf) and s^-(2g-2) dx/y of omega."""
    s = local_parameter(c, INFINITY)
    r, g = H.rank, c.genus
    n = [D.multiplicity(INFINITY) for D in H.summands]
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            entry = H.theta(i, j) * s ** (n[i] - n[j] + 2 * g - 2)
            try:
                row.append(int(evaluate(c, entry, INFINITY)))
            except PoleAtPlace as e:
                raise EvaluationFailure(f"theta[{i}][{j}] cannot be evaluated at the base point: {e.message}")
        rows.append(row)
    return Matrix(rows, c.p, r)


def form_values_at_base_point(c: HyperellipticCurve) -> list[int]:
    """alpha_i(P) for the basis x^i dx/y in the frame s^-(2g-2) dx/y."""
    s = local_parameter(c, INFINITY)
    scale = s ** (2 * c.genus - 2)
    return [int(evaluate(c, w.ratio(c.f) * scale, INFINITY)) for w in canonical_basis(c)]


def pg_fiber_table(c: HyperellipticCurve, H: HiggsBundle) -> PgFiberTable:
    """The restriction of the transform complex to {P} x P^g and the global table it implies.

    Theta restricted to the fiber is O^r -> O(1)^r with coefficient matrix
    theta(P) on t and alpha_i(P) * id on alpha_i^*. When it is injective the
    fiber complex has cohomology (0, rg, 0, ...).
    """
    r, g, p = H.rank, c.genus, c.p
    theta_p = theta_at_base_point(c, H)
    alphas = form_values_at_base_point(c)
    blocks = [[theta_p]] + [[Matrix.identity(r, p).scale(a)] for a in alphas]
    evaluation = Matrix.block(blocks, p)
    rank = evaluation.rank()
    injective = rank == r
    coker = (g + 1) * r - rank
    fiber_dims = (r - rank, coker) + (0,) * (g - 1)
    table = [(k, r * g * comb(g - 1, k - 1)) for k in range(1, g + 1)]
    logger.debug(f"P^g fiber: evaluation {evaluation.shape} of rank {rank}")
    return PgFiberTable(g, r, evaluation, injective, fiber_dims, table)
