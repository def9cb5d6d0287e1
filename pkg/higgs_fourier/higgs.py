"""
Higgs bundles on split bundles E = O(D_1) + ... + O(D_r).

Entry (i, j) of the Higgs field is the component O(D_j) -> O(D_i) (x) omega,
stored as a function through the reference form dx/y, so it lies in
L(K + D_i - D_j).
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from .algebra import (
    CurveFunction,
    Differential,
    Divisor,
    HyperellipticCurve,
    Matrix,
    Place,
    Polynomial,
    ReducedDivisor,
    h0,
    is_section,
    kernel_basis,
    mult_map,
    rational_points,
    rr_basis,
    solve,
    to_divisor,
)
from .algebra.arith import berkowitz
from .algebra.curve import evaluate
from .errors import NotASection, NotInvertible, UnsupportedRank

logger = logging.getLogger(__name__)

FunctionGrid = tuple[tuple[CurveFunction, ...], ...]

COMPANION_CERTIFICATE = "companion form with constant sub-diagonal"


@dataclass(frozen=True)
class SplitBundle:
    summands: tuple[Divisor, ...]

    @property
    def rank(self) -> int:
        return len(self.summands)

    @property
    def degree(self) -> int:
        return sum(D.degree for D in self.summands)

    def twist(self, D: Divisor) -> "SplitBundle":
        return SplitBundle(tuple(Di + D for Di in self.summands))


@dataclass(frozen=True)
class HiggsField:
    entries: FunctionGrid

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: tuple[int, int]) -> CurveFunction:
        i, j = index
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)


@dataclass(frozen=True)
class HiggsBundle:
    """A pair (E, theta). Construction validates every entry as a section.

    certificate records why the pair is known to be stable; operations that
    preserve stability carry it over.
    """
    curve: HyperellipticCurve
    bundle: SplitBundle
    field: HiggsField
    certificate: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        r = self.bundle.rank
        if r == 0 or self.field.rank != r or any(len(row) != r for row in self.field.entries):
            raise ValueError(f"Higgs field shape does not match rank {r}")
        for i, j in product(range(r), repeat=2):
            target = self.entry_divisor(i, j)
            if not is_section(self.curve, self.field[i, j], target):
                raise NotASection(f"theta[{i}][{j}] = {self.field[i, j]!r} is not in L({target!r})")

    @property
    def rank(self) -> int:
        return self.bundle.rank

    @property
    def degree(self) -> int:
        return self.bundle.degree

    @property
    def summands(self) -> tuple[Divisor, ...]:
        return self.bundle.summands

    def theta(self, i: int, j: int) -> CurveFunction:
        return self.field[i, j]

    def entry_divisor(self, i: int, j: int) -> Divisor:
        return self.curve.K + self.summands[i] - self.summands[j]

    def is_nontrivial(self) -> bool:
        return not is_trivial(self)

    def with_field(self, entries: Sequence[Sequence[CurveFunction]], certificate: Optional[str] = None) -> "HiggsBundle":
        return HiggsBundle(self.curve, self.bundle, HiggsField(_grid(entries)), certificate)


def _grid(entries: Sequence[Sequence[CurveFunction]]) -> FunctionGrid:
    return tuple(tuple(row) for row in entries)


def new_higgs_bundle(
    c: HyperellipticCurve,
    summands: Sequence[Divisor],
    entries: Sequence[Sequence[CurveFunction]],
    certificate: Optional[str] = None,
) -> HiggsBundle:
    return HiggsBundle(c, SplitBundle(tuple(summands)), HiggsField(_grid(entries)), certificate)


def companion_section(c: HyperellipticCurve, qs: Sequence[CurveFunction]) -> HiggsBundle:
    """Companion form on sum_i O((r-1-2i)(g-1)*inf) with q_k = qs[k-1] in L(kK).

    Ones sit on the sub-diagonal and the last column is (q_r, ..., q_1), so
    det(T - theta) = T^r - q_1 T^(r-1) - ... - q_r.
    """
    r = len(qs)
    if r < 2:
        raise UnsupportedRank("companion form needs rank at least 2")
    g = c.genus
    summands = [Divisor.infinity((r - 1 - 2 * i) * (g - 1)) for i in range(r)]
    zero, one = c.constant(0), c.constant(1)
    entries = [[zero] * r for _ in range(r)]
    for i in range(r - 1):
        entries[i + 1][i] = one
    for i in range(r):
        entries[i][r - 1] = qs[r - 1 - i]
    return new_higgs_bundle(c, summands, entries, COMPANION_CERTIFICATE)


def hitchin_section(c: HyperellipticCurve, q: CurveFunction) -> HiggsBundle:
    """E = O((g-1)inf) + O(-(g-1)inf), theta = [[0, q], [1, 0]], q in L(2K)."""
    return companion_section(c, (c.constant(0), q))


def trivial_higgs_bundle(c: HyperellipticCurve) -> HiggsBundle:
    return new_higgs_bundle(c, [Divisor.zero()], [[c.constant(0)]])


def is_trivial(H: HiggsBundle) -> bool:
    """Isomorphic to (O_X, 0): rank one, zero field, principal summand."""
    if H.rank != 1 or not H.field.is_zero():
        return False
    D = H.summands[0]
    return D.degree == 0 and h0(H.curve, D) == 1


def certify_stable(H: HiggsBundle) -> bool:
    if H.certificate is not None:
        return True
    r, c = H.rank, H.curve
    if r < 2:
        return False
    pattern = tuple(Divisor.infinity((r - 1 - 2 * i) * (c.genus - 1)) for i in range(r))
    if H.summands != pattern:
        return False
    for i, j in product(range(r), repeat=2):
        entry = H.theta(i, j)
        if i == j + 1:
            if not entry.is_constant() or entry.is_zero():
                return False
        elif j != r - 1 and not entry.is_zero():
            return False
    return True


def twist_by_form(H: HiggsBundle, a: Differential) -> HiggsBundle:
    """(E, theta + a * id)."""
    shift = a.ratio(H.curve.f)
    entries = [
        [H.theta(i, j) + shift if i == j else H.theta(i, j) for j in range(H.rank)]
        for i in range(H.rank)
    ]
    return H.with_field(entries, H.certificate)


def twist_by_line_bundle(H: HiggsBundle, xi: ReducedDivisor) -> HiggsBundle:
    """(E (x) M_xi, theta); the entry spaces do not change."""
    D = to_divisor(H.curve, xi)
    return HiggsBundle(H.curve, H.bundle.twist(D), H.field, H.certificate)


def scale_field(H: HiggsBundle, k: int) -> HiggsBundle:
    """(E, k*theta). Same invariant subbundles; a different Higgs bundle unless k = 1."""
    entries = [[H.theta(i, j) * k for j in range(H.rank)] for i in range(H.rank)]
    certificate = H.certificate if k % H.curve.p else None
    return H.with_field(entries, certificate)


def matmul(a: Sequence[Sequence[CurveFunction]], b: Sequence[Sequence[CurveFunction]], c: HyperellipticCurve) -> FunctionGrid:
    n, m, k = len(a), len(b[0]), len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = c.constant(0)
            for t in range(k):
                if not a[i][t].is_zero() and not b[t][j].is_zero():
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def invert(gmat: Sequence[Sequence[CurveFunction]], c: HyperellipticCurve) -> FunctionGrid:
    """Gauss-Jordan inverse over the function field."""
    n = len(gmat)
    work = [list(row) + [c.constant(int(i == j)) for j in range(n)] for i, row in enumerate(gmat)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if not work[i][col].is_zero()), None)
        if pivot is None:
            raise NotInvertible("gauge matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inverse()
        work[col] = [e * inv for e in work[col]]
        for i in range(n):
            if i != col and not work[i][col].is_zero():
                factor = work[i][col]
                work[i] = [e - factor * w for e, w in zip(work[i], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def gauge_transform(H: HiggsBundle, gmat: Sequence[Sequence[CurveFunction]]) -> HiggsBundle:
    """theta -> g theta g^-1, g an automorphism of E."""
    c, r = H.curve, H.rank
    for i, j in product(range(r), repeat=2):
        if not is_section(c, gmat[i][j], H.summands[i] - H.summands[j]):
            raise NotASection(f"g[{i}][{j}] is not a map O(D_{j}) -> O(D_{i})")
    ginv = invert(gmat, c)
    for i, j in product(range(r), repeat=2):
        if not is_section(c, ginv[i][j], H.summands[i] - H.summands[j]):
            raise NotInvertible(f"inverse entry [{i}][{j}] is not a bundle map")
    entries = matmul(matmul(gmat, H.field.entries, c), ginv, c)
    return H.with_field(entries, H.certificate)


def random_gauge(H: HiggsBundle, rng: random.Random) -> FunctionGrid:
    """A random automorphism: diagonal scalars times a unitriangular matrix."""
    c, r, p = H.curve, H.rank, H.curve.p
    upper = rng.random() < 0.5
    entries = []
    for i in range(r):
        row = []
        for j in range(r):
            if i == j:
                row.append(c.constant(rng.randrange(1, p)))
            elif (i < j) == upper:
                space = rr_basis(c, H.summands[i] - H.summands[j])
                coords = tuple(rng.randrange(p) for _ in range(len(space)))
                row.append(space.combination(coords) if coords else c.constant(0))
            else:
                row.append(c.constant(0))
        entries.append(tuple(row))
    return tuple(entries)


def char_poly_coefficients(grid: Sequence[Sequence[CurveFunction]], c: HyperellipticCurve) -> list[CurveFunction]:
    """[c_1, ..., c_r] with det(T - grid) = T^r + c_1 T^(r-1) + ... + c_r.

    Uses the division-free Berkowitz recurrence over the function field, so
    ranks at or above the characteristic are fine.

    Args:
        grid: An r x r matrix of functions on the curve.
        c: The curve the functions live on.

    Returns:
        The r non-leading coefficients, c_1 first.
    """
    return berkowitz(grid, c.constant(0), c.constant(1))[1:]


def characteristic_coefficients(H: HiggsBundle) -> list[CurveFunction]:
    """Coefficients of det(T - theta); the k-th lies in L(kK)."""
    return char_poly_coefficients(H.field.entries, H.curve)


def is_morphism(H: HiggsBundle, F: HiggsBundle, phi: Sequence[Sequence[CurveFunction]]) -> bool:
    """phi: E -> F is a bundle map with eta*phi = phi*theta."""
    c = H.curve
    for i, j in product(range(F.rank), range(H.rank)):
        if not is_section(c, phi[i][j], F.summands[i] - H.summands[j]):
            return False
    return matmul(F.field.entries, phi, c) == matmul(phi, H.field.entries, c)


def higgs_hom_dimension(H: HiggsBundle, F: HiggsBundle) -> int:
    """dim Hom((E, theta), (F, eta)) as the kernel of phi -> eta*phi - phi*theta."""
    c, p = H.curve, H.curve.p
    zero = c.constant(0)
    targets = [(k, l) for k in range(F.rank) for l in range(H.rank)]
    codomain = [rr_basis(c, c.K + F.summands[k] - H.summands[l]) for k, l in targets]
    offsets = [0]
    for space in codomain:
        offsets.append(offsets[-1] + len(space))
    columns = []
    for i, j in targets:
        for fn in rr_basis(c, F.summands[i] - H.summands[j]):
            phi = [[fn if (a, b) == (i, j) else zero for b in range(H.rank)] for a in range(F.rank)]
            left = matmul(F.field.entries, phi, c)
            right = matmul(phi, H.field.entries, c)
            column: list[int] = []
            for (k, l), space in zip(targets, codomain):
                coords = space.coordinates(left[k][l] - right[k][l])
                if coords is None:
                    raise NotASection("commutator left the expected section space")
                column.extend(coords)
            columns.append(column)
    if not columns:
        return 0
    return len(kernel_basis(Matrix.from_columns(columns, offsets[-1], p)))


# Stability

@dataclass(frozen=True)
class InvariantSubbundle:
    divisor: Divisor
    eigenvalue: CurveFunction
    inclusion: tuple[CurveFunction, CurveFunction]
    destabilizing: bool

    def as_dict(self) -> dict:
        return {
            "divisor": repr(self.divisor),
            "degree": self.divisor.degree,
            "eigenvalue": repr(self.eigenvalue),
            "destabilizing": self.destabilizing,
        }


@dataclass
class StabilityReport:
    degree_bound: int
    certified: bool
    invariant: list[InvariantSubbundle]
    candidates_tried: int

    @property
    def destabilizers(self) -> list[InvariantSubbundle]:
        return [s for s in self.invariant if s.destabilizing]

    @property
    def stable_up_to_bound(self) -> bool:
        return not self.destabilizers

    def as_dict(self) -> dict:
        return {
            "degree_bound": self.degree_bound,
            "certified": self.certified,
            "candidates_tried": self.candidates_tried,
            "stable_up_to_bound": self.stable_up_to_bound,
            "invariant": [s.as_dict() for s in self.invariant],
        }


def _quadratic_roots(b: int, c0: int, p: int) -> list[int]:
    """Roots of T^2 + b T + c0 over F_p."""
    return sorted({t for t in range(p) if (t * t + b * t + c0) % p == 0})


def eigenvalue_candidates(H: HiggsBundle) -> list[CurveFunction]:
    """Eigenvalues of a rank-2 Higgs field that are global forms in L(K)."""
    c, p, g = H.curve, H.curve.p, H.curve.genus
    c1, c2 = characteristic_coefficients(H)
    # c1, c2 only have poles at infinity; one place per x-coordinate suffices.
    probes: list[Place] = []
    for pl in rational_points(c):
        if len(probes) == g:
            break
        if all(q.x != pl.x for q in probes):
            probes.append(pl)
    xs = [pl.x for pl in probes]
    vandermonde = Matrix([[pow(x0, i, p) for i in range(g)] for x0 in xs], p, g)
    local_roots = [
        _quadratic_roots(int(evaluate(c, c1, pl)), int(evaluate(c, c2, pl)), p) for pl in probes
    ]
    found: list[CurveFunction] = []
    for values in product(*local_roots):
        coeffs = solve(vandermonde, list(values))
        if coeffs is None:
            continue
        lam = c.function(Polynomial(coeffs, p))
        if (lam * lam + c1 * lam + c2).is_zero() and lam not in found:
            found.append(lam)
    return found


def _candidate_divisors(c: HyperellipticCurve, bound: int, probe_points: Sequence[Place]) -> list[Divisor]:
    out: list[Divisor] = []
    for d in range(-bound, bound + 1):
        out.append(Divisor.infinity(d))
        for pl in probe_points:
            out.append(Divisor.infinity(d - 1) + Divisor.place(pl))
            out.append(Divisor.infinity(d + 1) - Divisor.place(pl))
    return out


def stability_scan(
    H: HiggsBundle,
    degree_bound: int,
    probe_points: Optional[Sequence[Place]] = None,
) -> StabilityReport:
    """Search theta-invariant line subbundles O(A) of a rank-2 Higgs bundle.

    O(A) -> E is (s1, s2) with s_i in L(D_i - A), and invariance means
    theta s = lambda s for an eigenvalue lambda in L(K). Candidates A are
    d*inf and d*inf -+ (P - inf) for |d| <= degree_bound and P among the
    probe points. O(A) destabilizes when 2 deg A >= deg E.
    """
    if H.rank != 2:
        raise UnsupportedRank(f"stability_scan needs rank 2, got {H.rank}")
    c, p = H.curve, H.curve.p
    if probe_points is None:
        probe_points = rational_points(c)[:2]
    certified = certify_stable(H)
    eigenvalues = eigenvalue_candidates(H)
    found: list[InvariantSubbundle] = []
    tried = 0
    for A in _candidate_divisors(c, degree_bound, probe_points):
        for lam in eigenvalues:
            tried += 1
            sources = [H.summands[j] - A for j in range(2)]
            blocks = [
                [
                    mult_map(
                        c,
                        H.theta(i, j) - lam if i == j else H.theta(i, j),
                        sources[j],
                        c.K + H.summands[i] - A,
                    )
                    for j in range(2)
                ]
                for i in range(2)
            ]
            kernel = kernel_basis(Matrix.block(blocks, p))
            if not kernel:
                continue
            vec = kernel[0]
            n0 = h0(c, sources[0])
            s1 = rr_basis(c, sources[0]).combination(vec[:n0]) if n0 else c.constant(0)
            s2 = rr_basis(c, sources[1]).combination(vec[n0:]) if len(vec) > n0 else c.constant(0)
            destabilizing = 2 * A.degree >= H.degree
            found.append(InvariantSubbundle(A, lam, (s1, s2), destabilizing))
            logger.debug(f"invariant O({A!r}) with eigenvalue {lam!r}, destabilizing={destabilizing}")
    if p < 50:
        logger.warning(f"Stability scan over F_{p} is a bounded heuristic")
    report = StabilityReport(degree_bound, certified, found, tried)
    if certified and not report.stable_up_to_bound:
        logger.warning("Scan found a destabilizer on a bundle certified stable")
    return report
