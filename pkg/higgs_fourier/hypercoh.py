"""
Hypercohomology of a two-term complex E -> E (x) omega on the curve.

The first spectral sequence degenerates at E_2 for a two-term complex on a
curve, so

    H^0 = ker H^0(theta),  H^2 = coker H^1(theta),
    H^1 = ker H^1(theta) + coker H^0(theta).

H^1 groups are the duals of Serre-dual L-spaces and H^1(theta) is the
transpose of multiplication L(-D_i) -> L(K - D_j).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    CurveFunction,
    Divisor,
    HyperellipticCurve,
    Matrix,
    Vector,
    cokernel_basis,
    kernel_basis,
    mult_map,
)
from .errors import InvariantViolation
from .higgs import HiggsBundle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwoTermComplex:
    """E = sum O(D_j) in degree 0 mapping to E (x) omega in degree 1."""
    summands: tuple[Divisor, ...]
    entries: tuple[tuple[CurveFunction, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.summands)

    @property
    def degree(self) -> int:
        return sum(D.degree for D in self.summands)


@dataclass(frozen=True)
class HypercohResult:
    h0: int
    h1: int
    h2: int
    ker0: tuple[Vector, ...]
    coker0: tuple[Vector, ...]
    ker1: tuple[Vector, ...]
    coker1: tuple[Vector, ...]

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.h0, self.h1, self.h2

    @property
    def h1_basis(self) -> tuple[tuple[str, Vector], ...]:
        """H^1 as (ker H^1 part, coker H^0 part) in a fixed order."""
        return tuple(("ker1", v) for v in self.ker1) + tuple(("coker0", v) for v in self.coker0)


def complex_of(H: HiggsBundle) -> TwoTermComplex:
    return TwoTermComplex(H.summands, H.field.entries)


def new_complex(summands: Sequence[Divisor], entries: Sequence[Sequence[CurveFunction]]) -> TwoTermComplex:
    return TwoTermComplex(tuple(summands), tuple(tuple(row) for row in entries))


def euler_characteristic(c: HyperellipticCurve, T: TwoTermComplex) -> int:
    """chi(E) - chi(E (x) omega) by Riemann-Roch."""
    g = c.genus
    chi_e = sum(D.degree + 1 - g for D in T.summands)
    chi_ew = sum(D.degree + (2 * g - 2) + 1 - g for D in T.summands)
    return chi_e - chi_ew


def h0_matrix(c: HyperellipticCurve, T: TwoTermComplex) -> Matrix:
    """H^0(E) -> H^0(E (x) omega); block (i, j) multiplies L(D_j) into L(K + D_i)."""
    r = T.rank
    blocks = [
        [mult_map(c, T.entries[i][j], T.summands[j], c.K + T.summands[i]) for j in range(r)]
        for i in range(r)
    ]
    return Matrix.block(blocks, c.p)


def h1_matrix(c: HyperellipticCurve, T: TwoTermComplex) -> Matrix:
    """H^1(E) -> H^1(E (x) omega) in the bases dual to L(K - D_j) and L(-D_i)."""
    r = T.rank
    serre_dual = [
        [mult_map(c, T.entries[i][j], -T.summands[i], c.K - T.summands[j]) for i in range(r)]
        for j in range(r)
    ]
    return Matrix.block(serre_dual, c.p).transpose()


def hypercoh(c: HyperellipticCurve, T: TwoTermComplex) -> HypercohResult:
    """
    Hypercohomology of E -> E (x) omega from the two induced maps on cohomology.

    On a curve the spectral sequence degenerates at E_2, so
    H^0 = ker H^0(theta), H^1 = ker H^1(theta) + coker H^0(theta) and
    H^2 = coker H^1(theta).

    Args:
        c: The curve.
        T: The two-term complex.

    Returns:
        The dimensions together with the kernel and cokernel bases.

    Raises:
        InvariantViolation: If h0 - h1 + h2 differs from the Euler
            characteristic computed by Riemann-Roch.
    """
    m0 = h0_matrix(c, T)
    m1 = h1_matrix(c, T)
    ker0, coker0 = kernel_basis(m0), cokernel_basis(m0)
    ker1, coker1 = kernel_basis(m1), cokernel_basis(m1)
    result = HypercohResult(
        h0=len(ker0),
        h1=len(ker1) + len(coker0),
        h2=len(coker1),
        ker0=tuple(ker0),
        coker0=tuple(coker0),
        ker1=tuple(ker1),
        coker1=tuple(coker1),
    )
    logger.debug(f"H^0(theta) {m0.shape}, H^1(theta) {m1.shape} -> dims {result.dims}")
    expected = euler_characteristic(c, T)
    if result.h0 - result.h1 + result.h2 != expected:
        raise InvariantViolation(
            f"Euler identity failed: {result.h0} - {result.h1} + {result.h2} != {expected}"
        )
    return result


def higgs_hypercoh(H: HiggsBundle) -> HypercohResult:
    return hypercoh(H.curve, complex_of(H))
