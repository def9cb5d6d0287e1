import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higgs_fourier.algebra import Differential, Divisor, Polynomial, h0, h1, new_curve, random_jac_point
from higgs_fourier.higgs import hitchin_section, twist_by_form, twist_by_line_bundle
from higgs_fourier.hypercoh import (
    complex_of,
    euler_characteristic,
    h0_matrix,
    h1_matrix,
    higgs_hypercoh,
    hypercoh,
    new_complex,
)

SMALL = new_curve(11, [0, -1, 0, 0, 0, 1])
SMALL_HITCHIN = hitchin_section(SMALL, SMALL.function(Polynomial([0, 0, 1], 11)))


class TestAtTheOrigin:
    def test_hitchin_section(self, hitchin):
        assert higgs_hypercoh(hitchin).dims == (0, 4, 0)

    def test_trivial_bundle(self, trivial):
        # H^0 = H^0(O), H^2 = H^1(omega)
        assert higgs_hypercoh(trivial).dims == (1, 4, 1)

    def test_rank_three(self, companion3):
        assert higgs_hypercoh(companion3).dims == (0, 6, 0)

    def test_h1_basis_splits_into_both_parts(self, trivial):
        result = higgs_hypercoh(trivial)
        kinds = [kind for kind, _ in result.h1_basis]
        assert len(kinds) == result.h1
        # zero map: every class of H^1(O) and of H^0(omega) survives
        assert kinds.count("ker1") == 2
        assert kinds.count("coker0") == 2


class TestTwoTermComplex:
    def test_matrix_shapes(self, curve, hitchin):
        T = complex_of(hitchin)
        # L(inf) + L(-inf) -> L(3inf) + L(inf)
        assert h0_matrix(curve, T).shape == (
            h0(curve, curve.K + Divisor.infinity(1)) + h0(curve, curve.K + Divisor.infinity(-1)),
            h0(curve, Divisor.infinity(1)) + h0(curve, Divisor.infinity(-1)),
        )
        assert h1_matrix(curve, T).shape == (
            sum(h1(curve, curve.K + D) for D in T.summands),
            sum(h1(curve, D) for D in T.summands),
        )

    def test_multiplication_by_a_form(self, curve):
        # O -> omega, 1 -> dx/y: injective on H^0, surjective on H^1
        T = new_complex([Divisor.zero()], [[curve.constant(1)]])
        assert hypercoh(curve, T).dims == (0, 2, 0)

    def test_euler_characteristic(self, curve, hitchin, companion3):
        assert euler_characteristic(curve, complex_of(hitchin)) == -4
        assert euler_characteristic(curve, complex_of(companion3)) == -6

    def test_degree_shifts_do_not_change_euler(self, curve):
        zero = curve.constant(0)
        T = new_complex([Divisor.infinity(3), Divisor.infinity(-5)], [[zero, zero], [zero, zero]])
        assert T.degree == -2
        assert euler_characteristic(curve, T) == -2 * (2 * curve.genus - 2)


class TestTwistedFibers:
    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 2 ** 16))
    def test_euler_identity_on_every_fiber(self, a0, a1, seed):
        form = Differential(Polynomial([a0, a1], 11))
        xi = random_jac_point(SMALL, random.Random(seed))
        twisted = twist_by_line_bundle(twist_by_form(SMALL_HITCHIN, form), xi)
        result = higgs_hypercoh(twisted)
        assert result.h0 - result.h1 + result.h2 == -4
        assert len(result.h1_basis) == result.h1

    @pytest.mark.parametrize("seed", range(4))
    def test_stable_bundle_has_no_h0_or_h2(self, curve, hitchin, seed):
        rng = random.Random(seed)
        form = Differential(Polynomial([rng.randrange(101), rng.randrange(101)], 101))
        twisted = twist_by_line_bundle(twist_by_form(hitchin, form), random_jac_point(curve, rng))
        assert higgs_hypercoh(twisted).dims == (0, 4, 0)
