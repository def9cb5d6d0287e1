import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higgs_fourier.algebra import (
    INFINITY,
    Divisor,
    Place,
    Polynomial,
    cech_h1,
    evaluate,
    h0,
    h1,
    is_section,
    mult_map,
    new_curve,
    rational_points,
    rr_basis,
    valuation,
)
from higgs_fourier.algebra.rrspace import pole_order
from higgs_fourier.errors import NoRationalFibre, NotASection

SMALL = new_curve(11, [0, -1, 0, 0, 0, 1])
ORIGIN = Place.point(0, 0)


def divisors(c, max_terms: int = 3, max_mult: int = 2):
    places = rational_points(c) + [INFINITY]
    term = st.tuples(st.sampled_from(places), st.integers(-max_mult, max_mult))
    return st.lists(term, min_size=0, max_size=max_terms).map(Divisor)


def monomial_count(c, n: int) -> int:
    """Monomials x^i and y*x^j with pole order at most n at infinity."""
    xs = sum(1 for i in range(n + 1) if 2 * i <= n)
    ys = sum(1 for j in range(n + 1) if 2 * c.genus + 1 + 2 * j <= n)
    return xs + ys


class TestDimensions:
    @pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 2), (3, 2), (4, 3), (5, 4), (6, 5), (-1, 0)])
    def test_multiples_of_infinity(self, curve, n, expected):
        assert h0(curve, Divisor.infinity(n)) == expected

    @pytest.mark.parametrize("n", range(0, 9))
    def test_pole_orders_match_monomials(self, small_curve, n):
        assert h0(small_curve, Divisor.infinity(n)) == monomial_count(small_curve, n)

    def test_canonical(self, curve, genus3_curve):
        assert h0(curve, curve.K) == 2
        assert h0(genus3_curve, genus3_curve.K) == 3
        assert h1(curve, Divisor.zero()) == curve.genus

    def test_degree_zero_classes(self, curve):
        W = ORIGIN
        assert h0(curve, Divisor.place(W) - Divisor.infinity(1)) == 0
        assert h0(curve, Divisor.place(W, 2) - Divisor.infinity(2)) == 1

    @settings(max_examples=100, deadline=None)
    @given(divisors(SMALL))
    def test_riemann_roch_small_field(self, D):
        assert h0(SMALL, D) - h1(SMALL, D) == D.degree + 1 - SMALL.genus

    @settings(max_examples=25, deadline=None)
    @given(st.data())
    def test_riemann_roch(self, curve, data):
        D = data.draw(divisors(curve))
        assert h0(curve, D) - h1(curve, D) == D.degree + 1 - curve.genus

    @settings(max_examples=25, deadline=None)
    @given(divisors(SMALL, max_terms=2))
    def test_cech_matches_serre_duality(self, D):
        assert cech_h1(SMALL, D) == h1(SMALL, D)

    def test_cech_needs_a_fibre_outside_the_support(self):
        c = SMALL
        D = Divisor((c.places_above(x0)[0], 1) for x0 in range(c.p) if c.places_above(x0))
        with pytest.raises(NoRationalFibre):
            cech_h1(c, D)
        # one place short of every fibre is enough
        assert cech_h1(c, D - Divisor.place(D.support()[0])) == h1(c, D - Divisor.place(D.support()[0]))

    def test_cech_on_a_curve_without_finite_points(self):
        # f = x^5 - x + 2 takes the non-residue 2 everywhere on F_3
        c = new_curve(3, [2, -1, 0, 0, 0, 1])
        with pytest.raises(NoRationalFibre):
            cech_h1(c, Divisor.infinity(2))


class TestBruteForce:
    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("index", [0, 2, 5])
    def test_vanishing_at_a_point(self, small_curve, n, index):
        """Count the elements of L(n*inf) vanishing at P by evaluating every one."""
        c = small_curve
        pl = rational_points(c)[index]
        big = rr_basis(c, Divisor.infinity(n))
        vanishing = 0
        for coords in itertools.product(range(c.p), repeat=len(big)):
            fn = big.combination(coords) if any(coords) else c.constant(0)
            if int(evaluate(c, fn, pl)) == 0:
                vanishing += 1
        assert vanishing == c.p ** h0(c, Divisor.infinity(n) - Divisor.place(pl))

    @settings(max_examples=50, deadline=None)
    @given(divisors(SMALL))
    def test_basis_elements_satisfy_divisor(self, D):
        c = SMALL
        basis = rr_basis(c, D)
        for fn in basis:
            for pl in set(D.support()) | {INFINITY}:
                assert valuation(c, fn, pl) >= -D.multiplicity(pl)

    @settings(max_examples=10, deadline=None)
    @given(st.data())
    def test_dimension_by_exhaustive_enumeration(self, data):
        """Count L(D) inside (1/d) * L(N*inf) by checking valuations of every element."""
        c = SMALL
        places = rational_points(c)
        finite = data.draw(st.lists(st.tuples(st.sampled_from(places), st.integers(-1, 1)), max_size=2))
        D0 = Divisor(finite)
        # d = prod (x - x0)^k clears the finite poles allowed by D
        xs = sorted({pl.x for pl, n in D0.items() if n > 0})
        d, deg_d = c.constant(1), 0
        for x0 in xs:
            k = max(D0.multiplicity(q) for q in c.places_above(x0))
            d = d * c.function(Polynomial([-x0, 1], c.p)) ** k
            deg_d += k
        n_inf = data.draw(st.integers(-2, 4 - 2 * deg_d))
        D = D0 + Divisor.infinity(n_inf)
        N = n_inf + 2 * deg_d
        ambient = [c.x() ** i for i in range(N // 2 + 1)] if N >= 0 else []
        checked = set(D.support()) | {INFINITY} | {q for x0 in xs for q in c.places_above(x0)}
        count = 0
        for coords in itertools.product(range(c.p), repeat=len(ambient)):
            if not any(coords):
                count += 1
                continue
            h = c.constant(0)
            for k, fn in zip(coords, ambient):
                h = h + fn * k
            fn = h * d.inverse()
            if all(valuation(c, fn, pl) >= -D.multiplicity(pl) for pl in checked):
                count += 1
        dim = len(rr_basis(c, D))
        assert count == c.p ** dim
        assert dim == D.degree - c.genus + 1 + h1(c, D)


class TestBasis:
    def test_coordinates_of_basis_vectors(self, curve):
        basis = rr_basis(curve, Divisor.infinity(5))
        for i, fn in enumerate(basis):
            assert basis.coordinates(fn) == tuple(int(i == j) for j in range(len(basis)))

    def test_coordinates_outside(self, curve):
        assert rr_basis(curve, Divisor.infinity(4)).coordinates(curve.y()) is None

    def test_is_section(self, curve):
        assert is_section(curve, curve.x(), Divisor.infinity(2))
        assert not is_section(curve, curve.x(), Divisor.infinity(1))
        assert is_section(curve, curve.constant(0), Divisor.infinity(-3))
        assert is_section(curve, curve.x() ** -1, Divisor.place(ORIGIN, 2))

    def test_pole_order(self, curve):
        assert pole_order(curve, ("x", 3)) == 6
        assert pole_order(curve, ("y", 1)) == 7


class TestMultiplication:
    def test_mult_by_x(self, curve):
        m = mult_map(curve, curve.x(), Divisor.zero(), Divisor.infinity(2))
        assert m.shape == (2, 1)
        assert m.rank() == 1

    def test_inclusion_is_injective(self, curve):
        D = Divisor.infinity(3)
        m = mult_map(curve, curve.constant(1), D, D + Divisor.place(ORIGIN))
        assert m.rank() == h0(curve, D)

    def test_not_a_section(self, curve):
        with pytest.raises(NotASection):
            mult_map(curve, curve.x(), Divisor.zero(), Divisor.infinity(1))

    def test_zero_map(self, curve):
        m = mult_map(curve, curve.constant(0), Divisor.infinity(2), Divisor.infinity(4))
        assert m.shape == (3, 2)
        assert m.is_zero()

    @pytest.mark.parametrize("D", [Divisor.zero(), Divisor.infinity(1), Divisor.place(ORIGIN)])
    def test_composition(self, curve, D):
        x, y = curve.x(), curve.y()
        for s, t, ds, dt in ((x, x * x, 2, 4), (y, x, 5, 2), (x * x, y, 4, 5)):
            middle, target = D + Divisor.infinity(dt), D + Divisor.infinity(ds + dt)
            composed = mult_map(curve, s, middle, target) @ mult_map(curve, t, D, middle)
            assert mult_map(curve, s * t, D, target) == composed
