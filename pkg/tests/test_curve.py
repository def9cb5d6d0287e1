import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higgs_fourier.algebra import (
    INFINITY,
    Differential,
    Divisor,
    Matrix,
    Place,
    Polynomial,
    canonical_basis,
    differential_divisor,
    evaluate,
    local_parameter,
    new_curve,
    principal_divisor,
    rational_points,
    valuation,
    weierstrass_places,
)
from higgs_fourier.algebra.curve import compose_series, local_expansion, random_place, series_mul
from higgs_fourier.errors import (
    BadCharacteristic,
    BadDegree,
    IrrationalSupport,
    NoRationalFibre,
    NotSquarefree,
    PoleAtPlace,
    ZeroDifferential,
    ZeroFunction,
)

ORIGIN = Place.point(0, 0)


class TestConstruction:
    def test_genus(self, curve, genus3_curve):
        assert curve.genus == 2
        assert genus3_curve.g == 3
        assert curve.K == Divisor.infinity(2)

    def test_even_degree_rejected(self):
        with pytest.raises(BadDegree):
            new_curve(101, [1, 0, 0, 0, 0, 0, 1])

    def test_low_degree_rejected(self):
        with pytest.raises(BadDegree):
            new_curve(101, [0, -1, 0, 1])

    def test_repeated_root_rejected(self):
        with pytest.raises(NotSquarefree):
            new_curve(101, Polynomial.from_roots([1, 1, 2, 3, 4], 101))

    def test_characteristic_two_rejected(self):
        with pytest.raises(BadCharacteristic):
            new_curve(2, [0, 1, 0, 0, 0, 1])

    def test_ident(self, curve):
        assert curve.ident == "y^2=(0, 100, 0, 0, 0, 1)/F101"


class TestPoints:
    def test_rational_points_brute_force(self, small_curve):
        c = small_curve
        brute = sorted(
            Place.point(x0, y0)
            for x0 in range(c.p)
            for y0 in range(c.p)
            if (y0 * y0 - c.f(x0)) % c.p == 0
        )
        assert rational_points(c) == brute

    def test_weierstrass(self, curve, small_curve):
        assert [pl.x for pl in weierstrass_places(curve)] == [0, 1, 10, 91, 100]
        # x^2 + 1 has no root mod 11
        assert weierstrass_places(small_curve) == [Place.point(0, 0), Place.point(1, 0), Place.point(10, 0)]

    def test_infinity_sorts_last(self, curve):
        assert sorted([INFINITY, ORIGIN]) == [ORIGIN, INFINITY]

    def test_random_place_is_on_curve(self, curve):
        rng = random.Random(0)
        for _ in range(20):
            assert curve.is_on_curve(random_place(curve, rng))

    def test_random_place_without_finite_points(self):
        # f = x^5 - x + 2 is the non-residue 2 at every x in F_3
        c = new_curve(3, [2, -1, 0, 0, 0, 1])
        assert rational_points(c) == []
        with pytest.raises(NoRationalFibre):
            random_place(c, random.Random(0))


class TestValuation:
    def test_at_infinity(self, curve):
        assert valuation(curve, curve.x(), INFINITY) == -2
        assert valuation(curve, curve.y(), INFINITY) == -5

    def test_at_weierstrass_place(self, curve):
        assert valuation(curve, curve.y(), ORIGIN) == 1
        assert valuation(curve, curve.x(), ORIGIN) == 2

    def test_local_parameters_have_order_one(self, curve):
        pl = rational_points(curve)[7]
        for place in (INFINITY, ORIGIN, pl):
            assert valuation(curve, local_parameter(curve, place), place) == 1

    def test_zero_function(self, curve):
        with pytest.raises(ZeroFunction):
            valuation(curve, curve.constant(0), ORIGIN)

    @pytest.mark.parametrize("index", [0, 3, 17])
    def test_expansion_satisfies_equation(self, curve, index):
        pl = rational_points(curve)[index]
        n = 8
        X, Y = local_expansion(curve, pl, n)
        assert X[0] == pl.x and Y[0] == pl.y
        assert series_mul(list(Y), list(Y), n, 101) == compose_series(curve.f, list(X), n, 101)


class TestEvaluate:
    def test_regular_point(self, curve):
        pl = rational_points(curve)[5]
        fn = curve.function(Polynomial([3, 1], 101), Polynomial([2], 101))
        assert int(evaluate(curve, fn, pl)) == (3 + pl.x + 2 * pl.y) % 101

    def test_removable_singularity(self, curve):
        # y / x = (x^4 - 1) / y vanishes to order 1 - 2 = -1 at the origin
        with pytest.raises(PoleAtPlace):
            evaluate(curve, curve.y() / curve.x(), ORIGIN)
        # x / y has order 1 at the origin
        assert int(evaluate(curve, curve.x() / curve.y(), ORIGIN)) == 0

    def test_value_at_infinity(self, curve):
        s = local_parameter(curve, INFINITY)
        # x^2 * s^4 = x^10 / y^4 = x^10 / f^2 -> 1
        assert int(evaluate(curve, curve.x() ** 2 * s ** 4, INFINITY)) == 1
        with pytest.raises(PoleAtPlace):
            evaluate(curve, curve.x(), INFINITY)


class TestDivisors:
    def test_arithmetic(self):
        D = Divisor.place(ORIGIN, 2) + Divisor.infinity(-2)
        assert D.degree == 0
        assert (D - D).is_zero()
        assert (D * 3).multiplicity(ORIGIN) == 6
        assert D.finite_part() == Divisor.place(ORIGIN, 2)
        assert not D.is_effective()

    def test_div_x(self, curve):
        assert principal_divisor(curve, curve.x()) == Divisor({ORIGIN: 2, INFINITY: -2})

    def test_div_y(self, curve):
        expected = Divisor(dict((pl, 1) for pl in weierstrass_places(curve)))
        assert principal_divisor(curve, curve.y()) == expected + Divisor.infinity(-5)

    def test_irrational_support(self, small_curve):
        with pytest.raises(IrrationalSupport):
            principal_divisor(small_curve, small_curve.function(Polynomial([1, 0, 1], 11)))

    @settings(max_examples=30, deadline=None)
    @given(st.data())
    def test_divisor_of_split_polynomial(self, curve, data):
        xs = sorted({pl.x for pl in rational_points(curve)})
        roots = data.draw(st.lists(st.sampled_from(xs), min_size=1, max_size=3))
        fn = curve.function(Polynomial.from_roots(roots, 101))
        expected = Divisor.infinity(-2 * len(roots))
        for x0 in roots:
            for pl in curve.places_above(x0):
                expected = expected + Divisor.place(pl, 2 if curve.is_weierstrass(pl) else 1)
        D = principal_divisor(curve, fn)
        assert D == expected
        assert D.degree == 0

    def test_canonical_divisor(self, curve):
        omega0, omega1 = canonical_basis(curve)
        assert differential_divisor(curve, omega0) == curve.K
        assert differential_divisor(curve, omega1) == Divisor.place(ORIGIN, 2)

    def test_zero_differential(self, curve):
        with pytest.raises(ZeroDifferential):
            differential_divisor(curve, Differential(Polynomial.zero(101)))

    @pytest.mark.parametrize("c", [new_curve(101, [0, -1, 0, 0, 0, 1]), new_curve(101, [0, -1, 0, 0, 0, 0, 0, 1])])
    def test_canonical_basis_at_general_points(self, c):
        # g points with distinct x: the values of x^i dx/y form a Vandermonde matrix
        rng = random.Random(4)
        for _ in range(5):
            xs = rng.sample([x0 for x0 in range(c.p) if c.places_above(x0)], c.genus)
            points = [c.places_above(x0)[-1] for x0 in xs]
            values = Matrix(
                [[int(evaluate(c, w.ratio(c.f), pl)) for w in canonical_basis(c)] for pl in points], c.p
            )
            assert values.rank() == c.genus
