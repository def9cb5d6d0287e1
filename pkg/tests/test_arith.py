import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higgs_fourier.algebra import (
    CurveFunction,
    FieldElement,
    Matrix,
    Polynomial,
    PrimeField,
    RationalFunction,
    cokernel_basis,
    kernel_basis,
    poly_gcd,
    poly_xgcd,
    solve,
)
from higgs_fourier.algebra.arith import ZERO_DEGREE, is_linearly_independent, poly_lcm
from higgs_fourier.errors import BadCharacteristic

from .strategies import matrices, polynomials, primes, residues, root_multisets, shaped_matrices, square_matrices

P = 101
F = Polynomial([0, -1, 0, 0, 0, 1], P)


def independent_rank(rows, p):
    """Row reduction written independently of Matrix.rref."""
    m = [[v % p for v in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(m)):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        for i in range(rank + 1, len(m)):
            factor = m[i][col] * inv % p
            m[i] = [(a - factor * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def independent_det(rows, p):
    """Determinant by elimination, tracking row swaps."""
    m = [[v % p for v in row] for row in rows]
    n = len(m)
    det = 1
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col] % p
        inv = pow(m[col][col], p - 2, p)
        for i in range(col + 1, n):
            factor = m[i][col] * inv % p
            m[i] = [(a - factor * b) % p for a, b in zip(m[i], m[col])]
    return det % p


def trial_division_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Largest monic common divisor among products of linear factors (split inputs only)."""
    common = Counter(dict(a.roots())) & Counter(dict(b.roots()))
    return Polynomial.from_roots(common.elements(), a.p)


class TestPrimeField:
    def test_rejects_two(self):
        with pytest.raises(BadCharacteristic):
            PrimeField(2)

    def test_rejects_composite(self):
        with pytest.raises(BadCharacteristic):
            PrimeField(15)

    def test_element_reduces(self):
        assert PrimeField(7).element(10) == FieldElement(3, 7)

    def test_sqrt(self):
        field = PrimeField(11)
        assert field.sqrt(4) == 2
        assert field.sqrt(2) is None
        assert field.sqrt(0) == 0

    @settings(max_examples=200)
    @given(st.data())
    def test_field_axioms(self, data):
        p = data.draw(primes())
        a, b, c = (FieldElement(data.draw(residues(p)), p) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert a - a == 0
        if not a.is_zero():
            assert a * a.inverse() == 1
            assert (b / a) * a == b

    def test_random_element_is_deterministic(self):
        field = PrimeField(101)
        assert field.random_element(random.Random(3)) == field.random_element(random.Random(3))


class TestPolynomial:
    def test_zero_degree(self):
        assert Polynomial.zero(7).degree == ZERO_DEGREE
        assert Polynomial([0, 0, 0], 7).is_zero()

    def test_trailing_zeros_are_dropped(self):
        assert Polynomial([1, 2, 7], 7) == Polynomial([1, 2], 7)

    def test_evaluation(self):
        assert Polynomial([1, 2, 3], 7)(2) == (1 + 4 + 12) % 7

    def test_derivative(self):
        assert F.derivative() == Polynomial([-1, 0, 0, 0, 5], P)

    def test_roots_with_multiplicity(self):
        a = Polynomial.from_roots([2, 2, 5], 11)
        assert a.roots() == [(2, 2), (5, 1)]
        assert a.splits()
        assert not Polynomial([1, 0, 1], 11).splits()

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Polynomial([1, 1], 7).divmod(Polynomial.zero(7))

    @settings(max_examples=200)
    @given(st.data())
    def test_ring_axioms(self, data):
        p = data.draw(primes())
        a, b, c = (data.draw(polynomials(p)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a - a).is_zero()

    @settings(max_examples=200)
    @given(st.data())
    def test_division_identity(self, data):
        p = data.draw(primes())
        a = data.draw(polynomials(p))
        b = data.draw(polynomials(p, nonzero=True))
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree

    @given(st.data())
    def test_shift(self, data):
        p = data.draw(primes())
        a = data.draw(polynomials(p))
        x0, t = data.draw(residues(p)), data.draw(residues(p))
        assert a.shift(x0)(t) == a(x0 + t)


class TestGcd:
    @settings(max_examples=200)
    @given(st.data())
    def test_gcd_matches_trial_division(self, data):
        p = data.draw(st.sampled_from([5, 7, 11, 13]))
        a = Polynomial.from_roots(data.draw(root_multisets(p)), p)
        b = Polynomial.from_roots(data.draw(root_multisets(p)), p)
        assert poly_gcd(a, b) == trial_division_gcd(a, b)

    @settings(max_examples=200)
    @given(st.data())
    def test_bezout(self, data):
        p = data.draw(primes())
        a, b = data.draw(polynomials(p)), data.draw(polynomials(p))
        g, s, t = poly_xgcd(a, b)
        assert s * a + t * b == g
        assert g == poly_gcd(a, b)
        if not g.is_zero():
            assert g.leading == 1
            assert g.divides(a) and g.divides(b)

    def test_gcd_of_zeros(self):
        assert poly_gcd(Polynomial.zero(7), Polynomial.zero(7)).is_zero()

    def test_lcm(self):
        a = Polynomial.from_roots([1, 2], 7)
        b = Polynomial.from_roots([2, 3], 7)
        assert poly_lcm(a, b) == Polynomial.from_roots([1, 2, 3], 7)


class TestRationalFunction:
    def test_canonical_form(self):
        x = Polynomial.x(7)
        r = RationalFunction(x * (x + 1), (x + 1).scale(3))
        assert r.den == Polynomial.constant(1, 7)
        assert r.num == x.scale(5)  # 1/3 = 5 mod 7

    def test_inverse(self):
        r = RationalFunction(Polynomial([1, 1], 7), Polynomial([0, 1], 7))
        assert r * r.inverse() == 1

    def test_pole(self):
        r = RationalFunction(Polynomial([1], 7), Polynomial([0, 1], 7))
        with pytest.raises(ZeroDivisionError):
            r(0)


class TestCurveFunction:
    def test_y_squared_is_f(self):
        y = CurveFunction.y(F)
        assert y * y == CurveFunction.from_polynomial(F, F)

    def test_inverse_and_norm(self):
        fn = CurveFunction(Polynomial([1, 1], P), Polynomial([2], P), F)
        assert fn * fn.inverse() == CurveFunction.constant(1, F)
        assert fn.norm() == RationalFunction(Polynomial([1, 1], P) ** 2 - F.scale(4))

    def test_negative_power(self):
        x = CurveFunction.x(F)
        assert x ** -2 * x ** 2 == CurveFunction.constant(1, F)

    def test_common_form(self):
        x = Polynomial.x(P)
        fn = CurveFunction(RationalFunction(Polynomial.constant(1, P), x), RationalFunction(x), F)
        A, B, d = fn.common_form()
        assert d == x
        assert A == Polynomial.constant(1, P)
        assert B == x * x

    def test_as_dict(self):
        assert CurveFunction.y(F).as_dict() == {"a": [], "b": [1], "den": [1]}


class TestMatrix:
    def test_identity_and_product(self):
        m = Matrix([[1, 2], [3, 4]], 7)
        assert m @ Matrix.identity(2, 7) == m
        assert m @ (1, 1) == (3, 0)

    def test_block(self):
        a = Matrix.identity(2, 5)
        b = Matrix.zeros(2, 1, 5)
        assert Matrix.block([[a, b]], 5).shape == (2, 3)
        with pytest.raises(ValueError):
            Matrix.block([[a, Matrix.zeros(1, 1, 5)]], 5)

    def test_characteristic_polynomial_2x2(self):
        m = Matrix([[1, 2], [3, 4]], 101)
        # T^2 - 5T - 2
        assert m.characteristic_polynomial() == Polynomial([-2, -5, 1], 101)

    def test_characteristic_polynomial_size_at_least_p(self):
        cycle = Matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]], 3)
        assert cycle.characteristic_polynomial() == Polynomial([-1, 0, 0, 1], 3)
        nilpotent = Matrix([[int(j == i + 1) for j in range(4)] for i in range(4)], 3)
        assert nilpotent.characteristic_polynomial() == Polynomial.monomial(4, 3)

    @settings(max_examples=150)
    @given(st.data())
    def test_characteristic_polynomial_is_det(self, data):
        p = data.draw(st.sampled_from([3, 5, 7]))
        m = data.draw(square_matrices(p, max_size=5))
        chi = m.characteristic_polynomial()
        assert chi.degree == m.nrows and chi.leading == 1
        for t in range(p):
            shifted = Matrix.identity(m.nrows, p).scale(t) - m
            assert chi(t) % p == independent_det(shifted.rows, p)

    def test_kernel_of_wide_matrix(self):
        # 6 x 9 over F_11: rows e_i + e_(i+3) for i < 3, then three dependent rows
        rows = [[int(j == i or j == i + 3) for j in range(9)] for i in range(3)]
        rows += [[2 * v % 11 for v in rows[0]], [0] * 9, [a + b for a, b in zip(rows[1], rows[2])]]
        m = Matrix(rows, 11)
        kernel = kernel_basis(m)
        assert m.rank() == 3
        assert len(kernel) == 6
        for v in kernel:
            assert all(c == 0 for c in m @ v)
        assert is_linearly_independent(kernel, 11)

    @settings(max_examples=50)
    @given(st.data())
    def test_rank_nullity_six_by_nine(self, data):
        m = data.draw(shaped_matrices(11, 6, 9))
        kernel = kernel_basis(m)
        assert m.rank() == independent_rank(m.rows, 11)
        assert m.rank() + len(kernel) == 9
        for v in kernel:
            assert all(c == 0 for c in m @ v)

    @settings(max_examples=200)
    @given(st.data())
    def test_rank_matches_independent_elimination(self, data):
        p = data.draw(primes())
        m = data.draw(matrices(p))
        assert m.rank() == independent_rank(m.rows, p)

    @settings(max_examples=200)
    @given(st.data())
    def test_rank_nullity(self, data):
        p = data.draw(primes())
        m = data.draw(matrices(p))
        kernel = kernel_basis(m)
        assert m.rank() + len(kernel) == m.ncols
        for v in kernel:
            assert all(c == 0 for c in m @ v)
        assert is_linearly_independent(kernel, p)

    @settings(max_examples=200)
    @given(st.data())
    def test_cokernel_complements_image(self, data):
        p = data.draw(primes())
        m = data.draw(matrices(p))
        coker = cokernel_basis(m)
        assert len(coker) == m.nrows - m.rank()
        spanning = Matrix.block([[m, Matrix.from_columns(coker, m.nrows, p)]], p) if coker else m
        assert spanning.rank() == m.nrows

    @settings(max_examples=100)
    @given(st.data())
    def test_solve(self, data):
        p = data.draw(primes())
        m = data.draw(matrices(p))
        x = data.draw(st.lists(residues(p), min_size=m.ncols, max_size=m.ncols))
        rhs = m @ x
        solution = solve(m, rhs)
        assert solution is not None
        assert m @ solution == rhs

    def test_solve_inconsistent(self):
        m = Matrix([[1, 0], [0, 0]], 7)
        assert solve(m, [0, 1]) is None

    @settings(max_examples=100)
    @given(st.data())
    def test_cayley_hamilton_trace(self, data):
        p = data.draw(st.sampled_from([11, 13, 101]))
        m = data.draw(square_matrices(p))
        chi = m.characteristic_polynomial()
        assert chi.degree == m.nrows
        assert chi.leading == 1
        assert chi[m.nrows - 1] == -m.trace() % p
