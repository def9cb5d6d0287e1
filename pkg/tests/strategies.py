from hypothesis import strategies as st

from higgs_fourier.algebra import Matrix, Polynomial

PRIMES = [3, 5, 7, 11, 13, 101]


def primes():
    return st.sampled_from(PRIMES)


def residues(p: int, nonzero: bool = False):
    return st.integers(min_value=1 if nonzero else 0, max_value=p - 1)


def polynomials(p: int, max_degree: int = 6, nonzero: bool = False):
    polys = st.lists(residues(p), min_size=0, max_size=max_degree + 1).map(lambda c: Polynomial(c, p))
    return polys.filter(lambda a: not a.is_zero()) if nonzero else polys


def shaped_matrices(p: int, nrows: int, ncols: int):
    return st.lists(
        st.lists(residues(p), min_size=ncols, max_size=ncols), min_size=nrows, max_size=nrows
    ).map(lambda rows: Matrix(rows, p, ncols))


def matrices(p: int, max_rows: int = 5, max_cols: int = 5):
    return st.integers(1, max_rows).flatmap(
        lambda n: st.integers(1, max_cols).flatmap(lambda m: shaped_matrices(p, n, m))
    )


def square_matrices(p: int, max_size: int = 4):
    return st.integers(1, max_size).flatmap(
        lambda n: st.lists(
            st.lists(residues(p), min_size=n, max_size=n), min_size=n, max_size=n
        ).map(lambda rows: Matrix(rows, p, n))
    )


def root_multisets(p: int, max_size: int = 5):
    return st.lists(residues(p), min_size=0, max_size=max_size)


def q_of(c, coeffs):
    """The function q(x) with the given coefficients on the curve c."""
    return c.function(Polynomial(coeffs, c.p))
