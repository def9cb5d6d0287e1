"""
Exact arithmetic over a prime field F_p.

Provides field elements, univariate polynomials, rational functions in x,
functions a(x) + y*b(x) on a curve y^2 = f(x), and dense matrices with
Gaussian elimination. Polynomials and matrices store residues as plain ints
in [0, p); FieldElement is the scalar type handed out at the API boundary.
"""

from __future__ import annotations

import random
from typing import Iterable, Optional, Sequence, Union

from ..errors import BadCharacteristic

# Degree of the zero polynomial.
ZERO_DEGREE = -1

Vector = tuple[int, ...]


def is_prime(n: int) -> bool:
    """Trial division; the moduli used here are small."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def inverse_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    return pow(a, p - 2, p)


class FieldElement:
    """An element of F_p."""
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = int(p)
        self.value = int(value) % self.p

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError(f"field mismatch: F_{self.p} and F_{other.p}")
            return other.value
        return int(other) % self.p

    def __add__(self, other):
        return FieldElement(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return FieldElement(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return FieldElement(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * FieldElement(inverse_mod(self._coerce(other), self.p), self.p)

    def __rtruediv__(self, other):
        return FieldElement(self._coerce(other), self.p) / self

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.p), self.p)

    def inverse(self) -> "FieldElement":
        return FieldElement(inverse_mod(self.value, self.p), self.p)

    def is_zero(self) -> bool:
        return self.value == 0

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"F{self.p}({self.value})"


class PrimeField:
    """Factory for elements of F_p, p an odd prime."""

    def __init__(self, p: int):
        if p == 2:
            raise BadCharacteristic("characteristic 2 is not supported")
        if not is_prime(p):
            raise BadCharacteristic(f"modulus {p} is not prime")
        self.p = int(p)

    def element(self, value: int) -> FieldElement:
        return FieldElement(value, self.p)

    def random_element(self, rng: random.Random) -> FieldElement:
        return FieldElement(rng.randrange(self.p), self.p)

    def sqrt(self, value: int) -> Optional[int]:
        """A square root of value in F_p, or None if value is a non-residue."""
        value %= self.p
        if value == 0:
            return 0
        if pow(value, (self.p - 1) // 2, self.p) != 1:
            return None
        for r in range(1, self.p):
            if r * r % self.p == value:
                return min(r, self.p - r)
        return None

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class Polynomial:
    """Univariate polynomial over F_p, coefficients lowest degree first."""
    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs: Iterable[int], p: int):
        c = [int(a) % p for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.p = p
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, p: int) -> "Polynomial":
        return cls((), p)

    @classmethod
    def constant(cls, c: int, p: int) -> "Polynomial":
        return cls((c,), p)

    @classmethod
    def x(cls, p: int) -> "Polynomial":
        return cls((0, 1), p)

    @classmethod
    def monomial(cls, degree: int, p: int, c: int = 1) -> "Polynomial":
        return cls([0] * degree + [c], p)

    @classmethod
    def from_roots(cls, roots: Iterable[int], p: int) -> "Polynomial":
        result = cls.constant(1, p)
        for r in roots:
            result = result * cls((-r, 1), p)
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def field_coefficients(self) -> list[FieldElement]:
        return [FieldElement(c, self.p) for c in self.coeffs]

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(int(other), self.p)

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] + other[i] for i in range(n)], self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] - other[i] for i in range(n)], self.p)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.p)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(int(other))
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out, self.p)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Polynomial":
        return Polynomial([a * c for a in self.coeffs], self.p)

    def __pow__(self, n: int) -> "Polynomial":
        result = Polynomial.constant(1, self.p)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv = inverse_mod(other.leading, self.p)
        dlen = len(other.coeffs)
        for k in range(len(rem) - dlen, -1, -1):
            c = rem[k + dlen - 1] * inv % self.p
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = (rem[k + j] - c * b) % self.p
        return Polynomial(quo, self.p), Polynomial(rem, self.p)

    def __floordiv__(self, other):
        return self.divmod(self._lift(other))[0]

    def __mod__(self, other):
        return self.divmod(self._lift(other))[1]

    def divides(self, other: "Polynomial") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(inverse_mod(self.leading, self.p))

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:], self.p)

    def __call__(self, x0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x0 + c) % self.p
        return acc

    def shift(self, x0: int) -> "Polynomial":
        """The polynomial t -> self(x0 + t)."""
        result = Polynomial.zero(self.p)
        lin = Polynomial((x0, 1), self.p)
        for c in reversed(self.coeffs):
            result = result * lin + c
        return result

    def multiplicity(self, x0: int) -> int:
        """Order of vanishing at x = x0 (0 if x0 is not a root)."""
        if self.is_zero():
            raise ValueError("multiplicity of a root of the zero polynomial")
        shifted = self.shift(x0).coeffs
        k = 0
        while shifted[k] == 0:
            k += 1
        return k

    def roots(self) -> list[tuple[int, int]]:
        """Rational roots with multiplicities, in increasing order."""
        if self.is_zero():
            raise ValueError("roots of the zero polynomial")
        found = []
        for r in range(self.p):
            if self(r) == 0:
                found.append((r, self.multiplicity(r)))
        return found

    def splits(self) -> bool:
        """True if the polynomial is a product of linear factors over F_p."""
        return sum(m for _, m in self.roots()) == self.degree

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == Polynomial.constant(other, self.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c if c != 1 else ''}x")
            else:
                terms.append(f"{c if c != 1 else ''}x^{i}")
        return " + ".join(reversed(terms))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(g, s, t) with s*a + t*b = g and g the monic gcd."""
    p = a.p
    r0, r1 = a, b
    s0, s1 = Polynomial.constant(1, p), Polynomial.zero(p)
    t0, t1 = Polynomial.zero(p), Polynomial.constant(1, p)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = inverse_mod(r0.leading, p)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return Polynomial.zero(a.p)
    return (a * b // poly_gcd(a, b)).monic()


class RationalFunction:
    """num/den in F_p(x), with gcd(num, den) = 1 and den monic."""
    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Optional[Polynomial] = None):
        p = num.p
        if den is None:
            den = Polynomial.constant(1, p)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = num, Polynomial.constant(1, p)
        else:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num, den = num // g, den // g
            inv = inverse_mod(den.leading, p)
            num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @property
    def p(self) -> int:
        return self.num.p

    @classmethod
    def lift(cls, value, p: int) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return cls(value)
        return cls(Polynomial.constant(int(value), p))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    @property
    def degree(self) -> int:
        """deg num - deg den; minus the order at infinity of x-only functions."""
        return self.num.degree - self.den.degree

    def __add__(self, other):
        o = RationalFunction.lift(other, self.p)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = RationalFunction.lift(other, self.p)
        return RationalFunction(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return RationalFunction.lift(other, self.p) - self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        o = RationalFunction.lift(other, self.p)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * RationalFunction.lift(other, self.p).inverse()

    def __call__(self, x0: int) -> int:
        d = self.den(x0)
        if d == 0:
            raise ZeroDivisionError(f"pole at x = {x0}")
        return self.num(x0) * inverse_mod(d, self.p) % self.p

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Polynomial, int)):
            return self == RationalFunction.lift(other, self.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.is_polynomial():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


class CurveFunction:
    """The function a(x) + y*b(x) on y^2 = f(x); a, b rational in x."""
    __slots__ = ("f", "a", "b")

    def __init__(self, a, b, f: Polynomial):
        self.f = f
        self.a = RationalFunction.lift(a, f.p)
        self.b = RationalFunction.lift(b, f.p)

    @property
    def p(self) -> int:
        return self.f.p

    @classmethod
    def constant(cls, c: int, f: Polynomial) -> "CurveFunction":
        return cls(c, 0, f)

    @classmethod
    def from_polynomial(cls, poly: Polynomial, f: Polynomial) -> "CurveFunction":
        return cls(poly, 0, f)

    @classmethod
    def x(cls, f: Polynomial) -> "CurveFunction":
        return cls(Polynomial.x(f.p), 0, f)

    @classmethod
    def y(cls, f: Polynomial) -> "CurveFunction":
        return cls(0, 1, f)

    def _lift(self, other) -> "CurveFunction":
        if isinstance(other, CurveFunction):
            return other
        return CurveFunction(other, 0, self.f)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_constant(self) -> bool:
        return self.b.is_zero() and self.a.is_polynomial() and self.a.num.is_constant()

    def __add__(self, other):
        o = self._lift(other)
        return CurveFunction(self.a + o.a, self.b + o.b, self.f)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return CurveFunction(self.a - o.a, self.b - o.b, self.f)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return CurveFunction(-self.a, -self.b, self.f)

    def __mul__(self, other):
        o = self._lift(other)
        f = RationalFunction(self.f)
        a = self.a * o.a + f * self.b * o.b
        b = self.a * o.b + self.b * o.a
        return CurveFunction(a, b, self.f)

    __rmul__ = __mul__

    def conjugate(self) -> "CurveFunction":
        return CurveFunction(self.a, -self.b, self.f)

    def norm(self) -> RationalFunction:
        """a^2 - f*b^2, the product with the conjugate."""
        return self.a * self.a - RationalFunction(self.f) * self.b * self.b

    def inverse(self) -> "CurveFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        n = self.norm().inverse()
        return CurveFunction(self.a * n, -self.b * n, self.f)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int) -> "CurveFunction":
        if n < 0:
            return self.inverse() ** (-n)
        result = CurveFunction.constant(1, self.f)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def common_form(self) -> tuple[Polynomial, Polynomial, Polynomial]:
        """(A, B, d) with self = (A + y*B)/d and d the monic lcm of the denominators."""
        d = poly_lcm(self.a.den, self.b.den)
        A = self.a.num * (d // self.a.den)
        B = self.b.num * (d // self.b.den)
        return A, B, d

    def as_dict(self) -> dict[str, list[int]]:
        """{"a": A, "b": B, "den": d} for (A + y*B)/d, coefficients lowest first."""
        A, B, d = self.common_form()
        return {"a": list(A.coeffs), "b": list(B.coeffs), "den": list(d.coeffs)}

    def __eq__(self, other):
        if isinstance(other, CurveFunction):
            return self.f == other.f and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Polynomial, RationalFunction)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        if self.b.is_zero():
            return repr(self.a)
        if self.a.is_zero():
            return f"y*({self.b!r})"
        return f"{self.a!r} + y*({self.b!r})"


def berkowitz(rows: Sequence[Sequence], zero, one) -> list:
    """[1, c_1, ..., c_n] with det(T*I - A) = T^n + c_1 T^(n-1) + ... + c_n.

    Division-free, so it works over any commutative ring whose elements
    support +, - and *; in particular over F_p when n >= p.

    Args:
        rows: A square matrix as a sequence of rows.
        zero: The additive identity of the entry ring.
        one: The multiplicative identity of the entry ring.

    Returns:
        The coefficients of the characteristic polynomial, leading one first.
    """
    n = len(rows)
    coeffs = [one]
    # Grow the trailing principal submatrix one row and column at a time.
    for i in range(n - 1, -1, -1):
        m = n - 1 - i
        row = [rows[i][j] for j in range(i + 1, n)]
        vec = [rows[j][i] for j in range(i + 1, n)]
        # First column of the Toeplitz factor: 1, -a, -R C, -R M C, ...
        toeplitz = [one, zero - rows[i][i]]
        for _ in range(m):
            dot = zero
            for r, v in zip(row, vec):
                dot = dot + r * v
            toeplitz.append(zero - dot)
            nxt = []
            for s in range(m):
                acc = zero
                for t in range(m):
                    acc = acc + rows[i + 1 + s][i + 1 + t] * vec[t]
                nxt.append(acc)
            vec = nxt
        grown = []
        for k in range(m + 2):
            acc = zero
            for j in range(min(k, m) + 1):
                acc = acc + toeplitz[k - j] * coeffs[j]
            grown.append(acc)
        coeffs = grown
    return coeffs


class Matrix:
    """Dense matrix over F_p with entries stored as ints."""
    __slots__ = ("p", "nrows", "ncols", "rows")

    def __init__(self, rows: Sequence[Sequence[int]], p: int, ncols: Optional[int] = None):
        self.p = p
        self.rows = tuple(tuple(int(v) % p for v in row) for row in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for row in self.rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, nrows: int, ncols: int, p: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)], p, ncols)

    @classmethod
    def identity(cls, n: int, p: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], p, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int, p: int) -> "Matrix":
        return cls([[col[i] for col in columns] for i in range(nrows)], p, len(columns))

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]], p: int) -> "Matrix":
        """Assemble a block matrix; every block row must agree in height."""
        rows: list[list[int]] = []
        ncols = sum(b.ncols for b in blocks[0]) if blocks else 0
        for block_row in blocks:
            height = block_row[0].nrows
            for b in block_row:
                if b.nrows != height:
                    raise ValueError("block heights disagree")
            for i in range(height):
                row: list[int] = []
                for b in block_row:
                    row.extend(b.rows[i])
                rows.append(row)
        return cls(rows, p, ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.ncols)], self.p, self.nrows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.columns()
            return Matrix(
                [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows],
                self.p,
                other.ncols,
            )
        vec = tuple(other)
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) % self.p for row in self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.p,
            self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.p,
            self.ncols,
        )

    def scale(self, c: int) -> "Matrix":
        return Matrix([[a * c for a in row] for row in self.rows], self.p, self.ncols)

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and the pivot columns."""
        p = self.p
        m = [list(row) for row in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            pivot = next((i for i in range(r, self.nrows) if m[i][c]), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = inverse_mod(m[r][c], p)
            m[r] = [v * inv % p for v in m[r]]
            for i in range(self.nrows):
                if i != r and m[i][c]:
                    factor = m[i][c]
                    m[i] = [(v - factor * w) % p for v, w in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return Matrix(m, p, self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(min(self.nrows, self.ncols))) % self.p

    def characteristic_polynomial(self) -> Polynomial:
        """det(T*I - self), for any size relative to p."""
        if self.nrows != self.ncols:
            raise ValueError("characteristic polynomial of a non-square matrix")
        coeffs = berkowitz(self.rows, 0, 1)
        return Polynomial(reversed([v % self.p for v in coeffs]), self.p)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.p == other.p
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.p, self.ncols, self.rows))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over F{self.p}: {list(map(list, self.rows))})"


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of {v : m v = 0}; one vector per free column of the RREF."""
    reduced, pivots = m.rref()
    p = m.p
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [0] * m.ncols
        v[free] = 1
        for row_index, pc in enumerate(pivots):
            v[pc] = -reduced[row_index, free] % p
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, rhs: Sequence[int]) -> Optional[Vector]:
    """Some x with m x = rhs, or None when rhs is outside the column space."""
    if len(rhs) != m.nrows:
        raise ValueError("right-hand side length mismatch")
    augmented = Matrix(
        [list(row) + [b] for row, b in zip(m.rows, rhs)], m.p, m.ncols + 1
    )
    reduced, pivots = augmented.rref()
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [0] * m.ncols
    for row_index, pc in enumerate(pivots):
        x[pc] = reduced[row_index, m.ncols]
    return tuple(x)


def cokernel_basis(m: Matrix) -> list[Vector]:
    """Standard basis vectors spanning a complement of the column space of m."""
    _, pivots = m.transpose().rref()
    pivot_set = set(pivots)
    basis = []
    for k in range(m.nrows):
        if k not in pivot_set:
            e = [0] * m.nrows
            e[k] = 1
            basis.append(tuple(e))
    return basis


def is_linearly_independent(vectors: Sequence[Vector], p: int) -> bool:
    if not vectors:
        return True
    return Matrix(vectors, p).rank() == len(vectors)
