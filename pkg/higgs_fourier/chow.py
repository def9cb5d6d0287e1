"""
The subring of H*(Jac(X) x P^g, Q) generated by the theta class t and the
hyperplane class h, truncated at t^(g+1) = h^(g+1) = 0, with exact rational
coefficients.
"""

import logging
from functools import lru_cache
from math import comb, factorial

import sympy

logger = logging.getLogger(__name__)


class ChowClass:
    """sum c_ab t^a h^b with 0 <= a, b <= g."""

    def __init__(self, genus: int, coefficients=None):
        self.genus = genus
        self.coefficients: dict[tuple[int, int], sympy.Rational] = {}
        for (a, b), value in (coefficients or {}).items():
            value = sympy.Rational(value)
            if a <= genus and b <= genus and value != 0:
                self.coefficients[(a, b)] = value

    @classmethod
    def one(cls, genus: int) -> "ChowClass":
        return cls(genus, {(0, 0): 1})

    @classmethod
    def t(cls, genus: int) -> "ChowClass":
        return cls(genus, {(1, 0): 1})

    @classmethod
    def h(cls, genus: int) -> "ChowClass":
        return cls(genus, {(0, 1): 1})

    def coefficient(self, a: int, b: int) -> sympy.Rational:
        return self.coefficients.get((a, b), sympy.Integer(0))

    def degree_part(self, k: int) -> "ChowClass":
        return ChowClass(self.genus, {ab: v for ab, v in self.coefficients.items() if sum(ab) == k})

    def __add__(self, other):
        if not isinstance(other, ChowClass):
            other = ChowClass.one(self.genus) * other
        out = dict(self.coefficients)
        for ab, v in other.coefficients.items():
            out[ab] = out.get(ab, 0) + v
        return ChowClass(self.genus, out)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ChowClass):
            k = sympy.Rational(other)
            return ChowClass(self.genus, {ab: v * k for ab, v in self.coefficients.items()})
        out: dict[tuple[int, int], sympy.Rational] = {}
        for (a1, b1), v1 in self.coefficients.items():
            for (a2, b2), v2 in other.coefficients.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + v1 * v2
        return ChowClass(self.genus, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ChowClass":
        result = ChowClass.one(self.genus)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        return (
            isinstance(other, ChowClass)
            and self.genus == other.genus
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash((self.genus, tuple(sorted(self.coefficients.items()))))

    def as_dict(self) -> dict[str, str]:
        return {f"t^{a} h^{b}": str(v) for (a, b), v in sorted(self.coefficients.items())}

    def __repr__(self):
        if not self.coefficients:
            return "0"
        return " + ".join(f"{v}*t^{a}*h^{b}" for (a, b), v in sorted(self.coefficients.items()))


def exp_h(g: int) -> ChowClass:
    """ch(O_{P^g}(1)) = e^h."""
    return ChowClass(g, {(0, k): sympy.Rational(1, factorial(k)) for k in range(g + 1)})


def chow_multiply(x: ChowClass, y: ChowClass) -> ChowClass:
    return x * y


def ch_TFT(g: int, r: int) -> ChowClass:
    """r * ((g - 1) + (g - 1) e^h + t (1 - e^h))."""
    one, t, e = ChowClass.one(g), ChowClass.t(g), exp_h(g)
    return (one * (g - 1) + e * (g - 1) + t * (one - e)) * r


@lru_cache(maxsize=None)
def _todd_coefficients(g: int) -> tuple[sympy.Rational, ...]:
    h = sympy.Symbol("h")
    expansion = sympy.series((h / (1 - sympy.exp(-h))) ** (g + 1), h, 0, g + 1).removeO()
    expansion = sympy.expand(expansion)
    return tuple(sympy.Rational(expansion.coeff(h, k)) for k in range(g + 1))


def todd(g: int) -> ChowClass:
    """td(Jac(X) x P^g) = (h / (1 - e^-h))^(g+1); the abelian factor contributes 1."""
    return ChowClass(g, {(0, k): v for k, v in enumerate(_todd_coefficients(g))})


def integrate(g: int, cls: ChowClass) -> sympy.Rational:
    """Degree of the top part, normalized by the integral of t^g h^g = g!."""
    return cls.coefficient(g, g) * factorial(g)


def cohomology_table(g: int, r: int) -> list[tuple[int, int]]:
    """dim H^p(Jac(X) x P^g, TFT(E)) = r g C(g-1, p-1) for 1 <= p <= g."""
    return [(p, r * g * comb(g - 1, p - 1)) for p in range(1, g + 1)]


def euler_from_table(g: int, r: int) -> int:
    return sum((-1) ** p * d for p, d in cohomology_table(g, r))


def hrr_euler_characteristic(g: int, r: int) -> sympy.Rational:
    chi = integrate(g, ch_TFT(g, r) * todd(g))
    logger.debug(f"HRR: chi(TFT) = {chi} for g={g}, r={r}")
    return chi
