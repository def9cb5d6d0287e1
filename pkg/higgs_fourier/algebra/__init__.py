from .arith import (
    CurveFunction,
    FieldElement,
    Matrix,
    Polynomial,
    PrimeField,
    RationalFunction,
    Vector,
    cokernel_basis,
    kernel_basis,
    poly_gcd,
    poly_xgcd,
    solve,
)
from .curve import (
    INFINITY,
    Differential,
    Divisor,
    HyperellipticCurve,
    Place,
    canonical_basis,
    differential_divisor,
    evaluate,
    local_parameter,
    new_curve,
    principal_divisor,
    random_place,
    rational_points,
    valuation,
    weierstrass_places,
)
from .jacobian import (
    ReducedDivisor,
    cantor_add,
    enumerate_jacobian,
    from_divisor,
    identity,
    is_reduced,
    jacobian_order,
    negate,
    point_class,
    random_jac_point,
    scalar_multiply,
    to_divisor,
)
from .rrspace import RRBasis, cech_h1, h0, h1, is_section, mult_map, rr_basis

__all__ = [
    "CurveFunction",
    "FieldElement",
    "Matrix",
    "Polynomial",
    "PrimeField",
    "RationalFunction",
    "Vector",
    "cokernel_basis",
    "kernel_basis",
    "poly_gcd",
    "poly_xgcd",
    "solve",
    "INFINITY",
    "Differential",
    "Divisor",
    "HyperellipticCurve",
    "Place",
    "canonical_basis",
    "differential_divisor",
    "evaluate",
    "local_parameter",
    "new_curve",
    "principal_divisor",
    "random_place",
    "rational_points",
    "valuation",
    "weierstrass_places",
    "ReducedDivisor",
    "cantor_add",
    "enumerate_jacobian",
    "from_divisor",
    "identity",
    "is_reduced",
    "jacobian_order",
    "negate",
    "point_class",
    "random_jac_point",
    "scalar_multiply",
    "to_divisor",
    "RRBasis",
    "cech_h1",
    "h0",
    "h1",
    "is_section",
    "mult_map",
    "rr_basis",
]
