"""Exact arithmetic: rationals, cyclotomic numbers, sparse polynomials, row reduction.

Rationals are the standard library's ``fractions.Fraction``.
"""

from fractions import Fraction as Rational

from .cyclotomic import Cyclotomic, as_cyclotomic, cyclotomic_polynomial, euler_phi, format_upoly
from .linalg import rank, row_reduce
from .poly import (
    LaurentQPoly,
    Monomial,
    MultiPoly,
    QTPoly,
    compositions,
    monomials_of_bidegree,
    multiply,
    q_binomial,
    q_factorial,
    q_integer,
    qt_bracket,
    specialize,
)

__all__ = [
    "Rational", "Cyclotomic", "as_cyclotomic", "cyclotomic_polynomial", "euler_phi",
    "format_upoly", "rank", "row_reduce", "LaurentQPoly", "Monomial", "MultiPoly",
    "QTPoly", "compositions", "monomials_of_bidegree", "multiply", "q_binomial", "q_factorial",
    "q_integer", "qt_bracket", "specialize",
]
