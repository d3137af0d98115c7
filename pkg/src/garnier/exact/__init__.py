"""Exact arithmetic kernel: rationals, polynomials, rational functions, local series."""
from .poly import MultiPoly
from .ratfunc import (
    PolarError,
    RatFunc,
    as_ratfunc,
    derivative,
    equal_by_evaluation,
    random_point,
    ratfunc_arith,
    substitute,
)
from .rational import Rational, is_integral, random_rational, rational, to_str
from .series import DEFAULT_TRUNCATION, AtLeast, Jet, LocalSeries, PrecisionLoss, vanishing_order

__all__ = [
    "AtLeast", "DEFAULT_TRUNCATION", "Jet", "LocalSeries", "MultiPoly", "PolarError",
    "PrecisionLoss", "RatFunc", "Rational", "as_ratfunc", "derivative", "equal_by_evaluation",
    "is_integral", "random_point", "random_rational", "rational", "ratfunc_arith", "substitute",
    "to_str", "vanishing_order",
]
