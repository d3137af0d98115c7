"""Exact rationals and seeded random sampling.

``Rational`` is GMP's ``mpq``: always reduced, positive denominator.
"""
from __future__ import annotations

import random
from fractions import Fraction

from gmpy2 import mpq

Rational = type(mpq(0))


def rational(x) -> Rational:
    """Coerce ints, ``Fraction``, ``mpq`` or ``"p/q"`` strings to a Rational."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(x.strip())
    if isinstance(x, int):
        return mpq(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def to_str(x) -> str:
    """Encode as ``"p/q"`` (or ``"p"`` when integral)."""
    x = rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_integral(x) -> bool:
    return rational(x).denominator == 1


def random_rational(rng: random.Random, bound: int = 10**6, nonzero: bool = True) -> Rational:
    """Uniform numerator in [-bound, bound], denominator in [1, bound]."""
    while True:
        num = rng.randint(-bound, bound)
        if nonzero and num == 0:
            continue
        return mpq(num, rng.randint(1, bound))
