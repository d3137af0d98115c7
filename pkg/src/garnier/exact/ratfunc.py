"""Rational functions over the rationals.

Only cheap cancellation is performed (common monomial factors, and a gcd
when both sides are univariate in the same variable). Equality of large
expressions is decided by exact evaluation at random points instead of by
canonical forms.
"""
from __future__ import annotations

import random
from typing import Iterable, Mapping

from .poly import MultiPoly, univariate_divexact, univariate_gcd
from .rational import Rational, random_rational, rational

UNIVARIATE_GCD_CAP = 400


class PolarError(ZeroDivisionError):
    """A denominator vanished identically (division by zero, or a polar substitution)."""


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _normalized: bool = False):
        num = num if isinstance(num, MultiPoly) else MultiPoly.const(num)
        den = MultiPoly.const(1) if den is None else den
        den = den if isinstance(den, MultiPoly) else MultiPoly.const(den)
        if den.is_zero():
            raise PolarError("rational function with zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @classmethod
    def var(cls, name: str) -> "RatFunc":
        return cls(MultiPoly.var(name), _normalized=True)

    @classmethod
    def vars(cls, *names: str):
        return tuple(cls.var(n) for n in names)

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(MultiPoly.const(c), _normalized=True)

    # -- structure --------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Rational:
        return self.num.constant_value() / self.den.constant_value()

    def free_symbols(self) -> set:
        return self.num.free_symbols() | self.den.free_symbols()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, MultiPoly):
            return RatFunc(x)
        try:
            return RatFunc.const(rational(x))
        except TypeError:
            return None

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc.const(0)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise PolarError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n >= 0:
            return RatFunc(self.num ** n, self.den ** n)
        return RatFunc(self.den ** (-n), self.num ** (-n))

    def __eq__(self, other):
        """Structural equality of the normalized forms (sound, not complete)."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation / calculus ------------------------------------------------
    def evaluate(self, values: Mapping[str, object]):
        d = self.den.evaluate(values)
        if isinstance(d, Rational) and not d:
            raise PolarError(f"denominator {self.den} vanishes at {dict(values)}")
        return self.num.evaluate(values) / d

    def derivative(self, name: str) -> "RatFunc":
        dn = self.num.derivative(name)
        dd = self.den.derivative(name)
        if dd.is_zero():
            return RatFunc(dn, self.den)
        return RatFunc(dn * self.den - self.num * dd, self.den * self.den)

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _normalize(num: MultiPoly, den: MultiPoly):
    if num.is_zero():
        return MultiPoly.zero(), MultiPoly.const(1)
    if num.variables != den.variables:
        num, den = num._aligned(den)
    # common monomial factor
    m = tuple(min(a, b) for a, b in zip(num.min_exponents(), den.min_exponents()))
    if any(m):
        num, den = num.shift(m), den.shift(m)
    if den.is_constant():
        c = den.constant_value()
        return num * (1 / c), MultiPoly.const(1, num.variables)
    symbols = num.free_symbols() | den.free_symbols()
    if len(symbols) == 1:
        (x,) = symbols
        a, b = num.univariate_coeffs(x), den.univariate_coeffs(x)
        if len(a) + len(b) <= UNIVARIATE_GCD_CAP:
            g = univariate_gcd(a, b)
            if len(g) > 1:
                a, b = univariate_divexact(a, g), univariate_divexact(b, g)
                num, den = MultiPoly.from_univariate(x, a), MultiPoly.from_univariate(x, b)
    lead = den.leading_coefficient()
    if lead != 1:
        inv = 1 / lead
        num, den = num * inv, den * inv
    return num, den


def as_ratfunc(x) -> RatFunc:
    r = RatFunc._coerce(x)
    if r is None:
        raise TypeError(f"cannot interpret {x!r} as a rational function")
    return r


# -- named operations -----------------------------------------------------


def ratfunc_arith(a, b, op: str) -> RatFunc:
    """Exact ``add``/``sub``/``mul``/``div`` of two rational functions."""
    a, b = as_ratfunc(a), as_ratfunc(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def _poly_substitute(p: MultiPoly, bindings: Mapping[str, RatFunc]):
    """Substitute into a polynomial; returns (numerator, {var: (den, power)})."""
    used = p.free_symbols()
    values = {}
    degs = {}
    for v in used:
        val = bindings.get(v)
        val = RatFunc.var(v) if val is None else as_ratfunc(val)
        values[v] = val
        degs[v] = p.degree(v)
    npow: dict = {}
    dpow: dict = {}

    def power(cache, v, poly, k):
        key = (v, k)
        if key not in cache:
            cache[key] = poly ** k
        return cache[key]

    total = MultiPoly.zero()
    for exps, c in p.terms.items():
        term = MultiPoly.const(c)
        for name, e in zip(p.variables, exps):
            if name not in values:
                continue
            val = values[name]
            if e:
                term = term * power(npow, name, val.num, e)
            if not val.den.is_constant() and degs[name] - e:
                term = term * power(dpow, name, val.den, degs[name] - e)
        total = total + term
    dens = {v: (values[v].den, degs[v]) for v in used if not values[v].den.is_constant()}
    return total, dens


def substitute(f, bindings: Mapping[str, object]) -> RatFunc:
    """Compose ``f`` with ``bindings`` (symbol -> RatFunc or rational).

    Raises PolarError when the substituted denominator is identically zero.
    """
    f = as_ratfunc(f)
    bindings = {k: as_ratfunc(v) for k, v in bindings.items()}
    n1, d1 = _poly_substitute(f.num, bindings)
    n2, d2 = _poly_substitute(f.den, bindings)
    if n2.is_zero():
        raise PolarError(f"substitution makes the denominator {f.den} vanish identically")
    top, bottom = n1, n2
    for v in set(d1) | set(d2):
        poly = (d1.get(v) or d2.get(v))[0]
        k1 = d1[v][1] if v in d1 else 0
        k2 = d2[v][1] if v in d2 else 0
        if k2 > k1:
            top = top * poly ** (k2 - k1)
        elif k1 > k2:
            bottom = bottom * poly ** (k1 - k2)
    return RatFunc(top, bottom)


def derivative(f, name: str) -> RatFunc:
    return as_ratfunc(f).derivative(name)


def random_point(symbols: Iterable[str], rng: random.Random, bound: int = 10**6) -> dict:
    return {s: random_rational(rng, bound) for s in sorted(symbols)}


def equal_by_evaluation(a, b, rng: random.Random, trials: int = 5, bound: int = 10**6,
                        max_attempts: int = 1000) -> bool:
    """Schwartz-Zippel style equality test at ``trials`` random rational points.

    Points where either side has a vanishing denominator are redrawn.
    """
    a, b = as_ratfunc(a), as_ratfunc(b)
    symbols = a.free_symbols() | b.free_symbols()
    done = attempts = 0
    while done < trials:
        attempts += 1
        if attempts > max_attempts:
            raise RuntimeError("could not find non-polar evaluation points")
        pt = random_point(symbols, rng, bound)
        try:
            va, vb = a.evaluate(pt), b.evaluate(pt)
        except PolarError:
            continue
        if va != vb:
            return False
        done += 1
    return True
