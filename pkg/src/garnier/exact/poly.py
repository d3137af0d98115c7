"""Sparse multivariate polynomials over the rationals."""
from __future__ import annotations

from typing import Iterable, Mapping

from .rational import Rational, rational

Exponent = tuple


class MultiPoly:
    """Immutable sparse polynomial.

    ``terms`` maps exponent tuples (aligned with ``variables``) to nonzero
    rational coefficients. Operands over different variable lists are aligned
    on the union of their variables.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponent, object]):
        variables = tuple(variables)
        n = len(variables)
        clean = {}
        for exps, c in terms.items():
            if len(exps) != n:
                raise ValueError(f"exponent {exps} does not match variables {variables}")
            c = rational(c)
            if c:
                clean[tuple(exps)] = c
        self.variables = variables
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): 1})

    @classmethod
    def const(cls, c, variables: Iterable[str] = ()) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def zero(cls, variables: Iterable[str] = ()) -> "MultiPoly":
        return cls(variables, {})

    # -- structure --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Rational:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        for c in self.terms.values():
            return c
        return rational(0)

    def free_symbols(self) -> set:
        used = set()
        for exps in self.terms:
            for name, e in zip(self.variables, exps):
                if e:
                    used.add(name)
        return used

    def degree(self, name: str | None = None) -> int:
        """Total degree, or degree in ``name``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        if name not in self.variables:
            return 0
        i = self.variables.index(name)
        return max(e[i] for e in self.terms)

    def leading_coefficient(self) -> Rational:
        """Coefficient of the lexicographically largest exponent."""
        if not self.terms:
            return rational(0)
        return self.terms[max(self.terms)]

    def with_variables(self, variables: Iterable[str]) -> "MultiPoly":
        """Re-express over a superset ``variables`` of the used variables."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        index = {v: i for i, v in enumerate(variables)}
        n = len(variables)
        out = {}
        for exps, c in self.terms.items():
            new = [0] * n
            for name, e in zip(self.variables, exps):
                if e:
                    if name not in index:
                        raise ValueError(f"variable {name} missing from {variables}")
                    new[index[name]] = e
            out[tuple(new)] = c
        return MultiPoly(variables, out)

    def _aligned(self, other: "MultiPoly"):
        if self.variables == other.variables:
            return self, other
        merged = list(self.variables)
        seen = set(merged)
        for v in other.variables:
            if v not in seen:
                merged.append(v)
                seen.add(v)
        return self.with_variables(merged), other.with_variables(merged)

    @staticmethod
    def _coerce(x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        return MultiPoly.const(x)

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                c = rational(other)
            except TypeError:
                return NotImplemented
            if not c:
                return self
            key = (0,) * len(self.variables)
            terms = dict(self.terms)
            terms[key] = terms.get(key, 0) + c
            return MultiPoly(self.variables, terms)
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(a.variables, terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                c = rational(other)
            except TypeError:
                return NotImplemented
            if not c:
                return MultiPoly.zero(self.variables)
            return MultiPoly(self.variables, {e: v * c for e, v in self.terms.items()})
        a, b = self._aligned(other)
        out: dict = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return MultiPoly(a.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.const(rational(other))
            except TypeError:
                return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(
                (tuple(sorted((n, e) for n, e in zip(self.variables, exps) if e)), c)
                for exps, c in self.terms.items()
            ))
        return self._hash

    # -- calculus / evaluation ----------------------------------------------
    def derivative(self, name: str) -> "MultiPoly":
        if name not in self.variables:
            return MultiPoly.zero(self.variables)
        i = self.variables.index(name)
        out = {}
        for exps, c in self.terms.items():
            if exps[i]:
                new = list(exps)
                new[i] -= 1
                out[tuple(new)] = c * exps[i]
        return MultiPoly(self.variables, out)

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate with every used variable bound; values may be any ring elements."""
        powers = {}
        total = 0
        for exps, c in self.terms.items():
            term = c
            for name, e in zip(self.variables, exps):
                if e:
                    key = (name, e)
                    if key not in powers:
                        powers[key] = values[name] ** e
                    term = term * powers[key]
            total = total + term
        return total

    def min_exponents(self) -> tuple:
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(min(col) for col in zip(*self.terms))

    def shift(self, exps: tuple) -> "MultiPoly":
        """Divide by the monomial with exponent ``exps`` (must divide exactly)."""
        return MultiPoly(self.variables, {tuple(a - b for a, b in zip(e, exps)): c for e, c in self.terms.items()})

    def univariate_coeffs(self, name: str) -> list:
        """Dense coefficient list (low to high) of a polynomial in ``name`` only."""
        if self.free_symbols() - {name}:
            raise ValueError(f"polynomial is not univariate in {name}")
        if not self.terms:
            return []
        i = self.variables.index(name) if name in self.variables else None
        deg = self.degree(name)
        out = [rational(0)] * (deg + 1)
        for exps, c in self.terms.items():
            out[exps[i] if i is not None else 0] += c
        return out

    @classmethod
    def from_univariate(cls, name: str, coeffs: list) -> "MultiPoly":
        return cls((name,), {(k,): c for k, c in enumerate(coeffs)})

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(self.variables, exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def univariate_gcd(a: list, b: list) -> list:
    """Monic gcd of two dense coefficient lists (low to high)."""

    def trim(p):
        p = list(p)
        while p and not p[-1]:
            p.pop()
        return p

    a, b = trim(a), trim(b)
    while b:
        # a mod b
        r = list(a)
        lb = b[-1]
        while len(r) >= len(b) and r:
            factor = r[-1] / lb
            shift = len(r) - len(b)
            for k, c in enumerate(b):
                r[shift + k] -= factor * c
            r = trim(r)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def univariate_divexact(a: list, b: list) -> list:
    """Quotient of dense lists when ``b`` divides ``a``."""
    a = list(a)
    q = [rational(0)] * (len(a) - len(b) + 1)
    lb = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        factor = a[shift + len(b) - 1] / lb
        q[shift] = factor
        if factor:
            for k, c in enumerate(b):
                a[shift + k] -= factor * c
    if any(a):
        raise ArithmeticError("inexact univariate division")
    return q
