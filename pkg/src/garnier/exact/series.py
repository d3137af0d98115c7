"""Truncated Laurent series in one variable, and first-order jets.

A :class:`LocalSeries` stores ``sum c[i] * x**(valuation + i)`` known up to
(but excluding) ``x**precision``. Coefficients may be any exact field
elements supporting ``+ - * /`` and truthiness (``Rational`` or :class:`Jet`).
Plain scalars act as exact constants.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .rational import Rational, rational

DEFAULT_TRUNCATION = 8


class PrecisionLoss(ArithmeticError):
    """All known coefficients cancelled; retry with a larger truncation."""


class LocalSeries:
    __slots__ = ("variable", "valuation", "coeffs", "precision")

    def __init__(self, variable: str, valuation: int, coeffs, precision: int):
        coeffs = list(coeffs)
        # strip leading zeros
        k = 0
        while k < len(coeffs) and not coeffs[k]:
            k += 1
        valuation += k
        coeffs = coeffs[k:]
        keep = max(precision - valuation, 0)
        if not any(coeffs[:keep]):
            coeffs = []
            valuation = precision
        else:
            coeffs = coeffs[:keep] + [rational(0)] * (keep - len(coeffs))
        self.variable = variable
        self.valuation = valuation
        self.coeffs = coeffs
        self.precision = precision

    @classmethod
    def gen(cls, variable: str, truncation: int = DEFAULT_TRUNCATION) -> "LocalSeries":
        """The variable itself, known to relative precision ``truncation``."""
        return cls(variable, 1, [rational(1)], 1 + truncation)

    @classmethod
    def from_coefficients(cls, variable: str, coeffs, truncation: int | None = None) -> "LocalSeries":
        """Series with ``coeffs`` for exponents ``0..truncation``."""
        coeffs = list(coeffs)
        if truncation is None:
            truncation = len(coeffs) - 1
        coeffs = coeffs[: truncation + 1] + [rational(0)] * max(0, truncation + 1 - len(coeffs))
        return cls(variable, 0, coeffs, truncation + 1)

    # -- queries ------------------------------------------------------------
    def is_unknown_zero(self) -> bool:
        return not self.coeffs

    def order(self) -> int:
        if not self.coeffs:
            raise PrecisionLoss(f"series vanishes to the known precision O({self.variable}^{self.precision})")
        return self.valuation

    def leading(self):
        if not self.coeffs:
            raise PrecisionLoss("no nonzero coefficient within precision")
        return self.coeffs[0]

    def coefficient(self, k: int):
        if k >= self.precision:
            raise PrecisionLoss(f"coefficient {k} beyond precision {self.precision}")
        i = k - self.valuation
        if i < 0 or i >= len(self.coeffs):
            return rational(0)
        return self.coeffs[i]

    def limit(self):
        """Value at 0; ``None`` for a pole."""
        v = self.order()
        if v < 0:
            return None
        return self.coeffs[0] if v == 0 else rational(0)

    # -- arithmetic -----------------------------------------------------------
    def _scalar(self, other) -> bool:
        return not isinstance(other, LocalSeries)

    def __neg__(self):
        return LocalSeries(self.variable, self.valuation, [-c for c in self.coeffs], self.precision)

    def __add__(self, other):
        if isinstance(other, LocalSeries):
            prec = min(self.precision, other.precision)
            lo = min(self.valuation, other.valuation)
            out = [rational(0)] * max(prec - lo, 0)
            for s in (self, other):
                for i, c in enumerate(s.coeffs):
                    k = s.valuation + i - lo
                    if k < len(out):
                        out[k] = out[k] + c
            return LocalSeries(self.variable, lo, out, prec)
        if not _is_scalar(other):
            return NotImplemented
        if _exact_zero(other) or self.precision <= 0:
            return self
        lo = min(self.valuation, 0)
        out = [rational(0)] * (self.precision - lo)
        for i, c in enumerate(self.coeffs):
            out[self.valuation + i - lo] = c
        out[-lo] = out[-lo] + other
        return LocalSeries(self.variable, lo, out, self.precision)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, LocalSeries) or _is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LocalSeries):
            val = self.valuation + other.valuation
            n = min(len(self.coeffs), len(other.coeffs)) if (self.coeffs and other.coeffs) else 0
            if not self.coeffs or not other.coeffs:
                # unknown zero times something: order at least the sum
                prec = min(self.precision + other.valuation if other.coeffs else self.precision + other.precision,
                           other.precision + self.valuation if self.coeffs else other.precision + self.precision)
                return LocalSeries(self.variable, prec, [], prec)
            a, b = self.coeffs, other.coeffs
            out = []
            for k in range(n):
                acc = a[0] * b[k]
                for i in range(1, k + 1):
                    acc = acc + a[i] * b[k - i]
                out.append(acc)
            return LocalSeries(self.variable, val, out, val + n)
        if not _is_scalar(other):
            return NotImplemented
        if _exact_zero(other):
            # exact zero times a series: zero to the same relative accuracy
            return LocalSeries(self.variable, self.precision + 10**6, [], self.precision + 10**6)
        return LocalSeries(self.variable, self.valuation, [c * other for c in self.coeffs], self.precision)

    __rmul__ = __mul__

    def inverse(self) -> "LocalSeries":
        if not self.coeffs:
            raise PrecisionLoss("inverting a series with no known nonzero coefficient")
        a = self.coeffs
        n = len(a)
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, n):
            acc = a[1] * out[k - 1]
            for i in range(2, k + 1):
                acc = acc + a[i] * out[k - i]
            out.append(-acc * inv0)
        return LocalSeries(self.variable, -self.valuation, out, -self.valuation + n)

    def __truediv__(self, other):
        if isinstance(other, LocalSeries):
            return self * other.inverse()
        if not _is_scalar(other):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("series divided by zero")
        return self * (1 / other)

    def __rtruediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        if result is None:
            return LocalSeries(self.variable, 0, [rational(1)], self.precision - self.valuation)
        return result

    def __repr__(self):
        terms = " + ".join(f"({c})*{self.variable}^{self.valuation + i}" for i, c in enumerate(self.coeffs))
        return f"LocalSeries({terms or '0'} + O({self.variable}^{self.precision}))"


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Rational, Jet))


def _exact_zero(x) -> bool:
    if isinstance(x, Jet):
        return not x.value and not any(x.grad)
    return not x


@dataclass(frozen=True)
class Jet:
    """Value plus gradient with respect to a fixed set of directions."""

    value: object
    grad: tuple

    @classmethod
    def constant(cls, value, dims: int) -> "Jet":
        return cls(rational(value), (rational(0),) * dims)

    @classmethod
    def variable(cls, value, index: int, dims: int) -> "Jet":
        g = [rational(0)] * dims
        g[index] = rational(1)
        return cls(rational(value), tuple(g))

    def _lift(self, other):
        if isinstance(other, Jet):
            return other
        if isinstance(other, (int, Rational)):
            return Jet(rational(other), (rational(0),) * len(self.grad))
        return None

    def __bool__(self):
        return bool(self.value)

    def __neg__(self):
        return Jet(-self.value, tuple(-g for g in self.grad))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Jet(self.value + o.value, tuple(a + b for a, b in zip(self.grad, o.grad)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Jet(self.value * o.value, tuple(self.value * b + o.value * a for a, b in zip(self.grad, o.grad)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.value:
            raise ZeroDivisionError("jet division by a vanishing value")
        inv = 1 / o.value
        return Jet(self.value * inv, tuple((a * o.value - self.value * b) * inv * inv for a, b in zip(self.grad, o.grad)))

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        out = Jet.constant(1, len(self.grad))
        for _ in range(abs(n)):
            out = out * self
        return out if n >= 0 else 1 / out


@dataclass(frozen=True)
class AtLeast:
    """Order of vanishing known only to be at least ``bound``."""

    bound: int

    def __str__(self):
        return f">={self.bound}"


def vanishing_order(f, variable: str, specialization: Mapping[str, object] | None = None,
                    truncation: int = DEFAULT_TRUNCATION):
    """Order of ``f`` at ``variable = 0`` after specializing the other symbols.

    Returns an ``int`` (negative for poles) or :class:`AtLeast` when the
    numerator vanishes through ``truncation``.
    """
    from .ratfunc import PolarError, as_ratfunc, substitute

    f = as_ratfunc(f)
    specialization = dict(specialization or {})
    specialization.pop(variable, None)
    g = substitute(f, specialization) if specialization else f
    extra = g.free_symbols() - {variable}
    if extra:
        raise ValueError(f"specialization leaves symbols {sorted(extra)} free")
    if g.is_zero():
        raise PolarError("specialization annihilates the function identically")
    num = LocalSeries.from_coefficients(variable, g.num.univariate_coeffs(variable) or [0], truncation)
    den = LocalSeries.from_coefficients(variable, g.den.univariate_coeffs(variable) or [0], truncation)
    if den.is_unknown_zero():
        raise PolarError("specialized denominator vanishes through the truncation order")
    if num.is_unknown_zero():
        return AtLeast(truncation + 1)
    return num.order() - den.order()
