"""Backlund generators as exact rational maps, with their parameter actions.

Every formula is written once as a plain function of field elements, so the
same code evaluates on rationals, on symbolic ``RatFunc`` values, on
``LocalSeries`` (arcs) and on ``Jet`` values (derivatives).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, fields, replace
from typing import NamedTuple, Sequence

from .exact import LocalSeries, PolarError, RatFunc, Rational, random_rational, rational, to_str
from .lattice import CONVENTIONS, DISPLAY_NAMES, GENERATORS, canonical_name, parse_word

PARAM_NAMES = ("kappa0", "kappa1", "kappa_inf", "theta1", "theta2", "alpha0", "s1", "s2")


@dataclass(frozen=True)
class ParamVector:
    kappa0: object
    kappa1: object
    kappa_inf: object
    theta1: object
    theta2: object
    alpha0: object
    s1: object
    s2: object

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, (int, str)) or type(v).__name__ == "Fraction":
                object.__setattr__(self, f.name, rational(v))

    @property
    def d(self):
        return 2 * self.alpha0 + self.kappa0 + self.kappa1 + self.kappa_inf + self.theta1 + self.theta2

    @classmethod
    def symbolic(cls) -> "ParamVector":
        return cls(*(RatFunc.var(n) for n in PARAM_NAMES))

    @classmethod
    def from_dict(cls, data: dict) -> "ParamVector":
        missing = [n for n in PARAM_NAMES if n not in data]
        if missing:
            raise ValueError(f"missing parameters: {missing}")
        extra = set(data) - set(PARAM_NAMES) - {"d"}
        if extra:
            raise ValueError(f"unknown parameters: {sorted(extra)}")
        return cls(*(rational(data[n]) for n in PARAM_NAMES))

    def values(self) -> tuple:
        return tuple(getattr(self, n) for n in PARAM_NAMES)

    def to_json(self) -> dict:
        out = {n: to_str(getattr(self, n)) for n in PARAM_NAMES}
        out["d"] = to_str(self.d)
        return out

    def base_quantities(self) -> tuple:
        """Quantities that must be nonzero for a generic parameter."""
        return (self.kappa0, self.kappa1, self.kappa_inf, self.theta1, self.theta2,
                self.alpha0, self.alpha0 + self.kappa_inf)

    def s_generic(self) -> bool:
        s1, s2 = self.s1, self.s2
        return s1 not in (0, 1) and s2 not in (0, 1) and s1 != s2

    def is_generic(self) -> bool:
        """Membership in the generic set: s-conditions and nonvanishing of the
        base quantities of the parameter and of every single-generator image."""
        if not self.s_generic() or not all(self.base_quantities()):
            return False
        for g in GENERATORS:
            img = param_act(g, self)
            if not img.s_generic() or not all(img.base_quantities()):
                return False
        return True


class PointQR(NamedTuple):
    q1: object
    q2: object
    r1: object
    r2: object


class PointQP(NamedTuple):
    q1: object
    q2: object
    p1: object
    p2: object


def qp_to_qr(x) -> PointQR:
    q1, q2, p1, p2 = x
    return PointQR(q1, q2, q1 * p1, q2 * p2)


def qr_to_qp(x) -> PointQP:
    q1, q2, r1, r2 = x
    return PointQP(q1, q2, _div(r1, q1, "q1", "qr->qp"), _div(r2, q2, "q2", "qr->qp"))


# -- named auxiliary expressions ------------------------------------------------


def Q12(q1, q2):
    return q1 + q2 - 1


def Q12s(q1, q2, s1, s2):
    return q1 / s1 + q2 / s2 - 1


def P12(q1, q2, p1, p2, alpha0):
    return q1 * p1 + q2 * p2 + alpha0


def R12(r1, r2, alpha0):
    return r1 + r2 + alpha0


def A12(q1, q2, r1, r2):
    return q2 / q1 - r2 / r1


def A12s(q1, q2, r1, r2, s1, s2):
    return (s1 * q2) / (s2 * q1) - r2 / r1


# -- helpers -------------------------------------------------------------------


def _is_zero(x) -> bool:
    if isinstance(x, RatFunc):
        return x.is_zero()
    if isinstance(x, LocalSeries):
        return False
    return not x


def _div(num, den, label: str, g: str):
    if _is_zero(den):
        raise PolarError(f"{g}: denominator {label} vanishes")
    return num / den


# -- parameter actions --------------------------------------------------------------


def param_act(g: str, a: ParamVector) -> ParamVector:
    g = canonical_name(g)
    k0, k1, kI, t1, t2, a0, s1, s2 = a.values()
    if g == "wk0":
        return ParamVector(-k0, k1, kI, t1, t2, a0 + k0, s1, s2)
    if g == "wk1":
        return ParamVector(k0, -k1, kI, t1, t2, a0 + k1, s1, s2)
    if g == "wkI":
        return ParamVector(k0, k1, -kI, t1, t2, a0 + kI, s1, s2)
    if g == "wt1":
        return ParamVector(k0, k1, kI, -t1, t2, a0 + t1, s1, s2)
    if g == "wt2":
        return ParamVector(k0, k1, kI, t1, -t2, a0 + t2, s1, s2)
    if g == "wa0":
        d = a.d
        return ParamVector(d - k0, d - k1, -kI, -t1, -t2, -a0, s1, s2)
    if g == "s1":
        return ParamVector(k1, k0, kI, t1, t2, a0, _div(1, s1, "s1", g), _div(1, s2, "s2", g))
    if g == "s2":
        return ParamVector(k0, kI, k1, t1, t2, a0, _div(s1, s1 - 1, "s1-1", g), _div(s2, s2 - 1, "s2-1", g))
    if g == "s3":
        return ParamVector(k0, k1, t1, kI, t2, a0, _div(1, s1, "s1", g), _div(s2, s1, "s1", g))
    if g == "s4":
        return ParamVector(k0, k1, kI, t2, t1, a0, s2, s1)
    raise AssertionError(g)


# -- (q, r) formulas -----------------------------------------------------------------


def qr_formula(g: str, x, a: ParamVector) -> PointQR:
    g = canonical_name(g)
    q1, q2, r1, r2 = x
    k0, k1, kI, t1, t2, a0, s1, s2 = a.values()
    if g == "wk0":
        den = Q12s(q1, q2, s1, s2)
        return PointQR(q1, q2, r1 - _div(k0 * q1, s1 * den, "Q12s", g), r2 - _div(k0 * q2, s2 * den, "Q12s", g))
    if g == "wk1":
        den = Q12(q1, q2)
        return PointQR(q1, q2, r1 - _div(k1 * q1, den, "Q12", g), r2 - _div(k1 * q2, den, "Q12", g))
    if g == "wkI":
        return PointQR(q1, q2, r1, r2)
    if g == "wt1":
        return PointQR(q1, q2, r1 - t1, r2)
    if g == "wt2":
        return PointQR(q1, q2, r1, r2 - t2)
    if g == "wa0":
        R = R12(r1, r2, a0)
        RR = R * (R + kI)
        if _is_zero(R):
            raise PolarError(f"{g}: denominator R12 vanishes")
        if _is_zero(R + kI):
            raise PolarError(f"{g}: denominator R12+kappa_inf vanishes")
        return PointQR(
            _div(s1 * r1 * (r1 - t1), q1 * RR, "q1", g),
            _div(s2 * r2 * (r2 - t2), q2 * RR, "q2", g),
            -r1,
            -r2,
        )
    if g == "s1":
        return PointQR(_div(q1, s1, "s1", g), _div(q2, s2, "s2", g), r1, r2)
    if g == "s2":
        Q = Q12(q1, q2)
        R = R12(r1, r2, a0)
        return PointQR(_div(q1, Q, "Q12", g), _div(q2, Q, "Q12", g), r1 - q1 * R, r2 - q2 * R)
    if g == "s3":
        return PointQR(_div(1, q1, "q1", g), -_div(q2, q1, "q1", g), -R12(r1, r2, a0), r2)
    if g == "s4":
        return PointQR(q2, q1, r2, r1)
    raise AssertionError(g)


# -- (q, p) formulas -----------------------------------------------------------------


def qp_formula(g: str, x, a: ParamVector) -> PointQP:
    g = canonical_name(g)
    q1, q2, p1, p2 = x
    k0, k1, kI, t1, t2, a0, s1, s2 = a.values()
    if g == "wk0":
        den = Q12s(q1, q2, s1, s2)
        return PointQP(q1, q2, p1 - _div(k0, s1 * den, "Q12s", g), p2 - _div(k0, s2 * den, "Q12s", g))
    if g == "wk1":
        den = Q12(q1, q2)
        return PointQP(q1, q2, p1 - _div(k1, den, "Q12", g), p2 - _div(k1, den, "Q12", g))
    if g == "wkI":
        return PointQP(q1, q2, p1, p2)
    if g == "wt1":
        return PointQP(q1, q2, p1 - _div(t1, q1, "q1", g), p2)
    if g == "wt2":
        return PointQP(q1, q2, p1, p2 - _div(t2, q2, "q2", g))
    if g == "wa0":
        P = P12(q1, q2, p1, p2, a0)
        if _is_zero(P):
            raise PolarError(f"{g}: denominator P12 vanishes")
        if _is_zero(P + kI):
            raise PolarError(f"{g}: denominator P12+kappa_inf vanishes")
        PP = P * (P + kI)
        nq1 = _div(s1 * p1 * (q1 * p1 - t1), PP, "P12(P12+kappa_inf)", g)
        nq2 = _div(s2 * p2 * (q2 * p2 - t2), PP, "P12(P12+kappa_inf)", g)
        return PointQP(nq1, nq2, -_div(q1 * p1, nq1, "new q1", g), -_div(q2 * p2, nq2, "new q2", g))
    if g == "s1":
        return PointQP(_div(q1, s1, "s1", g), _div(q2, s2, "s2", g), s1 * p1, s2 * p2)
    if g == "s2":
        Q = Q12(q1, q2)
        P = P12(q1, q2, p1, p2, a0)
        return PointQP(_div(q1, Q, "Q12", g), _div(q2, Q, "Q12", g), Q * (p1 - P), Q * (p2 - P))
    if g == "s3":
        return PointQP(_div(1, q1, "q1", g), -_div(q2, q1, "q1", g), -q1 * P12(q1, q2, p1, p2, a0), -q1 * p2)
    if g == "s4":
        return PointQP(q2, q1, p2, p1)
    raise AssertionError(g)


def _lift(x) -> tuple:
    return tuple(rational(v) if isinstance(v, (int, str)) else v for v in x)


def apply_qr(g: str, x, a: ParamVector) -> PointQR:
    return qr_formula(g, PointQR(*_lift(x)), a)


def apply_qp(g: str, x, a: ParamVector) -> PointQP:
    return qp_formula(g, PointQP(*_lift(x)), a)


class WordPolarError(PolarError):
    def __init__(self, step: int, generator: str, message: str):
        super().__init__(f"step {step} ({generator}): {message}")
        self.step = step
        self.generator = generator


def word_order(word, convention: str = "right_first") -> list:
    """Generators in the order they act on points."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    names = parse_word(word)
    return list(reversed(names)) if convention == "right_first" else names


def apply_word(word, x, a: ParamVector, convention: str = "right_first", coords: str = "qr"):
    """Apply a word to a point, threading the parameters; returns (point, params)."""
    step_fn = apply_qr if coords == "qr" else apply_qp
    for step, g in enumerate(word_order(word, convention)):
        try:
            x = step_fn(g, x, a)
        except PolarError as exc:
            raise WordPolarError(step, g, str(exc)) from exc
        a = param_act(g, a)
    return x, a


def param_word(word, a: ParamVector, convention: str = "right_first") -> ParamVector:
    for g in word_order(word, convention):
        a = param_act(g, a)
    return a


# -- sampling ---------------------------------------------------------------------

SAMPLE_BOUND = 10**6
MAX_ATTEMPTS = 1000


def random_params(rng: random.Random, bound: int = SAMPLE_BOUND, max_attempts: int = MAX_ATTEMPTS) -> ParamVector:
    for _ in range(max_attempts):
        a = ParamVector(*(random_rational(rng, bound) for _ in PARAM_NAMES))
        if a.is_generic():
            return a
    raise RuntimeError("could not draw generic parameters")


def random_point(rng: random.Random, bound: int = SAMPLE_BOUND) -> tuple:
    return tuple(random_rational(rng, bound) for _ in range(4))


# -- checks -------------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    trials: int
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "trials": self.trials, "detail": self.detail}


def involution_check(g: str, rng: random.Random, trials: int = 100, bound: int = SAMPLE_BOUND,
                     coords: str = "qr") -> CheckResult:
    g = canonical_name(g)
    step = apply_qr if coords == "qr" else apply_qp
    done = attempts = 0
    while done < trials:
        attempts += 1
        if attempts > MAX_ATTEMPTS * max(1, trials // 10):
            raise RuntimeError(f"{g}: too many polar draws")
        a = random_params(rng, bound)
        x = random_point(rng, bound)
        try:
            y = step(g, x, a)
            b = param_act(g, a)
            z = step(g, y, b)
        except PolarError:
            continue
        c = param_act(g, b)
        if tuple(z) != tuple(x) or c != a:
            return CheckResult(f"involution {g}", False, done + 1,
                               f"x={[to_str(v) for v in x]} params={a.to_json()} -> {[to_str(v) for v in z]}")
        done += 1
    return CheckResult(f"involution {g}", True, done)


def consistency_qp_qr(g: str, rng: random.Random, trials: int = 5, bound: int = SAMPLE_BOUND) -> CheckResult:
    """The (q, p) formula equals the (q, r) formula conjugated by r_i = q_i p_i."""
    g = canonical_name(g)
    done = attempts = 0
    names = ("q1", "q2", "p1", "p2")
    while done < trials:
        attempts += 1
        if attempts > MAX_ATTEMPTS:
            raise RuntimeError(f"{g}: too many polar draws")
        a = random_params(rng, bound)
        x = random_point(rng, bound)
        try:
            direct = apply_qp(g, x, a)
            via = qr_to_qp(apply_qr(g, qp_to_qr(x), a))
        except PolarError:
            continue
        for name, u, v in zip(names, direct, via):
            if u != v:
                return CheckResult(f"consistency {g}", False, done + 1,
                                   f"coordinate {name}: table (q,p) gives {to_str(u)}, (q,r) gives {to_str(v)}")
        done += 1
    return CheckResult(f"consistency {g}", True, done)


def genericity_check(g: str, rng: random.Random, trials: int = 100, bound: int = SAMPLE_BOUND) -> CheckResult:
    g = canonical_name(g)
    for i in range(trials):
        a = random_params(rng, bound)
        if not param_act(g, a).is_generic():
            return CheckResult(f"genericity {g}", False, i + 1, f"params={a.to_json()}")
    return CheckResult(f"genericity {g}", True, trials)


COORD_NAMES = {"qr": ("q1", "q2", "r1", "r2"), "qp": ("q1", "q2", "p1", "p2")}


def symbolic_image(g: str, coords: str = "qr", params: ParamVector | None = None) -> tuple:
    names = COORD_NAMES[coords]
    x = tuple(RatFunc.var(n) for n in names)
    a = params if params is not None else ParamVector.symbolic()
    fn = qr_formula if coords == "qr" else qp_formula
    return tuple(RatFunc._coerce(v) for v in fn(g, x, a))


def jacobian(g: str, coords: str = "qr", params: ParamVector | None = None) -> tuple:
    """4x4 matrix of partial derivatives d(image_i)/d(coord_j)."""
    names = COORD_NAMES[coords]
    img = symbolic_image(g, coords, params)
    return tuple(tuple(f.derivative(n) for n in names) for f in img)


def display(g: str) -> str:
    return DISPLAY_NAMES[canonical_name(g)]
