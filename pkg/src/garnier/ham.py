"""The two commuting Hamiltonians, the sixth Painleve Hamiltonian, and
Backlund symmetry checks of the Hamiltonian flows.

Derivatives are taken with first-order jets, so every check is exact
rational evaluation.
"""
from __future__ import annotations

import random
from functools import lru_cache

from .bmap import (
    CheckResult,
    ParamVector,
    PointQP,
    SAMPLE_BOUND,
    canonical_name,
    param_act,
    qp_formula,
    random_params,
    random_point,
)
from .exact import Jet, PolarError, RatFunc, rational, to_str

SYMMETRY_GENERATORS = ("wk0", "wk1", "wkI", "wt1", "wt2", "wa0", "s4")


def _check_s(s1, s2=None):
    bad = [s for s in (s1, s2) if s is not None and (s == 0 or s == 1)]
    if bad or (s2 is not None and s1 == s2):
        raise ValueError(f"excluded independent-variable values s1={s1}, s2={s2}")


def scaled_h1(q1, q2, p1, p2, a: ParamVector):
    """s1(s1-1) H1 as written in the polynomial Hamiltonian form."""
    k0, k1, kI, t1, t2, a0, s1, s2 = a.values()
    d = a.d
    c11 = s1 * (s1 - 1) / (s1 - s2)
    c12 = s1 * (s2 - 1) / (s1 - s2)
    c21 = s2 * (s1 - 1) / (s1 - s2)
    out = (q1 * (q1 - 1) * (q1 - s1) - c11 * q1 * q2) * p1 * p1
    out = out + 2 * q1 * q2 * (q1 + c12) * p1 * p2
    out = out + q1 * q2 * (q2 - c21) * p2 * p2
    brace = ((k0 - d) * q1 * (q1 - 1) + k1 * q1 * (q1 - s1) + t1 * (q1 - 1) * (q1 - s1)
             + t2 * q1 * (q1 + c12) - t1 * c11 * q2)
    out = out - brace * p1
    out = out + ((2 * a0 + kI) * q1 * q2 + t2 * q1 * c21 - t1 * q2 * c12) * p2
    return out + a0 * (a0 + kI) * q1


def _swap(a: ParamVector) -> ParamVector:
    return ParamVector(a.kappa0, a.kappa1, a.kappa_inf, a.theta2, a.theta1, a.alpha0, a.s2, a.s1)


def h1(q1, q2, p1, p2, a: ParamVector):
    return scaled_h1(q1, q2, p1, p2, a) / (a.s1 * (a.s1 - 1))


def h2(q1, q2, p1, p2, a: ParamVector):
    """H1 with q1<->q2, p1<->p2, s1<->s2, theta1<->theta2."""
    return h1(q2, q1, p2, p1, _swap(a))


def scaled_hvi(q, p, s, kappa0, kappa1, kappa_inf, theta, alpha0):
    """s(s-1) H_VI; both theta symbols of the display are read as the slot ``theta``."""
    brace = -(2 * alpha0 + kappa1 + kappa_inf + theta) * q * (q - 1) + kappa1 * q * (q - s) \
        + theta * (q - 1) * (q - s)
    return q * (q - 1) * (q - s) * p * p - brace * p + alpha0 * (alpha0 + kappa_inf) * q


def hvi(q, p, s, kappa0, kappa1, kappa_inf, theta, alpha0):
    return scaled_hvi(q, p, s, kappa0, kappa1, kappa_inf, theta, alpha0) / (s * (s - 1))


def eval_H(which: str, point, a: ParamVector, theta=None):
    """Exact value of ``H1``, ``H2`` or ``HVI`` (the latter on (q1, p1, s1))."""
    q1, q2, p1, p2 = (rational(v) if isinstance(v, (int, str)) else v for v in point)
    if which == "H1":
        _check_s(a.s1, a.s2)
        return h1(q1, q2, p1, p2, a)
    if which == "H2":
        _check_s(a.s1, a.s2)
        return h2(q1, q2, p1, p2, a)
    if which == "HVI":
        _check_s(a.s1)
        th = a.theta1 if theta is None else rational(theta)
        return hvi(q1, p1, a.s1, a.kappa0, a.kappa1, a.kappa_inf, th, a.alpha0)
    raise ValueError(f"unknown Hamiltonian {which!r}")


def decomposition_rhs(q1, q2, p1, p2, a: ParamVector, theta=None):
    """Right side of the H_VI decomposition of s1(s1-1) H1."""
    k0, k1, kI, t1, t2, a0, s1, s2 = a.values()
    th = t1 if theta is None else theta
    out = scaled_hvi(q1, p1, s1, k0, k1, kI, th, a0)
    out = out + (2 * q1 * p1 + q2 * p2 + 2 * a0 + kI) * q1 * q2 * p2
    out = out + s1 * (s1 - 1) / (s1 - s2) * (-q1 * p1 + t1) * q2 * p1
    out = out + s1 * (s2 - 1) / (s1 - s2) * (2 * q1 * p1 - t1) * q2 * p2
    out = out + s2 * (s1 - 1) / (s1 - s2) * (-q2 * p2 * p2 + t2 * (p2 - p1)) * q1
    return out


def hvi_identity_check(rng: random.Random, trials: int = 20, bound: int = SAMPLE_BOUND,
                       theta_shift=0, p_zero: bool = False) -> CheckResult:
    """Check s1(s1-1)H1 = decomposition at random points.

    ``theta_shift`` moves the H_VI slot parameter away from theta1 (negative
    control); ``p_zero`` restricts to p1 = p2 = 0.
    """
    worst = rational(0)
    for i in range(trials):
        a = random_params(rng, bound)
        q1, q2, p1, p2 = random_point(rng, bound)
        if p_zero:
            p1 = p2 = rational(0)
        lhs = scaled_h1(q1, q2, p1, p2, a)
        rhs = decomposition_rhs(q1, q2, p1, p2, a, a.theta1 + theta_shift)
        res = lhs - rhs
        if res:
            return CheckResult("hvi decomposition", False, i + 1, f"residual {to_str(res)}")
    return CheckResult("hvi decomposition", True, trials, f"residual {to_str(worst)}")


def _jets(values, dims: int, offset: int = 0):
    return [Jet.variable(v, offset + i, dims) for i, v in enumerate(values)]


def vector_field(j: int, point, a: ParamVector) -> tuple:
    """(dq1, dq2, dp1, dp2)/ds_j at an exact point."""
    if j not in (1, 2):
        raise ValueError("flow index must be 1 or 2")
    _check_s(a.s1, a.s2)
    q1, q2, p1, p2 = _jets([rational(v) if isinstance(v, (int, str)) else v for v in point], 4)
    H = h1 if j == 1 else h2
    g = H(q1, q2, p1, p2, a).grad
    return (g[2], g[3], -g[0], -g[1])


def swap_point(x) -> PointQP:
    q1, q2, p1, p2 = x
    return PointQP(q2, q1, p2, p1)


def swap_params(a: ParamVector) -> ParamVector:
    return _swap(a)


@lru_cache(maxsize=None)
def symbolic_h(which: str) -> RatFunc:
    a = ParamVector.symbolic()
    q1, q2, p1, p2 = RatFunc.vars("q1", "q2", "p1", "p2")
    return (h1 if which == "H1" else h2)(q1, q2, p1, p2, a)


def params_on_slice(rng: random.Random, d, bound: int = SAMPLE_BOUND) -> ParamVector:
    """Generic parameters with 2 alpha0 + kappa0 + kappa1 + kappa_inf + theta1 + theta2 = d."""
    d = rational(d)
    for _ in range(1000):
        a = random_params(rng, bound)
        a0 = (d - (a.kappa0 + a.kappa1 + a.kappa_inf + a.theta1 + a.theta2)) / 2
        a = ParamVector(a.kappa0, a.kappa1, a.kappa_inf, a.theta1, a.theta2, a0, a.s1, a.s2)
        if a.is_generic():
            return a
    raise RuntimeError("could not draw generic parameters on the slice")


def symmetry_check(g: str, rng: random.Random, trials: int = 20, bound: int = SAMPLE_BOUND,
                   d=None, s_weight: str = "one") -> CheckResult:
    """V_j'(g(x); g(a)) = c dg/ds_j + J_g V_j(x; a) at random exact points.

    j' = j except for sigma4, which exchanges the two flows. ``s_weight`` is
    ``"one"`` (c = 1, the plain symmetry law) or ``"d"`` (c = a.d). With
    ``d`` set, parameters are drawn on the slice where the invariant ``a.d``
    equals it.
    """
    if s_weight not in ("one", "d"):
        raise ValueError("s_weight must be 'one' or 'd'")
    g = canonical_name(g)
    if g not in SYMMETRY_GENERATORS:
        raise ValueError(f"{g} moves s by a Moebius map; its flow transformation law is not specified")
    done = attempts = 0
    while done < trials:
        attempts += 1
        if attempts > 1000:
            raise RuntimeError(f"{g}: too many polar draws")
        a = random_params(rng, bound) if d is None else params_on_slice(rng, d, bound)
        x = random_point(rng, bound)
        # jets in the directions (q1, q2, p1, p2, s1, s2)
        xj = _jets(x, 6)
        s1j, s2j = _jets((a.s1, a.s2), 6, offset=4)
        lift = lambda v: Jet.constant(v, 6)
        aj = ParamVector(*(lift(v) for v in a.values()[:6]), s1j, s2j)
        try:
            img = qp_formula(g, xj, aj)
            b = param_act(g, a)
            y = tuple(v.value for v in img)
            fields_ = {j: vector_field(j, x, a) for j in (1, 2)}
            targets = {j: vector_field(j, y, b) for j in (1, 2)}
        except (PolarError, ZeroDivisionError):
            continue
        for j in (1, 2):
            jp = 3 - j if g == "s4" else j
            V = fields_[j]
            for comp in range(4):
                grad = img[comp].grad
                c = a.d if s_weight == "d" else 1
                rhs = c * grad[3 + j] + sum(grad[k] * V[k] for k in range(4))
                res = targets[jp][comp] - rhs
                if res:
                    return CheckResult(f"symmetry {g}", False, done + 1,
                                       f"flow {j}, component {comp}: residual {to_str(res)}")
        done += 1
    return CheckResult(f"symmetry {g}", True, done)


def swap_symmetry_check(rng: random.Random, trials: int = 20, bound: int = SAMPLE_BOUND) -> CheckResult:
    for i in range(trials):
        a = random_params(rng, bound)
        x = random_point(rng, bound)
        if eval_H("H2", x, a) != eval_H("H1", swap_point(x), swap_params(a)):
            return CheckResult("H1/H2 swap", False, i + 1)
        v2 = vector_field(2, x, a)
        v1 = vector_field(1, swap_point(x), swap_params(a))
        if tuple(v2) != (v1[1], v1[0], v1[3], v1[2]):
            return CheckResult("H1/H2 swap", False, i + 1, "vector fields differ")
    return CheckResult("H1/H2 swap", True, trials)
