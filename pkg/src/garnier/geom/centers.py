"""Dimensions of blow-up centers and the C21 curve."""
from __future__ import annotations

import random

from ..bmap import ParamVector, PolarError, apply_qr, param_act, random_params
from ..exact import Jet, rational, random_rational
from ..lattice import X10
from .charts import CHARTS, c20_point, c21_curve
from .limits import affine_part, arc, base_limit, jet_rank, nullspace, with_retry

GEOM_BOUND = 997


def _free_jets(rng: random.Random, bound: int = GEOM_BOUND) -> list:
    return [Jet.variable(random_rational(rng, bound), i, 3) for i in range(3)]


def center_dimension(k: int, params: ParamVector | None = None, rng: random.Random | None = None) -> int:
    """Dimension of C_k, computed as the rank of the image of the exceptional divisor E_k.

    For a center inside an earlier exceptional divisor, the image is taken in
    the earlier chart; otherwise in P2 x P2.
    """
    rng = rng or random.Random(k)
    a = params or random_params(rng, GEOM_BOUND)
    chart = CHARTS[k]
    free = _free_jets(rng)
    if chart.prior_chart is not None:
        coords = list(free)
        coords.insert(chart.exceptional_slot, rational(0))
        return jet_rank(chart.to_prior(coords, a))

    def run(t):
        return jet_rank(affine_part(base_limit(arc(k, free, a, t))))

    return with_retry(run)


def stated_dimension(k: int) -> int:
    if k > X10.K:
        raise ValueError("stated dimensions cover C1..C10")
    return X10.center_dims[k - 1]


def _fit_rational(ts, ys, degree: int = 2):
    """Coefficients (num, den) of y = N(t)/D(t) with deg N, deg D <= degree, or None."""
    rows = []
    for t, y in zip(ts, ys):
        rows.append([t ** i for i in range(degree + 1)] + [-y * t ** i for i in range(degree + 1)])
    basis = nullspace(rows, 2 * (degree + 1))
    if len(basis) != 1:
        return None
    v = basis[0]
    return v[: degree + 1], v[degree + 1:]


def c21_center(rng: random.Random | None = None, samples: int = 12, params: ParamVector | None = None) -> dict:
    """Image of C20 under w_a0, fitted as a curve over t = R2/R1 and checked.

    Returns a report with the fitted parametrisation, a comparison with the
    closed form used by chart U21, and the check that w_a0 maps it back to C20.
    """
    rng = rng or random.Random(21)
    a = params or random_params(rng, GEOM_BOUND)
    b = param_act("wa0", a)
    ts, q1s, q2s, r0s = [], [], [], []
    independent = True
    for _ in range(samples):
        free = [random_rational(rng, GEOM_BOUND) for _ in range(3)]

        def run(trunc, free=free):
            x = arc(20, free, a, trunc)
            y = apply_qr("wa0", x, a)
            return base_limit(y)

        (iq, Q), (ir, R) = with_retry(run)
        t = R[2] / R[1]
        ts.append(t)
        q1s.append(Q[1] / Q[0])
        q2s.append(Q[2] / Q[0])
        r0s.append(R[0])
        # the limit must not depend on the transverse chart coordinates
        free2 = [random_rational(rng, GEOM_BOUND), random_rational(rng, GEOM_BOUND), free[2]]
        (_, Q2), (_, R2) = with_retry(run, free2)
        if Q2 != Q or R2 != R:
            independent = False
    fit1 = _fit_rational(ts, q1s)
    fit2 = _fit_rational(ts, q2s)
    closed = all(c21_curve(t, b) == (x1, x2) for t, x1, x2 in zip(ts, q1s, q2s))
    # w_a0 sends C21 (in X_b) back to C20 (in X_a)
    back = True
    c1, c2 = c20_point(a)
    for _ in range(4):
        free = [random_rational(rng, GEOM_BOUND) for _ in range(3)]

        def run(trunc, free=free):
            return base_limit(apply_qr("wa0", arc(21, free, b, trunc), b))

        (iq, Q), (ir, R) = with_retry(run)
        if not (R[0] == 0 and Q[0] and Q[1] / Q[0] == c1 and Q[2] / Q[0] == c2):
            back = False
    return {
        "R0_vanishes": all(r == 0 for r in r0s),
        "curve": independent,
        "fit_q1": fit1 is not None,
        "fit_q2": fit2 is not None,
        "matches_closed_form": closed,
        "maps_back_to_c20": back,
        "closed_form": "q1 = s1/(c1 (1+t)^2), q2 = s2 t^2/(c2 (1+t)^2), R0 = 0",
    }
