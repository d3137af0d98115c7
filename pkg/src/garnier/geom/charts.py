"""Blow-up chart atlas U1..U21.

Each chart maps its four coordinates to the base affine coordinates
(q1, q2, r1, r2) of P2 x P2; the exceptional hypersurface is the vanishing
of one chart coordinate. Functions are written over generic field elements
so they evaluate on rationals, series, jets and symbolic values alike.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from ..bmap import A12, A12s, ParamVector, Q12, Q12s, R12


def c20_point(a: ParamVector):
    """(q1, q2) of the C20 curve: the intersection of Q12 = 0 and Q12s = 0."""
    s1, s2 = a.s1, a.s2
    c1 = -s1 * (s2 - 1) / (s1 - s2)
    c2 = s2 * (s1 - 1) / (s1 - s2)
    return c1, c2


def c21_curve(t, a: ParamVector):
    """(q1, q2) on C21 over the point (R0:R1:R2) = (0:1:t)."""
    c1, c2 = c20_point(a)
    w = (1 + t) * (1 + t)
    return a.s1 / (c1 * w), a.s2 * t * t / (c2 * w)


def _u7_to_base(q1, u, v, w):
    q2 = 1 - q1 + v * u
    r1 = 1 / u
    r2 = (q2 / q1 - w * u) / u
    return q1, q2, r1, r2


def _u9_to_base(q1, u, v, w, a):
    q2 = a.s2 * (1 + v * u - q1 / a.s1)
    r1 = 1 / u
    r2 = r1 * (a.s1 * q2 / (a.s2 * q1) - w * u)
    return q1, q2, r1, r2


def _to_base(k: int, c, a: ParamVector):
    k0, k1, kI, t1, t2, a0, s1, s2 = a.values()
    if k == 1:
        u, q2, v, r2 = c
        return u, q2, u * v, r2
    if k == 2:
        u, q2, v, r2 = c
        return u, q2, t1 + u * v, r2
    if k == 3:
        q1, u, r1, v = c
        return q1, u, r1, u * v
    if k == 4:
        q1, u, r1, v = c
        return q1, u, r1, t2 + u * v
    if k in (5, 6):
        u, y, r1, v = c
        shift = a0 if k == 5 else a0 + kI
        return 1 / u, y / u, r1, v * u - r1 - shift
    if k == 7:
        return _u7_to_base(*c)
    if k == 8:
        q1, u, v, w = c
        return _u7_to_base(q1, u, k1 * q1 + v * u, w)
    if k == 9:
        return _u9_to_base(*c, a)
    if k == 10:
        q1, u, v, w = c
        return _u9_to_base(q1, u, k0 * q1 / s1 + v * u, w, a)
    if k == 11:
        u, v, r1, r2 = c
        return 1 / u, v, r1, r2
    if k == 12:
        u, v, r1, r2 = c
        return v, 1 / u, r1, r2
    if k == 13:
        u, v, r1, r2 = c
        return u, u * v, r1, r2
    if k in (14, 15):
        x, w, v, u = c
        q2 = 1 + w * u if k == 14 else s2 * (1 + w * u)
        return x * u, q2, v, 1 / u
    if k in (16, 17):
        x, w, v, u = c
        q1 = 1 + w * u if k == 16 else s1 * (1 + w * u)
        return q1, x * u, 1 / u, v
    if k in (18, 19):
        x, w, v, u = c
        ratio = 1 if k == 18 else s2 / s1
        q1 = 1 / (x * u)
        return q1, (w * u - ratio) * q1, 1 / u, v - 1 / u
    if k in (20, 21):
        v, w, u, t = c
        f1, f2 = c20_point(a) if k == 20 else c21_curve(t, a)
        return f1 + v * u, f2 + w * u, 1 / u, t / u
    raise ValueError(f"no chart U{k}")


def _from_base(k: int, x, a: ParamVector):
    q1, q2, r1, r2 = x
    k0, k1, kI, t1, t2, a0, s1, s2 = a.values()
    if k == 1:
        return q1, q2, r1 / q1, r2
    if k == 2:
        return q1, q2, (r1 - t1) / q1, r2
    if k == 3:
        return q1, q2, r1, r2 / q2
    if k == 4:
        return q1, q2, r1, (r2 - t2) / q2
    if k in (5, 6):
        R = R12(r1, r2, a0) if k == 5 else R12(r1, r2, a0) + kI
        return 1 / q1, q2 / q1, r1, q1 * R
    if k in (7, 8):
        v7 = Q12(q1, q2) * r1
        w7 = A12(q1, q2, r1, r2) * r1
        if k == 7:
            return q1, 1 / r1, v7, w7
        return q1, 1 / r1, (v7 - k1 * q1) * r1, w7
    if k in (9, 10):
        v9 = Q12s(q1, q2, s1, s2) * r1
        w9 = A12s(q1, q2, r1, r2, s1, s2) * r1
        if k == 9:
            return q1, 1 / r1, v9, w9
        return q1, 1 / r1, (v9 - k0 * q1 / s1) * r1, w9
    if k == 11:
        return 1 / q1, q2, r1, r2
    if k == 12:
        return 1 / q2, q1, r1, r2
    if k == 13:
        return q1, q2 / q1, r1, r2
    if k in (14, 15):
        w = (q2 - 1) if k == 14 else (q2 / s2 - 1)
        return q1 * r2, w * r2, r1, 1 / r2
    if k in (16, 17):
        w = (q1 - 1) if k == 16 else (q1 / s1 - 1)
        return q2 * r1, w * r1, r2, 1 / r1
    if k in (18, 19):
        ratio = 1 if k == 18 else s2 / s1
        return r1 / q1, (q2 / q1 + ratio) * r1, r2 + r1, 1 / r1
    if k in (20, 21):
        t = r2 / r1
        f1, f2 = c20_point(a) if k == 20 else c21_curve(t, a)
        return (q1 - f1) * r1, (q2 - f2) * r1, 1 / r1, t
    raise ValueError(f"no chart U{k}")


def _to_prior(k: int, c, a: ParamVector):
    """Coordinates in the chart of the earlier blow-up containing this center."""
    q1, u, v, w = c
    if k == 8:
        return q1, u, a.kappa1 * q1 + v * u, w
    if k == 10:
        return q1, u, a.kappa0 * q1 / a.s1 + v * u, w
    raise ValueError(f"U{k} has no prior chart")


COORDS = {
    1: ("u1", "q2", "v1", "r2"),
    2: ("u2", "q2", "v2", "r2"),
    3: ("q1", "u3", "r1", "v3"),
    4: ("q1", "u4", "r1", "v4"),
    5: ("u5", "q21", "r1", "v5"),
    6: ("u6", "q21", "r1", "v6"),
    7: ("q1", "u7", "v7", "w7"),
    8: ("q1", "u8", "v8", "w7"),
    9: ("q1", "u9", "v9", "w9"),
    10: ("q1", "u10", "v10", "w9"),
    11: ("u11", "v11", "r1", "r2"),
    12: ("u12", "v12", "r1", "r2"),
    13: ("u13", "v13", "r1", "r2"),
    14: ("x14", "w14", "v14", "u14"),
    15: ("x15", "w15", "v15", "u15"),
    16: ("x16", "w16", "v16", "u16"),
    17: ("x17", "w17", "v17", "u17"),
    18: ("x18", "w18", "v18", "u18"),
    19: ("x19", "w19", "v19", "u19"),
    20: ("v20", "w20", "u20", "r21"),
    21: ("v21", "w21", "u21", "r21"),
}

CENTERS = {
    1: "q1 = r1 = 0",
    2: "q1 = r1 - theta1 = 0",
    3: "q2 = r2 = 0",
    4: "q2 = r2 - theta2 = 0",
    5: "Q0 = R12 = 0",
    6: "Q0 = R12 + kappa_inf = 0",
    7: "R0 = Q12 = A12 = 0",
    8: "u7 = v7 - kappa1 q1 = 0",
    9: "R0 = Q12s = A12s = 0",
    10: "u9 = v9 - kappa0 q1/s1 = 0",
    11: "Q0 = Q2 = 0",
    12: "Q0 = Q1 = 0",
    13: "q1 = q2 = 0",
    14: "q1 = q2 - 1 = R0 = R1 = 0",
    15: "q1 = q2/s2 - 1 = R0 = R1 = 0",
    16: "q2 = q1 - 1 = R0 = R2 = 0",
    17: "q2 = q1/s1 - 1 = R0 = R2 = 0",
    18: "Q0 = Q1 + Q2 = R0 = R1 + R2 = 0",
    19: "Q0 = Q1/s1 + Q2/s2 = R0 = R1 + R2 = 0",
    20: "q1 - c1 = q2 - c2 = R0 = 0, c1 = -s1(s2-1)/(s1-s2), c2 = s2(s1-1)/(s1-s2)",
    21: "q1 = s1/(c1(1+t)^2), q2 = s2 t^2/(c2(1+t)^2), R0 = 0, t = R2/R1",
}

PRIOR = {8: 7, 10: 9}


@dataclass(frozen=True)
class BlowupChart:
    index: int
    chart_coords: tuple
    exceptional_eq: str
    prior_chart: Optional[int]
    center: str

    @property
    def exceptional_slot(self) -> int:
        return self.chart_coords.index(self.exceptional_eq)

    def to_base(self, coords, a: ParamVector) -> tuple:
        return _to_base(self.index, tuple(coords), a)

    def from_base(self, x, a: ParamVector) -> tuple:
        return _from_base(self.index, tuple(x), a)

    def to_prior(self, coords, a: ParamVector) -> tuple:
        return _to_prior(self.index, tuple(coords), a)


def _exceptional_name(k: int) -> str:
    return next(n for n in COORDS[k] if n == f"u{k}")


def chart_to_base(k: int) -> BlowupChart:
    if k not in COORDS:
        raise ValueError(f"chart index must be in 1..21, got {k}")
    return BlowupChart(k, COORDS[k], _exceptional_name(k), PRIOR.get(k), CENTERS[k])


CHARTS = {k: chart_to_base(k) for k in COORDS}


def symbolic_to_base(k: int, params: ParamVector | None = None) -> tuple:
    """to_base as RatFunc expressions in the chart coordinates (for audit dumps)."""
    from ..exact import RatFunc

    chart = CHARTS[k]
    a = params if params is not None else ParamVector.symbolic()
    coords = tuple(RatFunc.var(n) for n in chart.chart_coords)
    return tuple(RatFunc._coerce(v) for v in chart.to_base(coords, a))


def atlas_dump(params: ParamVector | None = None) -> list:
    out = []
    for k in sorted(CHARTS):
        chart = CHARTS[k]
        exprs = symbolic_to_base(k, params)
        out.append({
            "index": k,
            "coords": list(chart.chart_coords),
            "exceptional": chart.exceptional_eq,
            "prior_chart": chart.prior_chart,
            "center": chart.center,
            "to_base": {n: str(e) for n, e in zip(("q1", "q2", "r1", "r2"), exprs)},
        })
    return out
