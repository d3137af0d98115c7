"""Arcs, homogeneous limits and exact ranks."""
from __future__ import annotations

from ..exact import Jet, LocalSeries, PrecisionLoss, Rational, rational

EPS = "eps"
TRUNCATIONS = [8, 16, 32]


def set_truncation(n: int) -> None:
    """Starting truncation for arc computations (doubled twice on precision loss)."""
    if n < 1:
        raise ValueError("truncation must be positive")
    TRUNCATIONS[:] = [n, 2 * n, 4 * n]


def arc(k: int, free, a, truncation: int) -> tuple:
    """Base coordinates of the arc u_k = eps with the other chart coordinates fixed."""
    from .charts import CHARTS

    chart = CHARTS[k]
    coords = list(free)
    coords.insert(chart.exceptional_slot, LocalSeries.gen(EPS, truncation))
    return chart.to_base(coords, a)


def _val(x) -> float:
    if isinstance(x, LocalSeries):
        return float("inf") if x.is_unknown_zero() else x.valuation
    return float("inf") if _zero(x) else 0


def _zero(x) -> bool:
    if isinstance(x, Jet):
        return not x.value and not any(x.grad)
    return not x


def _coef(x, m: int):
    if isinstance(x, LocalSeries):
        return x.coefficient(m)
    return x if m == 0 else rational(0)


def projective_limit(values) -> tuple:
    """Limit of the point (values...) in projective space, scaled so the leading entry is 1.

    Returns ``(index, point)`` with ``point[index] == 1``.
    """
    vals = [_val(v) for v in values]
    m = min(vals)
    if m == float("inf"):
        raise PrecisionLoss("all homogeneous coordinates vanish to the known precision")
    m = int(m)
    lead = vals.index(m)
    coefs = [_coef(v, m) for v in values]
    c = coefs[lead]
    return lead, tuple(x / c for x in coefs)


def base_limit(x) -> tuple:
    """((Q0:Q1:Q2), (R0:R1:R2)) limit of an affine base arc (q1, q2, r1, r2)."""
    q1, q2, r1, r2 = x
    one = rational(1)
    iq, Q = projective_limit((one, q1, q2))
    ir, R = projective_limit((one, r1, r2))
    return (iq, Q), (ir, R)


def affine_part(lim) -> tuple:
    """The four affine coordinates of a base limit in its leading chart."""
    (iq, Q), (ir, R) = lim
    return tuple(Q[i] for i in range(3) if i != iq) + tuple(R[i] for i in range(3) if i != ir)


def finite_limit(values):
    """Limits of series that all have non-negative valuation; ``None`` if any pole."""
    out = []
    for v in values:
        if not isinstance(v, LocalSeries):
            out.append(v)
            continue
        if v.is_unknown_zero():
            out.append(rational(0))
            continue
        if v.valuation < 0:
            return None
        out.append(v.coeffs[0] if v.valuation == 0 else rational(0))
    return tuple(out)


def rank(rows) -> int:
    """Exact rank of a rational matrix."""
    m = [[rational(x) for x in r] for r in rows]
    if not m:
        return 0
    n = len(m[0])
    rk = 0
    for col in range(n):
        piv = next((r for r in range(rk, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = 1 / m[rk][col]
        for r in range(rk + 1, len(m)):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        rk += 1
    return rk


def jet_rank(values) -> int:
    rows = []
    for v in values:
        if isinstance(v, Jet):
            rows.append(v.grad)
    return rank(rows)


def nullspace(rows, ncols: int) -> list:
    """Basis of the exact right nullspace of a rational matrix."""
    m = [[rational(x) for x in r] for r in rows]
    pivots = []
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = 1 / m[rk][col]
        m[rk] = [x * inv for x in m[rk]]
        for r in range(len(m)):
            if r != rk and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        pivots.append(col)
        rk += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [rational(0)] * ncols
        vec[fcol] = rational(1)
        for i, pcol in enumerate(pivots):
            vec[pcol] = -m[i][fcol]
        basis.append(vec)
    return basis


def with_retry(fn, *args, **kw):
    """Run ``fn(truncation, ...)`` with growing truncation until no PrecisionLoss."""
    last = None
    for t in TRUNCATIONS:
        try:
            return fn(t, *args, **kw)
        except PrecisionLoss as exc:
            last = exc
    raise last


def is_rational(x) -> bool:
    return isinstance(x, (int, Rational))
