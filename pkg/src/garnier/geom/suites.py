"""Intersection-lattice and chart consistency checks."""
from __future__ import annotations

import random

from ..bmap import CheckResult, random_params
from ..exact import PolarError, random_rational, rational
from ..lattice import X10, anticanonical, get_model, pairing
from .centers import GEOM_BOUND, center_dimension, stated_dimension
from .charts import CHARTS


def prop1_intersection_suite(model, rng: random.Random | None = None) -> CheckResult:
    """Rank, the diagonal basis pairing, and -K against the center dimensions."""
    model = get_model(model)
    rng = rng or random.Random(3)
    if model.rank != 2 + model.K:
        return CheckResult(f"intersection {model.name}", False, 1, "rank")
    n = model.rank
    for i in range(n):
        for j in range(n):
            want = 0 if i != j else (1 if i < 2 else -1)
            got = pairing(model.basis_divisor(i), model.basis_curve(j))
            if got != want:
                return CheckResult(f"intersection {model.name}", False, 1,
                                   f"<{model.divisor_basis()[i]}, {model.curve_basis()[j]}> = {got}")
    dims = []
    for k in range(1, model.K + 1):
        d = center_dimension(k, rng=rng)
        if k <= X10.K and d != stated_dimension(k):
            return CheckResult(f"intersection {model.name}", False, 1,
                               f"C{k} has dimension {d}, stated {stated_dimension(k)}")
        dims.append(d)
    if tuple(dims) != tuple(model.center_dims):
        return CheckResult(f"intersection {model.name}", False, 1, f"center dimensions {dims}")
    K = anticanonical(model)
    want = [rational(3), rational(3)] + [rational(d - 3) for d in dims]
    if list(K.coeffs) != want:
        return CheckResult(f"intersection {model.name}", False, 1, f"-K = {K}")
    return CheckResult(f"intersection {model.name}", True, 1, f"-K = {K}")


def chart_roundtrip(k: int, rng: random.Random | None = None, trials: int = 100) -> CheckResult:
    """from_base after to_base is the identity at random chart points."""
    rng = rng or random.Random(k)
    chart = CHARTS[k]
    done = 0
    while done < trials:
        a = random_params(rng, GEOM_BOUND)
        c = tuple(random_rational(rng, GEOM_BOUND) for _ in range(4))
        try:
            x = chart.to_base(c, a)
            back = chart.from_base(x, a)
        except (ZeroDivisionError, PolarError):
            continue
        if tuple(back) != c:
            return CheckResult(f"chart U{k}", False, done + 1, f"{c} -> {back}")
        done += 1
    return CheckResult(f"chart U{k}", True, done)
