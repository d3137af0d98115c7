"""Geometric pullback of Picard generators, and the pseudo-isomorphism tests.

The preimage P of a target divisor D is sampled directly: generic points of
a target hyperplane, or arcs through generic points of a target exceptional
divisor, are pushed through the generator (every generator is an involution
on point and parameters, so g with the target parameters is the inverse map).
If the sample lands on an exceptional divisor of the source, P is that
divisor. Otherwise P is a hypersurface of P2 x P2 whose bihomogeneous
equation F is recovered by exact interpolation, and its multiplicity along
each center is the order of F / (L^a M^b) along the exceptional coordinate of
the chart, with the other chart coordinates specialised at random.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from ..bmap import ParamVector, apply_qr, param_act, random_params
from ..exact import Jet, LocalSeries, PolarError, PrecisionLoss, random_rational, rational
from ..lattice import (
    BiLatticeMap,
    DivisorClass,
    Model,
    anticanonical,
    canonical_name,
    get_model,
    table_action,
)
from .centers import GEOM_BOUND
from .charts import CHARTS
from .limits import (
    affine_part,
    arc,
    base_limit,
    finite_limit,
    jet_rank,
    nullspace,
    with_retry,
)

SPECIALIZATIONS = 5
HYPERPLANES = 3
MAX_DEGREE = 6
CHAINS = {7: 8, 9: 10}


class PullbackDisagreement(ArithmeticError):
    """Multiplicities kept disagreeing across random specialisations."""


@dataclass
class PullbackReport:
    generator: str
    model: str
    class_in: DivisorClass
    class_out: DivisorClass
    kind: str
    bidegree: tuple = (0, 0)
    multiplicities: dict = field(default_factory=dict)
    trials: int = 0

    def to_json(self) -> dict:
        return {
            "generator": self.generator,
            "model": self.model,
            "class_in": str(self.class_in),
            "class_out": str(self.class_out),
            "kind": self.kind,
            "bidegree": list(self.bidegree),
            "multiplicities": {str(k): v for k, v in sorted(self.multiplicities.items())},
            "trials": self.trials,
        }


# -- small helpers -------------------------------------------------------------


def _prime_class(model: Model, k: int) -> DivisorClass:
    """Class of the irreducible exceptional divisor over C_k."""
    D = model.basis_divisor(k + 1)
    if k in CHAINS and CHAINS[k] <= model.K:
        D = D - model.basis_divisor(CHAINS[k] + 1)
    return D


def _monomials(a: int, b: int) -> list:
    qs = [e for e in itertools.product(range(a + 1), repeat=3) if sum(e) == a]
    rs = [e for e in itertools.product(range(b + 1), repeat=3) if sum(e) == b]
    return [(i, j) for i in qs for j in rs]


def _bidegrees(max_total: int = MAX_DEGREE):
    for t in range(1, max_total + 1):
        for a in range(t, -1, -1):
            yield a, t - a


def _eval_mono(m, Q, R):
    (i0, i1, i2), (j0, j1, j2) = m
    return Q[0] ** i0 * Q[1] ** i1 * Q[2] ** i2 * R[0] ** j0 * R[1] ** j1 * R[2] ** j2


def _rand(rng, bound=GEOM_BOUND):
    return random_rational(rng, bound)


def _check_involutive(g: str, a: ParamVector) -> ParamVector:
    b = param_act(g, a)
    if param_act(g, b) != a:
        raise ArithmeticError(f"{g} is not an involution on parameters")
    return b


# -- landing on exceptional divisors ---------------------------------------------


def _exceptional_landing(x, model: Model, a: ParamVector):
    """Chart k whose exceptional coordinate vanishes on the jet arc x while the
    other coordinates stay finite and sweep out a divisor, with the limit."""
    hits = {}
    for k in range(1, model.K + 1):
        chart = CHARTS[k]
        try:
            c = chart.from_base(x, a)
        except (ZeroDivisionError, PolarError, PrecisionLoss):
            continue
        lim = finite_limit(c)
        if lim is None:
            continue
        u = c[chart.exceptional_slot]
        if not isinstance(u, LocalSeries) or not (u.is_unknown_zero() or u.valuation >= 1):
            continue
        # u_k also vanishes on divisors over centers lying on C_k; only a
        # three-dimensional image in the chart means the arc is on E_k itself
        if jet_rank(lim) == 3:
            hits[k] = lim
    for k in list(hits):
        prior = CHARTS[k].prior_chart
        if prior in hits:
            del hits[prior]
    if len(hits) > 1:
        raise ArithmeticError(f"arc lands on several exceptional divisors: {sorted(hits)}")
    return next(iter(hits.items()), None)


def _image_kind(x, model: Model, a: ParamVector):
    """('exceptional', k, rank) or ('base', limit, rank) for a jet arc image."""
    hit = _exceptional_landing(x, model, a)
    if hit is not None:
        k, lim = hit
        return "exceptional", k, jet_rank(lim)
    lim = base_limit(x)
    return "base", lim, jet_rank(affine_part(lim))


# -- sampling the preimage ----------------------------------------------------------


class _Sampler:
    """Generic points of the preimage in the source, as homogeneous limits."""

    def __init__(self, g, target_index, model, a, b, rng, c=None):
        self.g, self.j, self.model, self.a, self.b, self.rng = g, target_index, model, a, b, rng
        self.c = c

    def point(self):
        for _ in range(1000):
            try:
                return self._point()
            except (PolarError, ZeroDivisionError):
                continue
        raise RuntimeError("could not sample the preimage")

    def _point(self):
        rng, b = self.rng, self.b
        if self.j in (0, 1):
            c0, c1, c2 = self.c
            t = _rand(rng)
            other = (_rand(rng), _rand(rng))
            if not c2:
                raise ZeroDivisionError
            pair = (t, -(c0 + c1 * t) / c2)
            y = pair + other if self.j == 0 else other + pair
            x = apply_qr(self.g, y, b)
            return base_limit(x)
        free = [_rand(rng) for _ in range(3)]
        return with_retry(lambda t: base_limit(apply_qr(self.g, arc(self.j - 1, free, b, t), b)))


def _jet_arc_image(g, j, model, a, b, rng):
    free = [Jet.variable(_rand(rng), i, 3) for i in range(3)]

    def run(t):
        x = apply_qr(g, arc(j, free, b, t), b)
        return _image_kind(x, model, a)

    return with_retry(run)


def _interpolate(sampler: _Sampler):
    points = []
    for a, bdeg in _bidegrees():
        monos = _monomials(a, bdeg)
        while len(points) < len(monos) + 8:
            points.append(sampler.point())
        rows = [[_eval_mono(m, Q, R) for m in monos] for (_, Q), (_, R) in points]
        basis = nullspace(rows, len(monos))
        if not basis:
            continue
        if len(basis) > 1:
            raise ArithmeticError(f"preimage is not a hypersurface (nullity {len(basis)} in bidegree {(a, bdeg)})")
        F = {m: c for m, c in zip(monos, basis[0]) if c}
        return (a, bdeg), F, len(points)
    raise ArithmeticError("no bihomogeneous equation up to the degree bound")


# -- multiplicities -------------------------------------------------------------------


def _section_order(k, F, deg, lin, a, rng, truncation):
    chart = CHARTS[k]
    free = [_rand(rng) for _ in range(3)]
    q1, q2, r1, r2 = arc(k, free, a, truncation)
    Q = (rational(1), q1, q2)
    R = (rational(1), r1, r2)
    val = 0
    for m, c in F.items():
        val = val + c * _eval_mono(m, Q, R)
    (l0, l1, l2), (m0, m1, m2) = lin
    L = l0 + l1 * q1 + l2 * q2
    M = m0 + m1 * r1 + m2 * r2
    val = val / (L ** deg[0] * M ** deg[1])
    if not isinstance(val, LocalSeries):
        return 0 if val else None
    return val.order()


def _orders(F, deg, model, a, rng, specs: int = SPECIALIZATIONS):
    """Raw vanishing orders along each chart, agreeing over ``specs`` specialisations."""
    lin = tuple(tuple(_rand(rng) for _ in range(3)) for _ in range(2))
    out = {}
    for k in range(1, model.K + 1):
        for attempt in range(3):
            vals = []
            for _ in range(specs):
                for _ in range(100):
                    try:
                        v = with_retry(lambda t: _section_order(k, F, deg, lin, a, rng, t))
                        break
                    except (ZeroDivisionError, PolarError):
                        continue
                vals.append(v)
            if len(set(vals)) == 1:
                out[k] = vals[0]
                break
        else:
            raise PullbackDisagreement(f"chart U{k}: orders {vals} disagree after re-randomisation")
    return out


def _class_from_orders(model, deg, orders) -> tuple:
    mult = dict(orders)
    for k, nxt in CHAINS.items():
        if nxt <= model.K:
            mult[nxt] = orders[nxt] - orders[k]
    coeffs = [rational(deg[0]), rational(deg[1])] + [-rational(mult[k]) for k in range(1, model.K + 1)]
    return DivisorClass(model, tuple(coeffs)), mult


# -- public operations ----------------------------------------------------------------


def _basis_label(model, i):
    return model.divisor_basis()[i]


def _prime_pullback(g, j, model, a, b, rng, hyperplanes):
    """Pullback of the prime target divisor with basis index j (0: Hq, 1: Hr, else E_{j-1})."""
    if j >= 2:
        kinds = [_jet_arc_image(g, j - 1, model, a, b, rng) for _ in range(2)]
        tags = {(kd[0], kd[1]) if kd[0] == "exceptional" else ("base",) for kd in kinds}
        if len(tags) != 1:
            raise ArithmeticError(f"arcs through E{j - 1} land inconsistently: {tags}")
        kind = kinds[0]
        if kind[0] == "exceptional":
            if any(kd[2] < 3 for kd in kinds):
                raise ArithmeticError(f"{g} contracts the exceptional divisor over C{j - 1}")
            k = kind[1]
            return _prime_class(model, k), "exceptional", (0, 0), {}, 2
        if any(kd[2] < 3 for kd in kinds):
            raise ArithmeticError(f"{g} contracts the exceptional divisor over C{j - 1}")
        sampler = _Sampler(g, j, model, a, b, rng)
        deg, F, n = _interpolate(sampler)
        orders = _orders(F, deg, model, a, rng)
        cls, mult = _class_from_orders(model, deg, orders)
        return cls, "hypersurface", deg, mult, n
    results = []
    trials = 0
    for _ in range(hyperplanes):
        c = tuple(_rand(rng) for _ in range(3))
        sampler = _Sampler(g, j, model, a, b, rng, c=c)
        deg, F, n = _interpolate(sampler)
        orders = _orders(F, deg, model, a, rng)
        results.append(_class_from_orders(model, deg, orders) + (deg,))
        trials += n
    classes = {str(r[0]) for r in results}
    if len(classes) != 1:
        raise PullbackDisagreement(f"hyperplane choices give different classes: {sorted(classes)}")
    cls, mult, deg = results[0]
    return cls, "hypersurface", deg, mult, trials


def pullback_class(g: str, D, model, params: ParamVector | None = None,
                   rng: random.Random | None = None, hyperplanes: int = HYPERPLANES) -> PullbackReport:
    """Class in X_a of the pullback of the basis class ``D`` of X_{g(a)}.

    ``D`` is a basis label (``"Hq"``, ``"Hr"``, ``"E7"``) or index. Exceptional
    basis classes are totals; E7 and E9 pull back as the sum of the pullbacks
    of their irreducible pieces E7-E8 and E8 (E9-E10 and E10).
    """
    g = canonical_name(g)
    model = get_model(model)
    rng = rng or random.Random(0)
    a = params or random_params(rng, GEOM_BOUND)
    b = _check_involutive(g, a)
    j = model.divisor_basis().index(D) if isinstance(D, str) else int(D)
    k = j - 1
    pieces = [j]
    if k in CHAINS and CHAINS[k] <= model.K:
        pieces.append(CHAINS[k] + 1)
    total = None
    kinds, mult, deg, trials = [], {}, (0, 0), 0
    for p in pieces:
        cls, kind, dg, m, n = _prime_pullback(g, p, model, a, b, rng, hyperplanes)
        total = cls if total is None else total + cls
        kinds.append(kind)
        trials += n
        if kind == "hypersurface":
            deg = tuple(x + y for x, y in zip(deg, dg))
            for kk, v in m.items():
                mult[kk] = mult.get(kk, 0) + v
    return PullbackReport(g, model.name, model.basis_divisor(j), total, "+".join(kinds), deg,
                          mult, trials)


def matrix_of(g: str, model, params: ParamVector | None = None, rng: random.Random | None = None,
              hyperplanes: int = HYPERPLANES) -> BiLatticeMap:
    """The pullback action of g on the basis, assembled column by column."""
    g = canonical_name(g)
    model = get_model(model)
    rng = rng or random.Random(f"matrix:{g}")
    a = params or random_params(rng, GEOM_BOUND)
    images = [pullback_class(g, j, model, a, rng, hyperplanes).class_out for j in range(model.rank)]
    return BiLatticeMap.from_images(model, images, label=f"{g} (geometric)")


def compare_with_table(g: str, model, geometric: BiLatticeMap | None = None,
                       errata: bool = False, **kw) -> list:
    """Cell-by-cell mismatches (row label, column label, geometric, table)."""
    model = get_model(model)
    geometric = geometric or matrix_of(g, model, **kw)
    table = table_action(g, model, errata)
    names = model.divisor_basis()
    out = []
    for r in range(model.rank):
        for c in range(model.rank):
            x, y = geometric.divisor_matrix[r][c], table.divisor_matrix[r][c]
            if x != y:
                out.append((names[r], names[c], x, y))
    return out


@dataclass
class PseudoIsoCertificate:
    generator: str
    model: str
    forward_matrix: BiLatticeMap
    backward_matrix: BiLatticeMap
    mutually_inverse: bool
    pairing_preserved: bool
    anticanonical_fixed: bool

    @property
    def verdict(self) -> str:
        ok = self.mutually_inverse and self.pairing_preserved and self.anticanonical_fixed
        return "pass" if ok else "fail"

    def to_json(self) -> dict:
        return {
            "generator": self.generator,
            "model": self.model,
            "forward_matrix": self.forward_matrix.to_json(),
            "backward_matrix": self.backward_matrix.to_json(),
            "mutually_inverse": self.mutually_inverse,
            "pairing_preserved": self.pairing_preserved,
            "anticanonical_fixed": self.anticanonical_fixed,
            "verdict": self.verdict,
        }


def pseudo_iso_certificate(g: str, model, params: ParamVector | None = None,
                           rng: random.Random | None = None, hyperplanes: int = 1) -> PseudoIsoCertificate:
    g = canonical_name(g)
    model = get_model(model)
    rng = rng or random.Random(1)
    a = params or random_params(rng, GEOM_BOUND)
    b = _check_involutive(g, a)
    fwd = matrix_of(g, model, a, rng, hyperplanes)
    bwd = matrix_of(g, model, b, rng, hyperplanes)
    inverse = fwd.then(bwd).is_identity()
    return PseudoIsoCertificate(g, model.name, fwd, bwd, inverse, fwd.preserves_pairing(),
                                fwd.fixes(anticanonical(model)))


# -- contractions ---------------------------------------------------------------------

_LEAF_ARCS = {
    "Q0=0": lambda e, f: (1 / e, f[0] / e, f[1], f[2]),
    "Q1=0": lambda e, f: (e, f[0], f[1], f[2]),
    "Q2=0": lambda e, f: (f[0], e, f[1], f[2]),
    "R0=0": lambda e, f: (f[0], f[1], 1 / e, f[2] / e),
}

_HOMOG = ("Q0", "Q1", "Q2", "R0", "R1", "R2")


def _identically_zero(v) -> bool:
    if isinstance(v, Jet):
        return not v.value and not any(v.grad)
    return not v


def _describe_locus(lim) -> str:
    (iq, Q), (ir, R) = lim
    zero = [n for n, v in zip(_HOMOG, Q + R) if _identically_zero(v)]
    return "=".join(zero) + "=0" if zero else "generic"


def contraction_witnesses(g: str, model, params: ParamVector | None = None,
                          rng: random.Random | None = None, arcs: int = 2) -> list:
    """Source divisors whose image has codimension at least two.

    Candidates are the four coordinate leaves and every exceptional divisor of
    the model. The image is a divisor when the limit map has rank 3 in P2 x P2
    or in the chart of an exceptional divisor it lands on.
    """
    g = canonical_name(g)
    model = get_model(model)
    rng = rng or random.Random(2)
    a = params or random_params(rng, GEOM_BOUND)
    b = _check_involutive(g, a)
    candidates = [(label, ("leaf", label)) for label in _LEAF_ARCS]
    candidates += [(f"exceptional over C{k}", ("chart", k)) for k in range(1, model.K + 1)]
    found = []
    for label, (kind, key) in candidates:
        for _ in range(arcs):
            free = [Jet.variable(_rand(rng), i, 3) for i in range(3)]

            def run(t):
                if kind == "leaf":
                    x = _LEAF_ARCS[key](LocalSeries.gen("eps", t), free)
                else:
                    x = arc(key, free, a, t)
                y = apply_qr(g, x, a)
                return _image_kind(y, model, b), base_limit(y)

            try:
                (tag, where, rk), lim = with_retry(run)
            except (PolarError, ZeroDivisionError):
                continue
            if rk < 3:
                found.append({
                    "divisor": label,
                    "image": _describe_locus(lim),
                    "rank": rk,
                })
            break
    return found


def contraction_witness(g: str, model, params: ParamVector | None = None,
                        rng: random.Random | None = None, arcs: int = 2):
    """The first contracted candidate divisor, or None."""
    found = contraction_witnesses(g, model, params, rng, arcs)
    return found[0] if found else None
