import random

import pytest
from hypothesis import given, settings, strategies as st

from garnier import bmap
from garnier.bmap import ParamVector, apply_qp, apply_qr, apply_word, param_act, param_word
from garnier.exact import PolarError, RatFunc, rational
from garnier.lattice import GENERATORS, resolved_t1_word

r = rational
ONES = ParamVector(*[r(1)] * 6, r(2), r(3))


def test_param_act_rows():
    b = param_act("wt1", ONES)
    assert (b.theta1, b.alpha0) == (-1, 2)
    assert (b.kappa0, b.kappa1, b.kappa_inf, b.theta2, b.s1, b.s2) == (1, 1, 1, 1, 2, 3)
    b = param_act("wa0", ONES)
    assert ONES.d == 7
    assert b.values()[:6] == (6, 6, -1, -1, -1, -1)
    a = ParamVector(r(1), r(2), r(3), r(5), r(7), r(11), r(2), r(3))
    b = param_act("s3", a)
    assert (b.s1, b.s2) == (r("1/2"), r("3/2"))
    assert (b.kappa_inf, b.theta1) == (a.theta1, a.kappa_inf)


def test_param_act_s2_pole():
    with pytest.raises(PolarError):
        param_act("s2", ParamVector(*[r(1)] * 6, r(1), r(3)))


def test_apply_qr_examples():
    assert apply_qr("s4", [r(2), r(3), r(5), r(7)], ONES) == (3, 2, 7, 5)
    assert apply_qr("wa0", [r(1)] * 4, ONES) == (0, 0, -1, -1)
    with pytest.raises(PolarError, match="Q12"):
        apply_qr("wk1", [r(1), r(0), r(2), r(3)], ONES)


def test_apply_qp_examples():
    assert apply_qp("wt1", [r(2), r(3), r(5), r(7)], ONES) == (2, 3, r("9/2"), 7)
    assert apply_qp("s1", [r(2), r(3), r(5), r(7)], ONES) == (1, 1, 10, 21)
    with pytest.raises(PolarError, match="q1"):
        apply_qp("wt1", [r(0), r(3), r(5), r(7)], ONES)


def test_jacobian_examples():
    J = bmap.jacobian("s4", "qr")
    perm = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    assert [[J[i][j] == RatFunc.const(perm[i][j]) for j in range(4)] for i in range(4)] == [[True] * 4] * 4
    q1, t1 = RatFunc.vars("q1", "theta1")
    assert bmap.jacobian("wt1", "qp")[2][0] == t1 / (q1 * q1)
    I = bmap.jacobian("wkI", "qp")
    assert all(I[i][j] == RatFunc.const(int(i == j)) for i in range(4) for j in range(4))


def test_coordinate_change_roundtrip():
    x = bmap.PointQP(r(2), r(3), r(5), r(7))
    assert bmap.qp_to_qr(x) == (2, 3, 10, 21)
    assert bmap.qr_to_qp(bmap.qp_to_qr(x)) == x


def test_empty_word_and_double_letters():
    x = [r(1), r(2), r(3), r(5)]
    y, b = apply_word([], x, ONES)
    assert tuple(y) == tuple(x) and b == ONES
    rng = random.Random(5)
    a = bmap.random_params(rng)
    p = bmap.random_point(rng)
    for g in GENERATORS:
        y, b = apply_word([g, g], p, a)
        assert tuple(y) == tuple(p) and b == a


def test_word_polar_error_reports_step():
    a = ParamVector(*[r(1)] * 6, r(2), r(3))
    with pytest.raises(bmap.WordPolarError) as info:
        apply_word(["s4", "wt1"], [r(1), r(0), r(2), r(3)], a, coords="qp", convention="left_first")
    assert info.value.generator == "wt1"


def test_t1_word_parameter_shift():
    rng = random.Random(9)
    a = bmap.random_params(rng)
    b = param_word(resolved_t1_word("wkI"), a, "left_first")
    shift = [(x - y) / a.d for x, y in zip(b.values()[:6], a.values()[:6])]
    # order: kappa0, kappa1, kappa_inf, theta1, theta2, alpha0
    assert shift == [2, 0, 0, 0, 0, -1]
    assert (b.s1, b.s2) == (a.s1, a.s2) and b.d == a.d


@pytest.mark.parametrize("g", GENERATORS)
def test_generator_checks(g):
    rng = random.Random(f"bmap:{g}")
    assert bmap.involution_check(g, rng, 100).passed
    assert bmap.consistency_qp_qr(g, rng, 5).passed
    assert bmap.genericity_check(g, rng, 100).passed


params = st.tuples(*[st.fractions(-30, 30, max_denominator=7)] * 6,
                   st.fractions(-30, 30, max_denominator=7), st.fractions(-30, 30, max_denominator=7))
points = st.tuples(*[st.fractions(-30, 30, max_denominator=7)] * 4)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(GENERATORS), params, points)
def test_involution_property(g, pv, pt):
    a = ParamVector(*[rational(v) for v in pv])
    x = tuple(rational(v) for v in pt)
    if not a.is_generic():
        return
    try:
        b = param_act(g, a)
        y = apply_qr(g, x, a)
        z = apply_qr(g, y, b)
    except PolarError:
        return
    assert tuple(z) == x
    assert param_act(g, b) == a


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(GENERATORS), params, points)
def test_qp_and_qr_rows_agree(g, pv, pt):
    a = ParamVector(*[rational(v) for v in pv])
    x = bmap.PointQP(*[rational(v) for v in pt])
    if not a.is_generic():
        return
    try:
        via_qp = bmap.qp_to_qr(apply_qp(g, x, a))
        via_qr = apply_qr(g, bmap.qp_to_qr(x), a)
    except PolarError:
        return
    assert tuple(via_qp) == tuple(via_qr)
