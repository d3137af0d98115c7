import random

import pytest
from hypothesis import given, settings, strategies as st

from garnier import ham
from garnier.bmap import ParamVector, random_params, random_point
from garnier.exact import rational

r = rational


def test_h1_on_q_zero_is_linear_in_p1():
    # with q1 = q2 = 0 only the theta1 (q1-1)(q1-s1) p1 term survives
    a = ParamVector(r(2), r(3), r(5), r(7), r(11), r(13), r(4), r(9))
    for p1, p2 in ((r(1), r(0)), (r(3), r(-5)), (r("2/7"), r(8))):
        assert ham.eval_H("H1", (0, 0, p1, p2), a) == -a.theta1 * p1 / (a.s1 - 1)
    assert ham.eval_H("H1", (0, 0, 0, r(17)), a) == 0


def test_hvi_at_q_zero():
    a = ParamVector(r(2), r(3), r(5), r(1), r(11), r(13), r(2), r(9))
    assert ham.eval_H("HVI", (0, 0, r(3), 0), a) == -3


def test_vector_field_at_q_zero():
    a = ParamVector(r(2), r(3), r(5), r(7), r(11), r(13), r(4), r(9))
    dq1, dq2, _, _ = ham.vector_field(1, (0, 0, r(3), r(5)), a)
    assert dq1 == -a.theta1 / (a.s1 - 1)
    assert dq2 == 0


def test_excluded_s_values():
    with pytest.raises(ValueError):
        ham.eval_H("H1", (1, 2, 3, 4), ParamVector(*[r(1)] * 6, r(1), r(3)))
    with pytest.raises(ValueError):
        ham.vector_field(1, (1, 2, 3, 4), ParamVector(*[r(1)] * 6, r(3), r(3)))


def test_decomposition_identity():
    assert ham.hvi_identity_check(random.Random(1), 20).passed
    assert ham.hvi_identity_check(random.Random(2), 10, p_zero=True).passed


def test_decomposition_negative_control():
    res = ham.hvi_identity_check(random.Random(1), 5, theta_shift=1)
    assert not res.passed and "residual" in res.detail


def test_p_free_part():
    rng = random.Random(4)
    a = random_params(rng)
    q1, q2, _, _ = random_point(rng)
    assert ham.scaled_h1(q1, q2, 0, 0, a) == a.alpha0 * (a.alpha0 + a.kappa_inf) * q1
    assert ham.decomposition_rhs(q1, q2, 0, 0, a) == a.alpha0 * (a.alpha0 + a.kappa_inf) * q1


def test_parameter_free_field_is_quadratic_in_p():
    a = ParamVector(*[r(0)] * 6, r(3), r(7))
    rng = random.Random(8)
    for _ in range(5):
        q1, q2, p1, p2 = random_point(rng, 50)
        v = ham.vector_field(1, (q1, q2, p1, p2), a)
        w = ham.vector_field(1, (q1, q2, 2 * p1, 2 * p2), a)
        # dq is linear in p, dp quadratic
        assert (w[0], w[1]) == (2 * v[0], 2 * v[1])
        assert (w[2], w[3]) == (4 * v[2], 4 * v[3])


@pytest.mark.parametrize("g", ["wkI", "wt1", "wt2", "wk1", "s4"])
def test_symmetry_unconstrained(g):
    assert ham.symmetry_check(g, random.Random(f"sym:{g}"), 20).passed


@pytest.mark.parametrize("g", ham.SYMMETRY_GENERATORS)
def test_symmetry_on_unit_slice(g):
    assert ham.symmetry_check(g, random.Random(f"sym1:{g}"), 20, d=1).passed


@pytest.mark.parametrize("g", ham.SYMMETRY_GENERATORS)
def test_symmetry_with_d_weighted_time(g):
    assert ham.symmetry_check(g, random.Random(f"symd:{g}"), 20, s_weight="d").passed


@pytest.mark.parametrize("g", ["wk0", "wa0"])
def test_plain_law_fails_off_the_unit_slice(g):
    # these two move s through the time scale; the residual is (d-1) dg/ds
    res = ham.symmetry_check(g, random.Random(f"sym2:{g}"), 5, d=3)
    assert not res.passed


def test_swap_symmetry():
    assert ham.swap_symmetry_check(random.Random(3), 20).passed


@settings(max_examples=40, deadline=None)
@given(st.tuples(*[st.fractions(-20, 20, max_denominator=5)] * 4), st.integers(0, 10**6))
def test_h2_is_swapped_h1(pt, seed):
    a = random_params(random.Random(seed))
    x = tuple(rational(v) for v in pt)
    assert ham.eval_H("H2", x, a) == ham.eval_H("H1", ham.swap_point(x), ham.swap_params(a))


@settings(max_examples=40, deadline=None)
@given(st.tuples(*[st.fractions(-20, 20, max_denominator=5)] * 4), st.integers(0, 10**6))
def test_v2_is_swapped_v1(pt, seed):
    a = random_params(random.Random(seed))
    x = tuple(rational(v) for v in pt)
    v2 = ham.vector_field(2, x, a)
    v1 = ham.vector_field(1, ham.swap_point(x), ham.swap_params(a))
    assert v2 == (v1[1], v1[0], v1[3], v1[2])
