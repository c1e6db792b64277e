import math

import mpmath
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from gramdisc import discriminant as dm
from gramdisc.gram import gram_point, z0
from gramdisc.section import ParameterVector, SectionContext, lerp, z_section
from gramdisc.special import TWO_PI, lambert_w0, theta

T_LO = TWO_PI + 0.01
finite = dict(allow_nan=False, allow_infinity=False)


@given(st.floats(T_LO, 1e7, **finite), st.floats(1e-9, 1e3, **finite))
def test_theta_increasing(t, dt):
    assert theta(t) < theta(t + dt * max(1.0, t) * 1e-3 + 1e-6)


@given(st.floats(-math.exp(-1) + 1e-6, 1e6, **finite))
def test_lambert_residual(x):
    w = lambert_w0(x)
    assert w >= -1.0
    assert abs(w * math.exp(w) - x) <= 1e-14 * max(1.0, abs(x))


def mp_theta(t):
    return (t / 2 * mpmath.log(t / (2 * mpmath.pi)) - t / 2 - mpmath.pi / 8
            + 1 / (48 * t) + mpmath.mpf(7) / (5760 * t**3))


@settings(max_examples=60, deadline=None)
@given(st.integers(-1, 10**7))
def test_gram_residual_and_order(n):
    g = gram_point(n)
    assert g.residual <= max(1e-10, 8 * math.ulp(math.pi * n))
    assert abs(z0(g.t) - (-1) ** n) <= 1e-8
    assert gram_point(n + 1).t > g.t
    with mpmath.workdps(40):
        root = mpmath.findroot(lambda x: mp_theta(x) - n * mpmath.pi, mpmath.mpf(g.t))
    assert abs(float(root - g.t)) <= 3 * math.ulp(g.t)


sparse_entries = st.dictionaries(st.integers(1, 40), st.floats(-3, 3, **finite), max_size=6)


@settings(max_examples=50)
@given(sparse_entries, sparse_entries, st.floats(-2, 2, **finite), st.floats(-2, 2, **finite),
       st.floats(20.0, 90.0, **finite))
def test_section_linearity(ea, eb, alpha, beta, t):
    ctx = SectionContext.build(40)
    a = ParameterVector(entries=ea)
    b = ParameterVector(entries=eb)
    combo = ParameterVector(alpha * a.dense(40) + beta * b.dense(40))
    lhs = z_section(t, combo, ctx)
    rhs = (alpha * z_section(t, a, ctx) + beta * z_section(t, b, ctx)
           + (1 - alpha - beta) * z0(t))
    assert abs(lhs - rhs) <= 1e-11 * (1 + abs(alpha) + abs(beta)) * 10


@given(sparse_entries, st.floats(-2, 2, **finite))
def test_sparse_dot_matches_dense(entries, default):
    vec = np.linspace(-1, 1, 40)
    a = ParameterVector(entries=entries, default=default)
    assert math.isclose(a.dot(vec), float(np.dot(a.dense(40), vec)), rel_tol=1e-12, abs_tol=1e-12)


@given(sparse_entries, sparse_entries, st.floats(0, 1, **finite))
def test_lerp_componentwise(ea, eb, s):
    a = ParameterVector(entries=ea, default=0.1)
    b = ParameterVector(entries=eb, default=0.7)
    got = lerp(a, b, s).dense(40)
    want = (1 - s) * a.dense(40) + s * b.dense(40)
    assert np.allclose(got, want, rtol=0, atol=1e-14)


@settings(max_examples=30)
@given(st.sampled_from([90, 91, 126, 127, 500]), sparse_entries)
def test_hessian_form_sign_and_rank_one(n, entries):
    a = ParameterVector(entries=entries)
    v = dm.hessian_factor(n)
    s = a.dot(v)
    h = dm.hessian_form(n, a)
    assert math.isclose(h, (-1) ** n * s * s, rel_tol=1e-10, abs_tol=1e-300)
    if s != 0:
        assert math.copysign(1, h) == (-1) ** n
