import math

import mpmath
import pytest

from gramdisc.errors import DomainError
from gramdisc.gram import core_zero, gram_point, z0
from gramdisc.special import TWO_PI, theta


def bisect_theta(target, lo, hi):
    f = lambda t: theta(t) - target
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def test_g0_bisection_oracle():
    ref = bisect_theta(0.0, 10.0, 30.0)
    g = gram_point(0)
    assert g.t == pytest.approx(17.8455995, abs=1e-6)
    assert g.t == pytest.approx(ref, abs=1e-12)


@pytest.mark.parametrize("n", [-1, 0, 1, 126, 1000, 10**6])
def test_defining_equation(n):
    g = gram_point(n)
    assert abs(theta(g.t) - math.pi * n) <= 1e-10
    assert g.residual <= 1e-10


def test_gram_126_oracle():
    ref = bisect_theta(126 * math.pi, 200.0, 400.0)
    assert gram_point(126).t == pytest.approx(ref, abs=1e-10)


def test_residuals_and_monotonicity_prefix():
    prev = None
    for n in range(-1, 10001):
        g = gram_point(n)
        assert g.residual <= 1e-10
        if prev is not None:
            assert g.t > prev.t
            assert z0(prev.t) * z0(g.t) < 0
        prev = g


def test_large_index_residual_is_ulp_limited():
    n = 9807962
    g = gram_point(n)
    assert g.residual <= 8 * math.ulp(math.pi * n)


def test_correction_order_shifts_point():
    a = gram_point(10, correction_order=0).t
    b = gram_point(10).t
    assert a != b
    assert abs(theta(a, 0) - 10 * math.pi) <= 1e-10


def test_domain():
    with pytest.raises(DomainError):
        gram_point(-2)
    with pytest.raises(DomainError):
        gram_point(1.5)


@pytest.mark.parametrize("n", [0, 1, 7, 126])
def test_z0_at_gram_points(n):
    assert z0(gram_point(n).t) == pytest.approx((-1) ** n, abs=1e-10)


def test_core_zero_small_core_value():
    for n in range(2, 101):
        c = core_zero(n)
        assert abs(z0(c.t)) <= 5.0 / c.t


def test_core_zero_increasing():
    ts = [core_zero(n).t for n in range(2, 101)]
    assert all(a < b for a, b in zip(ts, ts[1:]))


def test_core_zero_exact_for_leading_order():
    for n in (5, 50):
        t = core_zero(n).t
        assert theta(t, 0) == pytest.approx((n - 1.5) * math.pi, abs=1e-9)


@pytest.mark.parametrize("n", [5, 50])
def test_core_zero_near_true_zero(n):
    # nearest zero of cos(theta) from bisection on the full series
    t = core_zero(n).t
    target = (n - 1.5) * math.pi
    root = bisect_theta(target, t - 1.0, t + 1.0)
    assert abs(root - t) < 1e-2


def test_core_zero_domain():
    assert core_zero(1).t > TWO_PI
    with pytest.raises(DomainError):
        core_zero(0)
    with pytest.raises(DomainError):
        core_zero(-3)


def test_mpmath_siegeltheta_close_at_height():
    # the series is the asymptotic expansion of the exact theta
    for t in (100.0, 5000.0):
        assert theta(t) == pytest.approx(float(mpmath.siegeltheta(t)), abs=1e-9)
