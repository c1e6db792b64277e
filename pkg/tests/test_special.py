import math

import mpmath
import pytest

from gramdisc.errors import DomainError
from gramdisc.special import TWO_PI, lambert_w0, theta, theta_prime, theta_second


def mp_theta(t):
    t = mpmath.mpf(t)
    return (t / 2 * mpmath.log(t / (2 * mpmath.pi)) - t / 2 - mpmath.pi / 8
            + 1 / (48 * t) + mpmath.mpf(7) / (5760 * t**3))


@pytest.mark.parametrize("t", [20.0, 100.0, 1234.5, 1e5, 4.7e6])
def test_theta_matches_high_precision_series(t):
    with mpmath.workdps(40):
        ref = float(mp_theta(t))
    assert theta(t) == pytest.approx(ref, rel=1e-12, abs=1e-12)


def test_theta_correction_orders():
    t = 50.0
    base = 0.5 * t * math.log(t / TWO_PI) - 0.5 * t - math.pi / 8
    assert theta(t, 0) == base
    assert theta(t, 1) == pytest.approx(base + 1 / (48 * t), abs=1e-15)
    assert theta(t, 2) == pytest.approx(base + 1 / (48 * t) + 7 / (5760 * t**3), abs=1e-15)
    with pytest.raises(ValueError):
        theta(t, 3)


def test_theta_deterministic():
    assert theta(777.77) == theta(777.77)


@pytest.mark.parametrize("t", [TWO_PI, 1.0, -3.0])
def test_theta_domain(t):
    with pytest.raises(DomainError):
        theta(t)
    with pytest.raises(DomainError):
        theta_prime(t)
    with pytest.raises(DomainError):
        theta_second(t)


def test_theta_monotone():
    ts = [TWO_PI + 0.01 + 0.37 * i for i in range(2000)]
    vals = [theta(t) for t in ts]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_theta_prime_truncated_anchors():
    assert theta_prime(TWO_PI * math.e, "truncated") == pytest.approx(0.5, abs=1e-15)
    assert theta_prime(TWO_PI * 4, "truncated") == pytest.approx(0.5 * math.log(4), abs=1e-15)
    assert theta_second(TWO_PI * 1.5, "truncated") == pytest.approx(1 / (3 * TWO_PI))


def test_theta_second_truncated_value():
    # 1/(2t); the t = 2pi anchor itself sits on the excluded boundary
    t = TWO_PI * (1 + 1e-12)
    assert theta_second(t, "truncated") == pytest.approx(1 / (4 * math.pi), rel=1e-10)


@pytest.mark.parametrize("t", [50.0, 1e3, 1e5])
def test_series_derivatives_vs_central_difference(t):
    h = 1e-4 * t
    fd1 = (theta(t + h) - theta(t - h)) / (2 * h)
    assert theta_prime(t) == pytest.approx(fd1, rel=1e-8)
    fd2 = (theta_prime(t + h) - theta_prime(t - h)) / (2 * h)
    assert theta_second(t) == pytest.approx(fd2, rel=1e-8)


def test_series_derivative_mpmath():
    for t in (30.0, 1000.0):
        with mpmath.workdps(40):
            d1 = mpmath.diff(mp_theta, t)
            d2 = mpmath.diff(mp_theta, t, 2)
        assert theta_prime(t) == pytest.approx(float(d1), rel=1e-13)
        assert theta_second(t) == pytest.approx(float(d2), rel=1e-12)


def test_variant_validation():
    with pytest.raises(ValueError):
        theta_prime(100.0, "exact")


def test_theta_second_positive():
    for t in (TWO_PI + 1e-6, 10.0, 1e6):
        assert theta_second(t) > 0
        assert theta_second(t, "truncated") > 0


def test_lambert_anchors():
    assert lambert_w0(0.0) == 0.0
    assert lambert_w0(math.e) == pytest.approx(1.0, abs=1e-15)
    assert lambert_w0(1.0) == pytest.approx(0.5671432904097838, abs=1e-15)
    assert lambert_w0(-math.exp(-1.0)) == pytest.approx(-1.0, abs=1e-7)


def test_lambert_residual_grid():
    xs = [-math.exp(-1) + 1e-6 + i * 1e-3 for i in range(400)]
    xs += [10 ** (k / 10) for k in range(-60, 61)]
    for x in xs:
        w = lambert_w0(x)
        assert w >= -1.0
        assert abs(w * math.exp(w) - x) <= 1e-14 * max(1.0, abs(x))


def test_lambert_vs_mpmath():
    for x in (-0.3, -0.01, 0.5, 7.0, 1e3, 1e6):
        assert lambert_w0(x) == pytest.approx(float(mpmath.lambertw(x).real), rel=1e-14)


def test_lambert_domain():
    with pytest.raises(DomainError):
        lambert_w0(-0.5)
