"""Riemann-Siegel theta, its derivatives, and the principal Lambert W branch.

theta is evaluated from its large-t asymptotic series

    theta(t) = t/2 ln(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760t^3)

which is accurate to far below 1e-10 for t >= 20 in binary64.  Derivatives
come in two variants: ``"series"`` differentiates the implemented series
term by term (what root solvers need), ``"truncated"`` keeps only the
leading term, theta'(t) = 1/2 ln(t/2pi), which is the form every closed
formula for the discriminant uses.
"""

import math

from .errors import DomainError, NoConvergence

TWO_PI = 2.0 * math.pi
INV_E = math.exp(-1.0)

DEFAULT_ORDER = 2
_VARIANTS = ("series", "truncated")


def _check_t(t):
    if not t > TWO_PI:
        raise DomainError(f"theta is only defined here for t > 2pi, got t={t!r}", t=t)


def _check_order(order):
    if order not in (0, 1, 2):
        raise ValueError(f"correction_order must be 0, 1 or 2, got {order!r}")


def theta(t, correction_order=DEFAULT_ORDER):
    """Riemann-Siegel theta(t) for t > 2pi.

    ``correction_order`` selects how many of the 1/(48t), 7/(5760t^3)
    corrections are added to the three leading terms.
    """
    _check_t(t)
    _check_order(correction_order)
    value = 0.5 * t * math.log(t / TWO_PI) - 0.5 * t - math.pi / 8.0
    if correction_order >= 1:
        value += 1.0 / (48.0 * t)
    if correction_order >= 2:
        value += 7.0 / (5760.0 * t**3)
    return value


def theta_prime(t, variant="series", correction_order=DEFAULT_ORDER):
    _check_t(t)
    if variant == "truncated":
        return 0.5 * math.log(t / TWO_PI)
    if variant != "series":
        raise ValueError(f"variant must be one of {_VARIANTS}, got {variant!r}")
    _check_order(correction_order)
    value = 0.5 * math.log(t / TWO_PI)
    if correction_order >= 1:
        value -= 1.0 / (48.0 * t * t)
    if correction_order >= 2:
        value -= 7.0 / (1920.0 * t**4)
    return value


def theta_second(t, variant="series", correction_order=DEFAULT_ORDER):
    _check_t(t)
    if variant == "truncated":
        return 0.5 / t
    if variant != "series":
        raise ValueError(f"variant must be one of {_VARIANTS}, got {variant!r}")
    _check_order(correction_order)
    value = 0.5 / t
    if correction_order >= 1:
        value += 1.0 / (24.0 * t**3)
    if correction_order >= 2:
        value += 7.0 / (480.0 * t**5)
    return value


def _w0_initial(x):
    if x < -0.25:
        # branch-point series in p = sqrt(2(ex + 1))
        p = math.sqrt(max(0.0, 2.0 * (math.e * x + 1.0)))
        return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p**3
    if x < 3.0:
        # Winitzki's approximation
        lx = math.log1p(x)
        return lx * (1.0 - math.log1p(lx) / (2.0 + lx))
    lx = math.log(x)
    return lx - math.log(lx)


def lambert_w0(x, max_iter=50):
    """Principal branch W0(x), the solution w >= -1 of w e^w = x.

    Halley iteration from a region-dependent initial guess.  Raises
    ``DomainError`` for x < -1/e.
    """
    x = float(x)
    if math.isnan(x) or x < -INV_E:
        raise DomainError(f"lambert_w0 requires x >= -1/e, got x={x!r}", x=x)
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf
    if x - (-INV_E) < 1e-300:
        return -1.0
    w = _w0_initial(x)
    tol = 1e-14 * max(1.0, abs(x))
    for _ in range(max_iter):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0:
            break
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w_next = w - step
        if w_next < -1.0:
            w_next = -1.0 + 0.5 * (w + 1.0)
        if abs(w_next - w) <= 4.0 * 2.2e-16 * (1.0 + abs(w_next)):
            w = w_next
            break
        w = w_next
    if abs(w * math.exp(w) - x) > tol:
        raise NoConvergence(f"lambert_w0 did not converge for x={x!r}", x=x, w=w)
    return w
