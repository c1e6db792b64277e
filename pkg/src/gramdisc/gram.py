"""Gram points, the core function Z0(t) = cos(theta(t)), and its zeros."""

from dataclasses import dataclass
import math

from .errors import DomainError, NoConvergence
from .special import DEFAULT_ORDER, TWO_PI, lambert_w0, theta, theta_prime

GRAM_TOL = 1e-10
_MAX_NEWTON = 60
_MAX_BISECT = 200


@dataclass(frozen=True)
class GramPoint:
    n: int
    t: float
    residual: float


@dataclass(frozen=True)
class CoreZero:
    n: int
    t: float


def _initial_guess(n):
    # leading-order inversion: (t/2) ln(t/(2 pi e)) - pi/8 = pi n
    x = (8 * n + 1) / (8 * math.e)
    return TWO_PI * math.exp(1.0 + lambert_w0(x))


def _bracket(n, target, t0, order):
    # theta is increasing above its series minimum, which sits just above 2pi
    lo = TWO_PI * (1.0 + 1e-3)
    hi = max(t0, lo) * 1.01 + 1.0
    while theta(hi, order) < target:
        hi *= 2.0
    if theta(lo, order) > target:
        raise DomainError(f"no Gram point for n={n}: pi*n is below theta's minimum", n=n)
    return lo, hi


def _polish(t, residual, target, order, tol, width=4):
    # rounding in theta makes the float residual jumpy; try neighbouring doubles
    if residual <= tol * 1e-3:
        return t
    best = t
    for direction in (math.inf, -math.inf):
        x = t
        for _ in range(width):
            x = math.nextafter(x, direction)
            r = abs(theta(x, order) - target)
            if r < residual:
                best, residual = x, r
    return best


def gram_point(n, tol=GRAM_TOL, correction_order=DEFAULT_ORDER):
    """Solve theta(t) = pi*n on the increasing branch of theta.

    Newton from the Lambert-W inversion of the leading term; any iterate
    that leaves the current bracket is replaced by a bisection step, and
    the last few neighbouring doubles are tried to minimise the residual.
    From n ~ 10^5 on, the spacing of doubles near pi*n reaches ``tol``;
    there the residual is only guaranteed to 8 ulps of pi*n, while t stays
    within a few ulps of the true root.
    """
    if n != int(n):
        raise DomainError(f"Gram index must be an integer, got {n!r}", n=n)
    n = int(n)
    if n < -1:
        raise DomainError(f"Gram points are supported for n >= -1, got n={n}", n=n)
    target = math.pi * n
    t = _initial_guess(n)
    lo, hi = _bracket(n, target, t, correction_order)
    if not lo < t < hi:
        t = 0.5 * (lo + hi)
    # refine until the residual is negligible or the bracket is a few ulps
    # wide; near pi*n ~ 1e5 and above, only exact hits beat 1e-10
    best_t, residual = t, math.inf
    for _ in range(_MAX_NEWTON + _MAX_BISECT):
        f = theta(t, correction_order) - target
        if abs(f) < residual:
            best_t, residual = t, abs(f)
        if residual <= tol * 1e-3:
            break
        if f > 0.0:
            hi = min(hi, t)
        else:
            lo = max(lo, t)
        if hi - lo <= 2.0 * math.ulp(hi):
            break
        t_new = t - f / theta_prime(t, correction_order=correction_order)
        if not lo < t_new < hi or t_new == t:
            t_new = 0.5 * (lo + hi)
        t = t_new
    t = _polish(best_t, residual, target, correction_order, tol)
    residual = abs(theta(t, correction_order) - target)
    if residual > max(tol, 8.0 * math.ulp(abs(target))):
        raise NoConvergence(
            f"Gram point solver stalled at n={n}", n=n, t=t, residual=residual
        )
    return GramPoint(n=n, t=t, residual=residual)


def z0(t):
    """Core function cos(theta(t))."""
    return math.cos(theta(t))


def core_zero(n):
    """Lambert-W closed form t_n = (8n-11) pi / (4 W0((8n-11)/(8e))).

    These are exact zeros of the leading-order core, where
    theta(t_n) = (n - 3/2) pi; with the full series the residual
    |cos theta(t_n)| is of order 1/(48 t_n).
    """
    n = int(n)
    m = 8 * n - 11
    x = m / (8.0 * math.e)
    if x < -math.exp(-1.0):
        raise DomainError(f"core_zero needs (8n-11)/(8e) >= -1/e, got n={n}", n=n)
    w = lambert_w0(x)
    t = m * math.pi / (4.0 * w)
    if not t > TWO_PI:
        raise DomainError(f"core_zero(n={n}) falls outside t > 2pi", n=n, t=t)
    return CoreZero(n=n, t=t)
