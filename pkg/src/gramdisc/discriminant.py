"""The n-th Gram discriminant and its closed-form local structure.

Delta_n(a) is the section Z_N(t; a), N = floor(g_n / 2), evaluated at the
extremum g_n(a) obtained by continuing the Gram point g_n from a = 0.
Closed forms (gradient, Hessian, gradient of g_n) are taken at a = 0 with
theta'(t) = 1/2 ln(t/2pi).
"""

from dataclasses import dataclass, field
from functools import lru_cache
import math

import numpy as np

from .constants import HESSIAN_ZPRIME_FACTOR
from .errors import ExtremumLost, NoConvergence, WindowEscape
from .gram import gram_point
from .section import (
    ParameterVector,
    SectionContext,
    lerp,
    section_eval,
    z_section,
)
from .special import TWO_PI


@dataclass(frozen=True)
class ContinuationOptions:
    steps: int = 16
    max_newton: int = 8
    min_step: float = 2.0**-20
    rtol: float = 1e-12
    window: bool = True


DEFAULT_OPTIONS = ContinuationOptions()


@dataclass(frozen=True)
class ExtendedGramPoint:
    n: int
    a: ParameterVector
    t: float
    steps: int
    newton_iters: int
    converged: bool
    second_deriv_sign: int


@dataclass(frozen=True)
class DiscriminantRecord:
    n: int
    a: ParameterVector
    delta: float
    signed: float
    point: ExtendedGramPoint = field(repr=False)

    def to_dict(self):
        return {
            "n": self.n,
            "a_spec": self.a.to_spec(),
            "t": self.point.t,
            "delta": self.delta,
            "signed": self.signed,
            "steps": self.point.steps,
            "converged": self.point.converged,
        }


def _parity(n):
    return -1.0 if n % 2 else 1.0


def section_context(n):
    """Section of length N(g_n) = floor(g_n / 2) used for Delta_n."""
    return SectionContext.for_t(gram_point(n).t)


def tracking_window(n):
    lo = gram_point(n - 1).t if n >= 0 else TWO_PI
    return lo, gram_point(n + 1).t


def continue_extremum(n, t0, a_from, a_to, ctx=None, opts=DEFAULT_OPTIONS):
    """Follow the extremum of Z_N(t; a) from (a_from, t0) to a_to.

    Walks the segment a(s) = (1-s) a_from + s a_to with a tangent predictor
    and a Newton corrector on dZ_N/dt = 0.  A step is halved when Newton
    needs more than ``opts.max_newton`` iterations, when Z_N'' loses the
    sign of the Gram extremum, or when t leaves the tracking window.

    Returns ``(t, steps, newton_iters)``.
    """
    if ctx is None:
        ctx = section_context(n)
    expected = -_parity(n)
    lo, hi = tracking_window(n) if opts.window else (TWO_PI, math.inf)
    s = 0.0
    t = float(t0)
    ds0 = 1.0 / opts.steps
    ds = ds0
    steps = 0
    iters = 0
    failure = None
    while s < 1.0:
        ds = min(ds, 1.0 - s)
        # Z_N' along the segment is core' + (1-s) P'(a_from) + s P'(a_to)
        _, _, c2 = section_eval(t, ParameterVector.zeros(), ctx)
        _, p_to, q_to = section_eval(t, a_to, ctx, core=False)
        _, p_from, q_from = section_eval(t, a_from, ctx, core=False)
        f2 = c2 + (1.0 - s) * q_from + s * q_to
        tangent = -(p_to - p_from) / f2 if f2 != 0.0 else 0.0
        while True:
            s_new = 1.0 if ds >= 1.0 - s else s + ds
            a_new = lerp(a_from, a_to, s_new, ctx.N)
            t_new = t + (s_new - s) * tangent
            ok = False
            failure = None
            for _ in range(opts.max_newton):
                if not lo < t_new < hi:
                    failure = "window"
                    break
                _, g1, g2 = section_eval(t_new, a_new, ctx)
                if g2 == 0.0 or math.copysign(1.0, g2) != expected:
                    failure = "type"
                    break
                dt = -g1 / g2
                t_new += dt
                iters += 1
                if abs(dt) <= opts.rtol * max(1.0, abs(t_new)):
                    ok = lo < t_new < hi
                    if not ok:
                        failure = "window"
                    break
            else:
                failure = "newton"
            if ok:
                break
            ds *= 0.5
            if ds < opts.min_step:
                ctx_info = {"n": n, "s": s, "t": t, "reason": failure}
                if failure == "window":
                    raise WindowEscape(
                        f"g_{n}(a) left the window ({lo:.9g}, {hi:.9g}) near s={s:.6g}",
                        **ctx_info)
                if failure == "type":
                    raise ExtremumLost(
                        f"extremum of g_{n} changed type or folded near s={s:.6g}",
                        **ctx_info)
                raise NoConvergence(
                    f"continuation of g_{n} stalled near s={s:.6g}", **ctx_info)
        s = s_new
        t = t_new
        steps += 1
        ds = min(2.0 * ds, ds0)
    return t, steps, iters


def extend_gram_point(n, a, opts=DEFAULT_OPTIONS, ctx=None, start=None):
    """Continue g_n from the origin (or from ``start = (a0, t0)``) to ``a``."""
    if ctx is None:
        ctx = section_context(n)
    if start is None:
        a0 = ParameterVector.zeros()
        t0 = gram_point(n).t
    else:
        a0, t0 = start
    if a == a0 or (start is None and a.is_zero()):
        t, steps, iters = float(t0), 0, 0
    else:
        t, steps, iters = continue_extremum(n, t0, a0, a, ctx, opts)
    _, _, f2 = section_eval(t, a, ctx)
    sign = 1 if f2 > 0 else -1
    return ExtendedGramPoint(
        n=n, a=a, t=t, steps=steps, newton_iters=iters, converged=True,
        second_deriv_sign=sign,
    )


def discriminant(n, a, opts=DEFAULT_OPTIONS, start=None):
    """Delta_n(a) = Z_N(g_n(a); a) with N = floor(g_n / 2)."""
    ctx = section_context(n)
    point = extend_gram_point(n, a, opts, ctx, start)
    delta = z_section(point.t, a, ctx)
    return DiscriminantRecord(n=n, a=a, delta=delta, signed=_parity(n) * delta, point=point)


class _Closed:
    """Per-n trigonometric tables shared by the closed forms."""

    def __init__(self, n):
        self.n = n
        self.g = gram_point(n).t
        ctx = section_context(n)
        self.N = ctx.N
        self.sign = _parity(n)
        self.lg = math.log(self.g / TWO_PI)
        x = ctx.logs * self.g
        self.sin_x = np.sin(x)
        self.cos_x = np.cos(x)
        self.inv_sqrt = ctx.inv_sqrts
        self.lam = self.lg - 2.0 * ctx.logs  # ln(g / (2pi (k+1)^2))


@lru_cache(maxsize=32)
def _closed(n):
    return _Closed(n)


def discriminant_gradient(n):
    """d Delta_n / d a_k at 0: cos(theta(g_n) - ln(k+1) g_n) / sqrt(k+1)."""
    c = _closed(n)
    return c.sign * c.cos_x * c.inv_sqrt


def gram_point_gradient(n):
    """d g_n / d a_k at 0.

    2 (-1)^(n+1) sin(theta(g_n) - ln(k+1) g_n) ln(g_n/(2pi(k+1)^2))
    / (sqrt(k+1) ln^2(g_n/2pi)), which after theta(g_n) = pi n is
    2 sin(ln(k+1) g_n) ln(...) / (sqrt(k+1) ln^2(g_n/2pi)).
    """
    c = _closed(n)
    return 2.0 * c.sin_x * c.lam * c.inv_sqrt / (c.lg * c.lg)


def hessian_factor(n):
    """Rank-one factor v with Hess_n(0) = (-1)^n v v^T."""
    c = _closed(n)
    return c.sin_x * c.lam * c.inv_sqrt / c.lg


def hessian_entry(n, k1, k2):
    c = _closed(n)
    for k in (k1, k2):
        if not 1 <= k <= c.N:
            raise IndexError(f"index {k} outside 1..{c.N}")
    v1 = c.sin_x[k1 - 1] * c.lam[k1 - 1] * c.inv_sqrt[k1 - 1] / c.lg
    v2 = c.sin_x[k2 - 1] * c.lam[k2 - 1] * c.inv_sqrt[k2 - 1] / c.lg
    return c.sign * v1 * v2


def hessian_matrix(n, ks):
    """Dense Hessian block for the 1-based indices ``ks``."""
    v = hessian_factor(n)[np.asarray(ks) - 1]
    return _parity(n) * np.outer(v, v)


def z_prime_via_gradient(n, a):
    """Z_N'(g_n; a) = 1/4 (-1)^n ln^2(g_n/2pi) (a . grad g_n(0))."""
    c = _closed(n)
    grad = 2.0 * c.sin_x * c.lam * c.inv_sqrt / (c.lg * c.lg)
    return 0.25 * c.sign * c.lg * c.lg * a.dot(grad)


def hessian_form(n, a):
    """a^T Hess_n(0) a = HESSIAN_ZPRIME_FACTOR (-1)^n (Z'(g_n; a) / ln(g_n/2pi))^2."""
    c = _closed(n)
    zp = z_prime_via_gradient(n, a)
    return HESSIAN_ZPRIME_FACTOR * c.sign * (zp / c.lg) ** 2


def second_order_approx(n, a):
    """Z_N(g_n; a) + 1/2 a^T Hess_n(0) a."""
    g = gram_point(n).t
    ctx = section_context(n)
    return z_section(g, a, ctx) + 0.5 * hessian_form(n, a)


def first_order_approx(n, a):
    """(-1)^n + grad Delta_n(0) . a, which equals Z_N(g_n; a) up to rounding."""
    return _parity(n) + a.dot(discriminant_gradient(n))
