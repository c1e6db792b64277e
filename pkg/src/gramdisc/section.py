"""Z-sections Z_N(t; a), their t-derivatives, the AFE, and the A_k/B_k table.

A section is

    Z_N(t; a) = cos(theta(t)) + sum_{k=1..N} a_k / sqrt(k+1) cos(theta(t) - ln(k+1) t)

evaluated for a parameter vector ``a``.  Derivatives are analytic, term by
term; ``variant`` selects the series or truncated theta' (see
:mod:`gramdisc.special`).
"""

from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np

from . import kernels
from ._rs_coeffs import RS_COEFFS
from .errors import DomainError, LengthMismatchError
from .gram import gram_point
from .special import TWO_PI, theta, theta_prime, theta_second

COMPENSATED_ABOVE = 100_000
RS_TERMS = len(RS_COEFFS)


class ParameterVector:
    """Coefficients a_1..a_N of a point in the A-parameter space.

    Either dense (``values``) or sparse: explicit ``entries`` (1-based index
    -> value) over an implicit ``default`` that fills every other index.
    A sparse vector without ``length`` adapts to whatever section it is
    evaluated in.
    """

    __slots__ = ("_values", "_entries", "_default", "_length")

    def __init__(self, values=None, *, entries=None, default=0.0, length=None):
        if values is not None and entries is not None:
            raise ValueError("give either dense values or sparse entries, not both")
        if values is not None:
            arr = np.array(values, dtype=np.float64)
            if arr.ndim != 1 or arr.size < 1:
                raise ValueError("dense coefficients must be a non-empty 1-d sequence")
            if not np.all(np.isfinite(arr)):
                raise ValueError("coefficients must be finite")
            arr.flags.writeable = False
            self._values = arr
            self._entries = None
            self._default = 0.0
            self._length = arr.size
            return
        entries = {int(k): float(v) for k, v in (entries or {}).items()}
        if any(k < 1 for k in entries):
            raise ValueError("sparse indices are 1-based")
        if not all(math.isfinite(v) for v in entries.values()) or not math.isfinite(default):
            raise ValueError("coefficients must be finite")
        if length is not None:
            length = int(length)
            if length < 1:
                raise ValueError("length must be >= 1")
            if entries and max(entries) > length:
                raise LengthMismatchError("sparse index beyond declared length", length=length)
        self._values = None
        self._entries = dict(sorted(entries.items()))
        self._default = float(default)
        self._length = length

    @classmethod
    def zeros(cls, length=None):
        return cls(entries={}, default=0.0, length=length)

    @classmethod
    def ones(cls, length=None):
        return cls(entries={}, default=1.0, length=length)

    @classmethod
    def constant(cls, r, length=None):
        return cls(entries={}, default=float(r), length=length)

    @property
    def is_sparse(self):
        return self._values is None

    @property
    def default(self):
        return self._default

    @property
    def entries(self):
        return dict(self._entries) if self._entries is not None else None

    def length(self, n_terms=None):
        """Number of coefficients; an adaptive sparse vector takes ``n_terms``."""
        if self._length is not None:
            return self._length
        if n_terms is None:
            raise ValueError("adaptive vector has no intrinsic length")
        return int(n_terms)

    def is_zero(self):
        if self._values is not None:
            return not np.any(self._values)
        return self._default == 0.0 and not any(self._entries.values())

    def dense(self, n_terms=None):
        size = self.length(n_terms)
        if self._values is not None:
            return self._values.copy()
        out = np.full(size, self._default)
        for k, v in self._entries.items():
            if k <= size:
                out[k - 1] = v
        return out

    def scaled(self, s):
        """The vector s * a (used to walk the segment from 0 to a)."""
        s = float(s)
        if self._values is not None:
            return ParameterVector(s * self._values)
        return ParameterVector(
            entries={k: s * v for k, v in self._entries.items()},
            default=s * self._default,
            length=self._length,
        )

    def dot(self, vec):
        """Inner product with a dense array indexed from k = 1."""
        vec = np.asarray(vec, dtype=np.float64)
        if self._values is not None:
            m = min(vec.size, self._values.size)
            return float(np.dot(self._values[:m], vec[:m]))
        size = vec.size if self._length is None else min(vec.size, self._length)
        total = self._default * float(np.sum(vec[:size])) if self._default else 0.0
        for k, v in self._entries.items():
            if k <= size:
                total += (v - self._default) * float(vec[k - 1])
        return total

    def to_spec(self):
        """JSON-ready description used in exported records."""
        if self._values is not None:
            return {"kind": "dense", "values": [float(x) for x in self._values]}
        spec = {"kind": "sparse", "default": self._default,
                "entries": {str(k): v for k, v in self._entries.items()}}
        if self._length is not None:
            spec["length"] = self._length
        return spec

    def __eq__(self, other):
        if not isinstance(other, ParameterVector):
            return NotImplemented
        return self.to_spec() == other.to_spec()

    def __hash__(self):
        return hash(repr(self.to_spec()))

    def __repr__(self):
        if self._values is not None:
            return f"ParameterVector(<dense, N={self._length}>)"
        return (f"ParameterVector(entries={self._entries}, default={self._default}, "
                f"length={self._length})")


def lerp(a, b, s, n_terms=None):
    """(1 - s) a + s b, kept sparse when both ends are sparse."""
    s = float(s)
    if a.is_sparse and b.is_sparse:
        if a._length is not None and b._length is not None and a._length != b._length:
            raise LengthMismatchError("cannot interpolate vectors of different length",
                                      length=a._length, other=b._length)
        keys = set(a._entries) | set(b._entries)
        ea, eb = a._entries, b._entries
        entries = {k: (1.0 - s) * ea.get(k, a._default) + s * eb.get(k, b._default)
                   for k in keys}
        return ParameterVector(entries=entries,
                               default=(1.0 - s) * a._default + s * b._default,
                               length=a._length if a._length is not None else b._length)
    size = max(a.length(n_terms), b.length(n_terms))
    da = np.zeros(size)
    db = np.zeros(size)
    da[:a.length(n_terms)] = a.dense(n_terms)
    db[:b.length(n_terms)] = b.dense(n_terms)
    return ParameterVector((1.0 - s) * da + s * db)


@dataclass(frozen=True, eq=False)
class SectionContext:
    """Immutable ln(k+1) and 1/sqrt(k+1) tables for k = 1..N."""

    N: int
    logs: np.ndarray
    inv_sqrts: np.ndarray

    @property
    def compensated(self):
        return self.N > COMPENSATED_ABOVE

    @classmethod
    def build(cls, N):
        return _context(int(N))

    @classmethod
    def for_t(cls, t):
        """Context with the Spira term count N(t) = floor(t/2)."""
        return _context(spira_terms(t))


@lru_cache(maxsize=16)
def _context(N):
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    kp1 = np.arange(2, N + 2, dtype=np.float64)
    logs = np.log(kp1)
    inv_sqrts = 1.0 / np.sqrt(kp1)
    logs.flags.writeable = False
    inv_sqrts.flags.writeable = False
    return SectionContext(N=N, logs=logs, inv_sqrts=inv_sqrts)


def spira_terms(t):
    """N(t) = floor(t / 2)."""
    return int(math.floor(t / 2.0))


def afe_terms(t):
    """N~(t) = floor(sqrt(t / 2pi))."""
    return int(math.floor(math.sqrt(t / TWO_PI)))


def _check_args(t, a, ctx):
    if not t > TWO_PI:
        raise DomainError(f"sections need t > 2pi, got t={t!r}", t=t)
    if a.length(ctx.N) > ctx.N:
        raise LengthMismatchError(
            f"parameter vector has {a.length(ctx.N)} entries but the section has N={ctx.N}",
            length=a.length(ctx.N), N=ctx.N,
        )


def _phase_sums(t, a, ctx, th, thp):
    """(C, S, SD, CDD) of :func:`kernels.section_sums` for coefficients ``a``."""
    if not a.is_sparse:
        m = a.length()
        weights = np.multiply(a.dense(), ctx.inv_sqrts[:m])
        return kernels.section_sums(th, thp, t, ctx.logs[:m], weights, ctx.compensated)
    m = a.length(ctx.N)
    if a.default != 0.0:
        base = kernels.section_sums(th, thp, t, ctx.logs[:m], ctx.inv_sqrts[:m],
                                    ctx.compensated)
        sums = [a.default * x for x in base]
    else:
        sums = [0.0, 0.0, 0.0, 0.0]
    for k, v in a.entries.items():
        coef = v - a.default
        if coef == 0.0 or k > m:
            continue
        lk = float(ctx.logs[k - 1])
        w = coef * float(ctx.inv_sqrts[k - 1])
        ph = th - lk * t
        c, s, d = math.cos(ph), math.sin(ph), thp - lk
        sums[0] += w * c
        sums[1] += w * s
        sums[2] += w * s * d
        sums[3] += w * c * d * d
    return tuple(sums)


def section_eval(t, a, ctx, variant="series", derivatives=2, core=True):
    """Return ``(Z_N, Z_N', Z_N'')`` at t in a single pass over the terms.

    ``core=False`` drops the cos(theta) term, leaving only the a-linear part.
    """
    _check_args(t, a, ctx)
    th = theta(t)
    thp = theta_prime(t, variant)
    thpp = theta_second(t, variant)
    C, S, SD, CDD = _phase_sums(t, a, ctx, th, thp)
    ct, st = (math.cos(th), math.sin(th)) if core else (0.0, 0.0)
    value = ct + C
    if derivatives == 0:
        return value, None, None
    d1 = -st * thp - SD
    d2 = -ct * thp * thp - st * thpp - CDD - thpp * S
    return value, d1, d2


def z_section(t, a, ctx):
    """Z_N(t; a).  ``a = 0`` reduces to cos(theta(t))."""
    return section_eval(t, a, ctx, derivatives=0)[0]


def z_section_dt(t, a, ctx, variant="series"):
    return section_eval(t, a, ctx, variant)[1]


def z_section_dtt(t, a, ctx, variant="series"):
    return section_eval(t, a, ctx, variant)[2]


@lru_cache(maxsize=8)
def _afe_context(size):
    return _context(size)


def _afe_tables(m):
    # shared power-of-two sized tables, sliced to the m terms needed
    size = 1 << max(4, (m - 1).bit_length())
    ctx = _afe_context(size)
    return ctx.logs[:m], ctx.inv_sqrts[:m]


def _horner(coeffs, z):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _horner_d(coeffs, z):
    acc = 0.0
    dacc = 0.0
    for c in reversed(coeffs):
        dacc = dacc * z + acc
        acc = acc * z + c
    return acc, dacc


def rs_remainder(t, terms=RS_TERMS):
    """Riemann-Siegel remainder and its t-derivative.

    R(t) = (-1)^(M-1) (t/2pi)^(-1/4) sum_{j<terms} C_j(z) (t/2pi)^(-j/2),
    with M = N~(t), p = frac(sqrt(t/2pi)), z = 2p - 1.
    """
    if not 0 <= terms <= RS_TERMS:
        raise ValueError(f"terms must be in 0..{RS_TERMS}")
    if terms == 0:
        return 0.0, 0.0
    x = math.sqrt(t / TWO_PI)
    m = int(math.floor(x))
    z = 2.0 * (x - m) - 1.0
    u = 1.0 / x
    sign = 1.0 if m % 2 == 1 else -1.0
    dz_dt = x / t
    value = 0.0
    deriv = 0.0
    upow = math.sqrt(u)
    for j in range(terms):
        c, dc = _horner_d(RS_COEFFS[j], z)
        value += c * upow
        deriv += dc * dz_dt * upow - (j + 0.5) * c * upow / (2.0 * t)
        upow *= u
    return sign * value, sign * deriv


def _afe_main(t):
    m = afe_terms(t)
    if m < 1:
        raise DomainError(f"AFE needs t >= 2pi, got t={t!r}", t=t)
    th = theta(t)
    thp = theta_prime(t)
    ct, st = math.cos(th), math.sin(th)
    if m > 1:
        logs, w = _afe_tables(m - 1)
        C, _, SD, _ = kernels.section_sums(th, thp, t, logs, w, False)
    else:
        C = SD = 0.0
    return 2.0 * (ct + C), 2.0 * (-st * thp - SD)


def z_afe(t, rs_terms=0):
    """Hardy-Littlewood main sum 2 sum_{k<N~} cos(theta - ln(k+1) t)/sqrt(k+1).

    ``rs_terms`` adds that many Riemann-Siegel remainder terms C_0.. (0 gives
    the bare main sum, accurate only to O(t^-1/4)).
    """
    if not t > TWO_PI:
        raise DomainError(f"AFE needs t > 2pi, got t={t!r}", t=t)
    main, _ = _afe_main(t)
    return main + rs_remainder(t, rs_terms)[0]


def z_prime_afe(t, rs_terms=0):
    """Exact t-derivative of :func:`z_afe` (series theta')."""
    if not t > TWO_PI:
        raise DomainError(f"AFE needs t > 2pi, got t={t!r}", t=t)
    _, main_d = _afe_main(t)
    return main_d + rs_remainder(t, rs_terms)[1]


def hardy_z(t, rs_terms=RS_TERMS):
    """(Z(t), Z'(t)) from the main sum plus the Riemann-Siegel remainder."""
    if not t > TWO_PI:
        raise DomainError(f"Z needs t > 2pi, got t={t!r}", t=t)
    main, main_d = _afe_main(t)
    r, rd = rs_remainder(t, rs_terms)
    return main + r, main_d + rd


def z_accuracy_floor(t):
    """Magnitude below which the sign of ``hardy_z(t)`` is not trusted.

    Ten times the observed truncation error of the five-term remainder,
    plus a rounding allowance for phases of size t ln t.
    """
    return 1e-3 * (t / TWO_PI) ** -2.75 + 1e-13 * t


@dataclass(frozen=True)
class TermRow:
    k: int
    cos_val: float
    sin_val: float
    A: float
    B: float


def term_table(n, k_max):
    """A_k/B_k terms at the Gram point g_n, k = 1..k_max.

    Emitted convention (the one that reproduces the reference table
    row by row):

        cos_val = (-1)^n cos(ln(k+1) g_n)     = cos(theta(g_n) - ln(k+1) g_n)
        sin_val = (-1)^n sin(ln(k+1) g_n)
        A_k     = cos_val / sqrt(k+1)
        B_k     = ln(g_n / (2pi (k+1)^2)) sin_val / sqrt(k+1)

    With this scaling z_afe(g_n) = 2 ((-1)^n + sum_{k<N~} A_k) and the
    main-sum derivative is Z'(g_n) = sum_{k<N~} B_k up to the O(1/g_n^2)
    series corrections of theta'.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    g = gram_point(n).t
    sign = -1.0 if n % 2 else 1.0
    rows = []
    for k in range(1, int(k_max) + 1):
        x = math.log(k + 1) * g
        c = sign * math.cos(x)
        s = sign * math.sin(x)
        r = 1.0 / math.sqrt(k + 1)
        rows.append(TermRow(k, c, s, c * r, math.log(g / (TWO_PI * (k + 1) ** 2)) * s * r))
    return rows
