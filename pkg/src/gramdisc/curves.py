"""Paths through the A-parameter space and discriminant traces along them."""

from dataclasses import dataclass, field
import math

from .discriminant import ContinuationOptions, discriminant, section_context
from .errors import GramError, SpecError
from .gram import gram_point
from .section import ParameterVector, afe_terms, lerp, term_table

DEFAULT_GRID = 64
# each grid interval is a single continuation step; failures still bisect
TRACE_OPTIONS = ContinuationOptions(steps=1)
CURVE_KINDS = ("linear", "split", "piecewise")


@dataclass(frozen=True)
class CurveSpec:
    """A path from a = 0 to a = 1.

    ``linear``: a_k = s for every k.
    ``split``: a_k = r1 on ``shift_indices`` and r2 elsewhere, with (r1, r2)
    moving linearly through ``waypoints`` from (0, 0) to (1, 1).
    ``piecewise``: straight segments through explicit ParameterVector
    ``waypoints``.

    Every segment gets an equal share of s in [0, 1] and ``grid`` samples.
    """

    kind: str
    shift_indices: frozenset = frozenset()
    waypoints: tuple = ()
    grid: int = DEFAULT_GRID
    r_max: float = 1.0

    def __post_init__(self):
        if self.kind not in CURVE_KINDS:
            raise SpecError(f"unknown curve kind {self.kind!r}", kind=self.kind)
        if self.grid < 1:
            raise SpecError("grid must be >= 1", grid=self.grid)
        object.__setattr__(self, "shift_indices", frozenset(int(k) for k in self.shift_indices))
        if self.kind == "split":
            pts = tuple((float(a), float(b)) for a, b in self.waypoints)
            object.__setattr__(self, "waypoints", pts)
            if len(pts) < 2 or pts[0] != (0.0, 0.0) or pts[-1] != (1.0, 1.0):
                raise SpecError("split waypoints must run from (0, 0) to (1, 1)",
                                waypoints=pts)
            if any(not 0.0 <= x <= self.r_max for p in pts for x in p):
                raise SpecError(f"waypoint coordinates must lie in [0, {self.r_max}]",
                                waypoints=pts)
            if not self.shift_indices or min(self.shift_indices) < 1:
                raise SpecError("split curves need 1-based shift indices",
                                shift_indices=sorted(self.shift_indices))
        elif self.kind == "piecewise":
            pts = tuple(self.waypoints)
            if len(pts) < 2 or not all(isinstance(p, ParameterVector) for p in pts):
                raise SpecError("piecewise curves need >= 2 ParameterVector waypoints")
            if not pts[0].is_zero():
                raise SpecError("piecewise curves must start at a = 0")

    @classmethod
    def linear(cls, grid=DEFAULT_GRID):
        return cls("linear", grid=grid)

    @classmethod
    def split(cls, shift_indices, waypoints, grid=DEFAULT_GRID, r_max=1.0):
        return cls("split", frozenset(shift_indices), tuple(waypoints), grid, r_max)

    @property
    def segments(self):
        return 1 if self.kind == "linear" else len(self.waypoints) - 1

    def check_indices(self, N):
        if self.shift_indices and max(self.shift_indices) > N:
            raise SpecError(f"shift index beyond N={N}", N=N)

    def sample_points(self):
        total = self.segments * self.grid
        return [i / total for i in range(total + 1)]

    def to_dict(self):
        out = {"kind": self.kind, "grid": self.grid}
        if self.kind == "split":
            out["shift_indices"] = sorted(self.shift_indices)
            out["waypoints"] = [list(p) for p in self.waypoints]
        elif self.kind == "piecewise":
            out["waypoints"] = [p.to_spec() for p in self.waypoints]
        return out


def _locate(spec, s):
    if not 0.0 <= s <= 1.0:
        raise SpecError(f"curve parameter must lie in [0, 1], got {s!r}", s=s)
    m = spec.segments
    j = min(int(math.floor(s * m)), m - 1)
    return j, s * m - j


def split_coordinates(spec, s):
    """(r1, r2) at parameter s; for linear curves both equal s."""
    if spec.kind == "linear":
        return float(s), float(s)
    if spec.kind != "split":
        return None
    j, u = _locate(spec, s)
    (a1, a2), (b1, b2) = spec.waypoints[j], spec.waypoints[j + 1]
    return a1 + u * (b1 - a1), a2 + u * (b2 - a2)


def curve_eval(spec, s):
    """Parameter vector on the curve at s in [0, 1]."""
    if spec.kind == "linear":
        _locate(spec, s)
        return ParameterVector.constant(float(s))
    if spec.kind == "split":
        r1, r2 = split_coordinates(spec, s)
        return ParameterVector(entries={k: r1 for k in spec.shift_indices}, default=r2)
    j, u = _locate(spec, s)
    return lerp(spec.waypoints[j], spec.waypoints[j + 1], u)


@dataclass(frozen=True)
class CurveSample:
    s: float
    r1: float
    r2: float
    a: ParameterVector = field(repr=False)
    t: float
    delta: float
    signed: float


@dataclass(frozen=True)
class CurveTrace:
    n: int
    spec: CurveSpec
    samples: tuple
    failed_at: float = None
    error: dict = None

    @property
    def min_signed(self):
        return min(x.signed for x in self.samples) if self.samples else math.nan

    @property
    def complete(self):
        return self.failed_at is None

    def metadata(self):
        return {
            "n": self.n,
            "spec": self.spec.to_dict(),
            "min_signed": self.min_signed,
            "violations": [list(v) for v in sign_violations(self)],
            "failed_at": self.failed_at,
            "error": self.error,
        }


def trace_discriminant(n, spec, opts=TRACE_OPTIONS, progress=None):
    """Delta_n along the curve, warm-starting each sample from the previous one.

    A continuation failure ends the trace early; the error and the curve
    parameter where it happened are recorded instead of raised.
    ``progress(done, total)`` is called after each sample.
    """
    spec.check_indices(section_context(n).N)
    samples = []
    prev = None
    points = spec.sample_points()
    for s in points:
        a = curve_eval(spec, s)
        try:
            rec = discriminant(n, a, opts, start=prev)
        except GramError as exc:
            return CurveTrace(n, spec, tuple(samples), failed_at=s, error=exc.to_dict())
        coords = split_coordinates(spec, s) or (math.nan, math.nan)
        samples.append(CurveSample(s, coords[0], coords[1], a, rec.point.t,
                                   rec.delta, rec.signed))
        prev = (a, rec.point.t)
        if progress:
            progress(len(samples), len(points))
    return CurveTrace(n, spec, tuple(samples))


def sign_violations(trace):
    """Maximal runs of samples with signed <= 0, as (s_first, s_last) pairs."""
    out = []
    run = None
    for x in trace.samples:
        if x.signed <= 0.0:
            run = (run[0], x.s) if run else (x.s, x.s)
        elif run:
            out.append(run)
            run = None
    if run:
        out.append(run)
    return out


def suggest_shift_indices(n, k_max=None, count=5, rank="signed"):
    """The ``count`` indices k <= k_max with the largest B_k(g_n).

    B_k is taken in the term-table convention, which carries the (-1)^n
    factor, so ``rank="signed"`` picks the largest positive contributions
    to the main-sum Z'(g_n) = sum_k B_k.  ``rank="abs"`` orders by |B_k|
    instead.  Ties go to the smaller k.  ``k_max`` defaults to the AFE
    length floor(sqrt(g_n / 2pi)).
    """
    if rank not in ("signed", "abs"):
        raise ValueError(f"rank must be 'signed' or 'abs', got {rank!r}")
    if k_max is None:
        k_max = afe_terms(gram_point(n).t)
    if not 1 <= count <= k_max:
        raise ValueError(f"need 1 <= count <= k_max, got count={count}, k_max={k_max}")
    rows = term_table(n, k_max)
    key = (lambda r: (-r.B, r.k)) if rank == "signed" else (lambda r: (-abs(r.B), r.k))
    return tuple(sorted(r.k for r in sorted(rows, key=key)[:count]))
