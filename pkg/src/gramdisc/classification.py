"""Good/bad Gram points, Gram blocks, viscosity and repulsion scans."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
import math
import os

from .errors import RangeUnclassifiable
from .gram import gram_point
from .section import RS_TERMS, hardy_z, z_accuracy_floor

REPULSION_CONSTANT = 4.0
# step for viscosity_method="forward"
FORWARD_STEP = 1e-3
VISCOSITY_METHODS = ("analytic", "forward")


@dataclass(frozen=True)
class GramClassRecord:
    n: int
    t: float
    z: float
    z_prime: float
    good: bool
    viscosity: float
    uncertain: bool

    @property
    def bad(self):
        return not self.good


@dataclass(frozen=True)
class GramBlock:
    start_n: int
    length: int

    @property
    def members(self):
        return tuple(range(self.start_n, self.start_n + self.length + 1))

    @property
    def interior(self):
        return self.members[1:-1]


@dataclass(frozen=True)
class RepulsionRow:
    n: int
    t: float
    z: float
    z_prime: float
    good: bool
    viscosity: float
    isolated: bool
    satisfies_bound: bool
    corrupt: bool
    uncertain: bool

    def to_dict(self):
        return asdict(self)


def classify(n, viscosity_method="analytic", rs_terms=RS_TERMS):
    """Classify g_n against (-1)^n Z(g_n) > 0 and measure |Z'/Z| there.

    Z is the Hardy-Littlewood main sum plus ``rs_terms`` Riemann-Siegel
    remainder terms.  ``viscosity_method="forward"`` replaces Z'(g_n) by the
    forward difference (Z(g_n + h) - Z(g_n)) / h with h = 1e-3.
    """
    if viscosity_method not in VISCOSITY_METHODS:
        raise ValueError(f"viscosity_method must be one of {VISCOSITY_METHODS}")
    t = gram_point(n).t
    z, zp = hardy_z(t, rs_terms)
    if viscosity_method == "forward":
        zp = (hardy_z(t + FORWARD_STEP, rs_terms)[0] - z) / FORWARD_STEP
    sign = -1.0 if n % 2 else 1.0
    viscosity = abs(zp / z) if z != 0.0 else math.inf
    return GramClassRecord(
        n=n, t=t, z=z, z_prime=zp, good=sign * z > 0.0, viscosity=viscosity,
        uncertain=abs(z) < z_accuracy_floor(t),
    )


def _classify_chunk(args):
    lo, hi, method = args
    return [classify(n, method) for n in range(lo, hi + 1)]


def classify_range(n_lo, n_hi, workers=1, viscosity_method="analytic", chunk=2000,
                   progress=None):
    """Records for n_lo..n_hi inclusive, in ascending n.

    ``workers > 1`` fans chunks out to a process pool; results are identical
    to the serial run.  ``progress(done, total)`` is called after each chunk.
    """
    if n_lo > n_hi:
        raise ValueError(f"empty range [{n_lo}, {n_hi}]")
    if workers is None:
        workers = os.cpu_count() or 1
    total = n_hi - n_lo + 1
    pieces = [(lo, min(lo + chunk - 1, n_hi), viscosity_method)
              for lo in range(n_lo, n_hi + 1, chunk)]
    out = []
    if workers <= 1 or len(pieces) == 1:
        parts = map(_classify_chunk, pieces)
        for part in parts:
            out.extend(part)
            if progress:
                progress(len(out), total)
        return out
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_classify_chunk, pieces):
            out.extend(part)
            if progress:
                progress(len(out), total)
    return out


def is_isolated_bad(n):
    """True iff g_n is bad and both neighbours are good."""
    if classify(n).good:
        return False
    return classify(n - 1).good and classify(n + 1).good


def _grow_to_good(n, step, limit):
    for i in range(limit):
        m = n + step * i
        if m < -1:
            break
        if classify(m).good:
            return m
    raise RangeUnclassifiable(
        f"no good Gram point within {limit} indices of n={n}", n=n, limit=limit
    )


def blocks(n_lo, n_hi, max_extend=10_000, workers=1):
    """Maximal Gram blocks covering every bad point in n_lo..n_hi.

    A range with no bad points yields an empty list.  Endpoints are
    searched outward past the range until good points are found.
    """
    if not n_lo < n_hi:
        raise ValueError(f"blocks needs n_lo < n_hi, got [{n_lo}, {n_hi}]")
    records = classify_range(n_lo, n_hi, workers)
    good = {r.n: r.good for r in records}
    out = []
    n = n_lo
    while n <= n_hi:
        if good[n]:
            n += 1
            continue
        start = n - 1 if n - 1 >= n_lo else _grow_to_good(n - 1, -1, max_extend)
        m = n
        while m <= n_hi and not good[m]:
            m += 1
        end = m if m <= n_hi else _grow_to_good(m, 1, max_extend)
        out.append(GramBlock(start_n=start, length=end - start))
        n = end
    return out


def block_containing(n, max_extend=10_000):
    """The Gram block whose interior contains the bad point g_n."""
    if classify(n).good:
        raise ValueError(f"g_{n} is good; it is not interior to any block")
    lo = _grow_to_good(n - 1, -1, max_extend)
    hi = _grow_to_good(n + 1, 1, max_extend)
    return GramBlock(start_n=lo, length=hi - lo)


@dataclass(frozen=True)
class RepulsionReport:
    n_lo: int
    n_hi: int
    rows: tuple
    bad_count: int
    isolated_count: int
    violations: tuple
    corrupt: tuple

    def summary(self):
        return {
            "range": [self.n_lo, self.n_hi],
            "bad_count": self.bad_count,
            "isolated_count": self.isolated_count,
            "violations": list(self.violations),
            "corrupt": list(self.corrupt),
        }


def scan_rows(n_lo, n_hi, workers=1, viscosity_method="analytic", progress=None):
    """One row per Gram point in n_lo..n_hi, with isolation and corruption flags."""
    lo = max(n_lo - 1, -1)
    recs = classify_range(lo, n_hi + 1, workers, viscosity_method, progress=progress)
    by_n = {r.n: r for r in recs}
    rows = []
    for n in range(n_lo, n_hi + 1):
        r = by_n[n]
        left = by_n.get(n - 1)
        isolated = (not r.good and left is not None and left.good and by_n[n + 1].good)
        rows.append(RepulsionRow(
            n=n, t=r.t, z=r.z, z_prime=r.z_prime, good=r.good,
            viscosity=r.viscosity, isolated=isolated,
            satisfies_bound=r.viscosity > REPULSION_CONSTANT,
            corrupt=(not r.good) and r.viscosity < REPULSION_CONSTANT,
            uncertain=r.uncertain,
        ))
    return rows


def repulsion_scan(n_lo, n_hi, workers=1, viscosity_method="analytic", progress=None):
    """Check |Z'(g_n)| > 4 |Z(g_n)| on every isolated bad point in range.

    Only bad points appear in the report; ``corrupt`` marks bad points with
    viscosity below 4 and ``violations`` lists the isolated ones among them.
    """
    rows = tuple(r for r in scan_rows(n_lo, n_hi, workers, viscosity_method, progress)
                 if not r.good)
    return RepulsionReport(
        n_lo=n_lo, n_hi=n_hi, rows=rows,
        bad_count=len(rows),
        isolated_count=sum(r.isolated for r in rows),
        violations=tuple(r.n for r in rows if r.isolated and not r.satisfies_bound),
        corrupt=tuple(r.n for r in rows if r.corrupt),
    )
