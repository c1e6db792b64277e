"""gramdisc command line: one subcommand per computation, CSV or JSON out.

Output is deterministic: floats carry 15 significant digits, JSON keys are
sorted, rows come out in index order whatever ``--threads`` is.  Progress
goes to stderr.  Exit status is 0 on success, 2 on usage errors and 1 on
computation errors, which also print a JSON ``{code, message, context}``.
"""

import functools
import json
import os
import sys

import click

from . import classification as cl
from . import curves as cv
from . import discriminant as dm
from .errors import GramError
from .gram import gram_point
from .output import to_csv, to_json
from .section import ParameterVector, afe_terms, term_table
from .special import DEFAULT_ORDER

SCAN_HEADER = ("n", "t", "z", "z_prime", "good", "viscosity", "isolated", "corrupt", "uncertain")
TRACE_HEADER = ("s", "r1", "r2", "t", "delta", "signed")


def parse_at(value):
    """``ones``, ``zeros`` or ``r=<value>`` as a constant parameter vector."""
    v = value.strip().lower()
    if v == "ones":
        return ParameterVector.ones()
    if v == "zeros":
        return ParameterVector.zeros()
    if v.startswith("r="):
        try:
            return ParameterVector.constant(float(v[2:]))
        except ValueError:
            pass
    raise click.BadParameter(f"expected ones, zeros or r=<value>, got {value!r}")


def _int_list(value):
    try:
        return [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def _waypoints(value):
    try:
        pts = [tuple(float(x) for x in p.split(",")) for p in value.split(";") if p.strip()]
    except ValueError:
        pts = None
    if not pts or any(len(p) != 2 for p in pts):
        raise click.BadParameter(f"expected 'r1,r2;r1,r2;...', got {value!r}")
    return pts


def _check_range(rng):
    lo, hi = rng
    if lo > hi:
        raise click.UsageError(f"--range needs LO <= HI, got {lo} {hi}")
    return lo, hi


def _progress(label):
    def report(done, total):
        click.echo(f"{label}: {done}/{total}", err=True)
    return report


def _emit(ctx, text):
    path = ctx.obj.get("out") if ctx.obj else None
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _fail(code, message, context):
    body = json.dumps({"code": code, "message": message, "context": context},
                      sort_keys=True, default=str)
    click.echo(body)
    sys.exit(1)


def computation(fn):
    """Turn library errors into exit status 1 with a JSON error body."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except GramError as exc:
            _fail(exc.code, exc.message, exc.context)
        except (ValueError, IndexError) as exc:
            _fail("invalid_argument", str(exc), {})
    return wrapper


def output_options(default_format):
    def deco(fn):
        fn = click.option("--out", "out", type=click.Path(dir_okay=False),
                          help="Write to PATH instead of stdout.")(fn)
        fn = click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
                          default=default_format, show_default=True)(fn)
        return fn
    return deco


def _threads_option(fn):
    return click.option("--threads", type=click.IntRange(min=1), default=None,
                        help="Worker processes (default: available cores).")(fn)


def _quiet_option(fn):
    return click.option("--quiet", is_flag=True, help="No progress on stderr.")(fn)


def _workers(threads):
    return threads if threads else (os.cpu_count() or 1)


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Gram points, Gram discriminants and repulsion scans."""


def _index_args(n, rng):
    if (n is None) == (rng is None):
        raise click.UsageError("give exactly one of --n or --range")
    if n is not None:
        return [n], True
    lo, hi = _check_range(rng)
    return list(range(lo, hi + 1)), False


@main.command()
@click.option("--n", type=int)
@click.option("--range", "rng", type=int, nargs=2)
@click.option("--correction-order", type=click.IntRange(0, 2), default=DEFAULT_ORDER,
              show_default=True)
@output_options("json")
@click.pass_context
@computation
def gram(ctx, n, rng, correction_order, fmt, out):
    """Gram points g_n: theta(g_n) = pi n."""
    ctx.obj = {"out": out}
    ns, single = _index_args(n, rng)
    pts = [gram_point(m, correction_order=correction_order) for m in ns]
    if fmt == "csv":
        _emit(ctx, to_csv(("n", "t", "residual"), [(p.n, p.t, p.residual) for p in pts]))
        return
    objs = [{"n": p.n, "t": p.t, "residual": p.residual} for p in pts]
    _emit(ctx, to_json(objs[0] if single else objs))


@main.command()
@click.option("--n", type=int)
@click.option("--range", "rng", type=int, nargs=2)
@click.option("--viscosity", type=click.Choice(cl.VISCOSITY_METHODS), default="analytic",
              show_default=True)
@output_options("csv")
@click.pass_context
@computation
def classify(ctx, n, rng, viscosity, fmt, out):
    """Good/bad classification and viscosity of individual Gram points."""
    ctx.obj = {"out": out}
    ns, single = _index_args(n, rng)
    recs = [cl.classify(m, viscosity) for m in ns]
    header = ("n", "t", "z", "z_prime", "good", "viscosity", "uncertain")
    rows = [tuple(getattr(r, h) for h in header) for r in recs]
    if fmt == "csv":
        _emit(ctx, to_csv(header, rows))
    else:
        objs = [dict(zip(header, row)) for row in rows]
        _emit(ctx, to_json(objs[0] if single else objs))


def _scan_table(rows):
    return [tuple(getattr(r, h) for h in SCAN_HEADER) for r in rows]


@main.command()
@click.option("--range", "rng", type=int, nargs=2, required=True)
@click.option("--viscosity", type=click.Choice(cl.VISCOSITY_METHODS), default="analytic",
              show_default=True)
@_threads_option
@_quiet_option
@output_options("csv")
@click.pass_context
@computation
def scan(ctx, rng, viscosity, threads, quiet, fmt, out):
    """One row per Gram point in a range."""
    ctx.obj = {"out": out}
    lo, hi = _check_range(rng)
    rows = cl.scan_rows(lo, hi, _workers(threads), viscosity,
                        progress=None if quiet else _progress("scan"))
    table = _scan_table(rows)
    if fmt == "csv":
        _emit(ctx, to_csv(SCAN_HEADER, table))
    else:
        _emit(ctx, to_json([dict(zip(SCAN_HEADER, r)) for r in table]))


@main.command()
@click.option("--range", "rng", type=int, nargs=2, required=True)
@_threads_option
@output_options("csv")
@click.pass_context
@computation
def blocks(ctx, rng, threads, fmt, out):
    """Gram blocks covering the bad points of a range."""
    ctx.obj = {"out": out}
    lo, hi = _check_range(rng)
    if lo == hi:
        raise click.UsageError("blocks needs LO < HI")
    found = cl.blocks(lo, hi, workers=_workers(threads))
    if fmt == "csv":
        rows = [(b.start_n, b.length, ";".join(map(str, b.members))) for b in found]
        _emit(ctx, to_csv(("start_n", "length", "members"), rows))
    else:
        _emit(ctx, to_json([{"start_n": b.start_n, "length": b.length,
                             "members": list(b.members)} for b in found]))


@main.command()
@click.option("--range", "rng", type=int, nargs=2, required=True)
@click.option("--viscosity", type=click.Choice(cl.VISCOSITY_METHODS), default="analytic",
              show_default=True)
@_threads_option
@_quiet_option
@output_options("json")
@click.pass_context
@computation
def repulsion(ctx, rng, viscosity, threads, quiet, fmt, out):
    """Check |Z'| > 4|Z| on the isolated bad Gram points of a range.

    JSON gives the summary; CSV lists the bad points with scan columns.
    """
    ctx.obj = {"out": out}
    lo, hi = _check_range(rng)
    report = cl.repulsion_scan(lo, hi, _workers(threads), viscosity,
                               progress=None if quiet else _progress("repulsion"))
    if fmt == "csv":
        _emit(ctx, to_csv(SCAN_HEADER, _scan_table(report.rows)))
    else:
        _emit(ctx, to_json(report.summary()))


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--at", "at", default="ones", show_default=True,
              help="ones, zeros or r=<value>.")
@click.option("--steps", type=click.IntRange(min=1), default=dm.DEFAULT_OPTIONS.steps,
              show_default=True, help="Initial continuation steps.")
@output_options("json")
@click.pass_context
@computation
def discriminant(ctx, n, at, steps, fmt, out):
    """Gram discriminant Delta_n at a parameter vector."""
    ctx.obj = {"out": out}
    a = parse_at(at)
    rec = dm.discriminant(n, a, dm.ContinuationOptions(steps=steps))
    d = rec.to_dict()
    if fmt == "json":
        _emit(ctx, to_json(d))
    else:
        header = ("n", "t", "delta", "signed", "steps", "converged")
        _emit(ctx, to_csv(header, [tuple(d[h] for h in header)]))


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--k-max", type=click.IntRange(min=1), default=None,
              help="Last index (default: the full section length).")
@output_options("csv")
@click.pass_context
@computation
def gradient(ctx, n, k_max, fmt, out):
    """Closed-form gradients of Delta_n and g_n at a = 0."""
    ctx.obj = {"out": out}
    dd = dm.discriminant_gradient(n)
    dg = dm.gram_point_gradient(n)
    k_max = len(dd) if k_max is None else min(k_max, len(dd))
    header = ("k", "d_delta", "d_gram")
    rows = [(k, float(dd[k - 1]), float(dg[k - 1])) for k in range(1, k_max + 1)]
    if fmt == "csv":
        _emit(ctx, to_csv(header, rows))
    else:
        _emit(ctx, to_json([dict(zip(header, r)) for r in rows]))


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--at", "at", default="ones", show_default=True,
              help="ones, zeros or r=<value>.")
@click.option("--ks", default=None, help="Comma-separated indices: emit Hessian entries.")
@output_options("json")
@click.pass_context
@computation
def hessian(ctx, n, at, ks, fmt, out):
    """Hessian of Delta_n at a = 0: the quadratic form, or entries with --ks."""
    ctx.obj = {"out": out}
    if ks is not None:
        idx = _int_list(ks)
        if not idx:
            raise click.BadParameter("--ks needs at least one index")
        rows = [(k1, k2, dm.hessian_entry(n, k1, k2)) for k1 in idx for k2 in idx]
        header = ("k1", "k2", "value")
        if fmt == "csv":
            _emit(ctx, to_csv(header, rows))
        else:
            _emit(ctx, to_json([dict(zip(header, r)) for r in rows]))
        return
    a = parse_at(at)
    d = {
        "n": n,
        "a_spec": a.to_spec(),
        "hessian_form": dm.hessian_form(n, a),
        "z_prime": dm.z_prime_via_gradient(n, a),
        "second_order": dm.second_order_approx(n, a),
    }
    if fmt == "json":
        _emit(ctx, to_json(d))
    else:
        header = ("n", "hessian_form", "z_prime", "second_order")
        _emit(ctx, to_csv(header, [tuple(d[h] for h in header)]))


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--curve", type=click.Choice(["linear", "split"]), default="linear",
              show_default=True)
@click.option("--shift", default=None,
              help="Shift indices for split curves (default: suggest-shift).")
@click.option("--waypoints", default="0,0;1,0.41;1,1", show_default=True,
              help="(r1, r2) waypoints for split curves.")
@click.option("--grid", type=click.IntRange(min=1), default=cv.DEFAULT_GRID,
              show_default=True, help="Samples per segment.")
@click.option("--meta", type=click.Path(dir_okay=False), default=None,
              help="Metadata JSON path for CSV output (default: OUT.meta.json).")
@_quiet_option
@output_options("csv")
@click.pass_context
@computation
def trace(ctx, n, curve, shift, waypoints, grid, meta, quiet, fmt, out):
    """Delta_n sampled along a curve from a = 0 to a = 1.

    Samples are warm-started from one another, so a trace runs serially.
    A continuation failure ends the trace early and is recorded in the
    metadata rather than raised.
    """
    ctx.obj = {"out": out}
    if curve == "linear":
        spec = cv.CurveSpec.linear(grid)
    else:
        idx = _int_list(shift) if shift else cv.suggest_shift_indices(n)
        spec = cv.CurveSpec.split(idx, _waypoints(waypoints), grid)
    tr = cv.trace_discriminant(n, spec, progress=None if quiet else _progress("trace"))
    rows = [(x.s, x.r1, x.r2, x.t, x.delta, x.signed) for x in tr.samples]
    metadata = tr.metadata()
    if fmt == "json":
        _emit(ctx, to_json({"metadata": metadata,
                            "samples": [dict(zip(TRACE_HEADER, r)) for r in rows]}))
        return
    _emit(ctx, to_csv(TRACE_HEADER, rows))
    meta_path = meta or (out + ".meta.json" if out else None)
    if meta_path:
        with open(meta_path, "w", encoding="utf-8") as fh:
            fh.write(to_json(metadata))


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--k-max", type=click.IntRange(min=1), required=True)
@output_options("csv")
@click.pass_context
@computation
def table(ctx, n, k_max, fmt, out):
    """Per-term cosine/sine table of the main sum at g_n."""
    ctx.obj = {"out": out}
    header = ("k", "cos", "sin", "A", "B")
    rows = [(r.k, r.cos_val, r.sin_val, r.A, r.B) for r in term_table(n, k_max)]
    if fmt == "csv":
        _emit(ctx, to_csv(header, rows))
    else:
        _emit(ctx, to_json([dict(zip(header, r)) for r in rows]))


@main.command("suggest-shift")
@click.option("--n", type=int, required=True)
@click.option("--k-max", type=click.IntRange(min=1), default=None)
@click.option("--count", type=click.IntRange(min=1), default=5, show_default=True)
@click.option("--rank", type=click.Choice(["signed", "abs"]), default="signed",
              show_default=True)
@output_options("json")
@click.pass_context
@computation
def suggest_shift(ctx, n, k_max, count, rank, fmt, out):
    """Indices with the largest B_k(g_n), for split curves."""
    ctx.obj = {"out": out}
    if k_max is None:
        k_max = afe_terms(gram_point(n).t)
    idx = cv.suggest_shift_indices(n, k_max, count, rank)
    if fmt == "csv":
        _emit(ctx, to_csv(("k",), [(k,) for k in idx]))
    else:
        _emit(ctx, to_json({"n": n, "k_max": k_max, "count": count, "rank": rank,
                            "indices": list(idx)}))


if __name__ == "__main__":
    main()
