"""Command-line interface: construct, verify, lift, enumerate, export.

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
geometry error.  With the same flags and the same seed the emitted files are
byte-identical; wall-clock timings go to stderr only.
"""

from __future__ import annotations

import random
import sys
from math import comb

import click

from . import io as gio
from .configuration import (
    substructure_counts,
    triple_perspective_axis,
    verify_symbol_incidence,
    vertex_sweep,
)
from .desargues import (
    axis_hyperplane,
    conway_lift_axis,
    edge_intersections,
    extract_perspective_pair,
    find_vertex,
    lift_to_arc,
    random_sectioned_config,
    section_arc,
    sectioned_config,
    tspace_intersections,
)
from .enumeration import EnumJob, run_job
from .errors import GeometryError
from .field import GF
from .projlin import all_points, coordinate_hyperplane, meet
from .io import dumps


def _field_from_flags(p: int, k: int, modulus):
    mod = [int(x) for x in modulus.split(",")] if modulus else None
    return GF(p, k, mod)


def _load(path: str):
    """Read and dispatch a geometry file; malformed input is a usage error."""
    with open(path) as fh:
        text = fh.read()
    try:
        return gio.load_geometry(text)
    except GeometryError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise click.UsageError(f"cannot parse {path}: {exc}") from exc


def _emit(text: str, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _fail(exc: GeometryError):
    click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
    sys.exit(2)


field_options = [
    click.option("--n", "n", type=int, required=True, help="projective dimension"),
    click.option("--p", "p", type=int, required=True, help="field characteristic"),
    click.option("--k", "k", type=int, default=1, show_default=True,
                 help="field extension degree"),
    click.option("--modulus", default=None,
                 help="comma-separated modulus coefficients, constant first"),
]


def add_options(options):
    def wrap(fn):
        for opt in reversed(options):
            fn = opt(fn)
        return fn
    return wrap


@click.group()
def main():
    """Exact constructions and checks in PG(n, q): arc sections,
    simplexes in perspective, configuration analysis, enumeration."""


@main.command()
@add_options(field_options)
@click.option("--seed", type=int, default=None,
              help="randomize the arc with this seed (default: canonical arc)")
@click.option("--out", default=None, help="write the report to this path")
def demo(n, p, k, modulus, seed, out):
    """Build a sectioned configuration and sweep all vertices."""
    try:
        field = _field_from_flags(p, k, modulus)
        if seed is None:
            config = sectioned_config(n, field)
        else:
            config = random_sectioned_config(n, field, random.Random(seed))
        report = vertex_sweep(config)
    except GeometryError as exc:
        _fail(exc)
    lhs, parts = report.identity
    doc = {
        "configuration": gio.config_to_json(config),
        "report": {
            "n": n,
            "q": field.q,
            "point_total": report.point_total,
            "vertices_total": report.total,
            "vertices_passed": report.passed,
            "identity": {"total": lhs, "simplex_points": parts[0],
                         "vertex": parts[1], "edge_intersections": parts[2]},
            "entries": [{"label": list(e.label), "ok": e.ok}
                        for e in report.entries],
        },
    }
    _emit(dumps(doc), out)
    click.echo(
        f"{report.point_total} points, {report.passed}/{report.total} vertices pass, "
        f"identity {lhs} = {parts[0]}+{parts[1]}+{parts[2]}", err=True)
    sys.exit(0 if report.all_ok else 1)


@main.command()
@click.argument("arc_file", type=click.Path(exists=True))
@click.option("--out", default=None, help="write the configuration to this path")
def section(arc_file, out):
    """Section an arc file by the last-coordinate hyperplane."""
    try:
        kind, obj = _load(arc_file)
        if kind != "arc":
            raise click.UsageError("the input file does not hold an arc")
        arc = obj
        h = coordinate_hyperplane(arc.field, arc.n, arc.n)
        config = section_arc(arc, h)
    except GeometryError as exc:
        _fail(exc)
    _emit(dumps(gio.config_to_json(config)), out)


@main.command()
@click.argument("pair_file", type=click.Path(exists=True))
@click.option("--seed", type=int, default=None,
              help="randomize the free choices in the lift")
@click.option("--out", default=None, help="write the arc to this path")
def lift(pair_file, seed, out):
    """Lift a perspective pair to an arc one dimension up."""
    try:
        kind, obj = _load(pair_file)
        if kind != "pair":
            raise click.UsageError("the input file does not hold a pair")
        pair, vertex = obj
        h = coordinate_hyperplane(pair.field, pair.n + 1, pair.n + 1)
        rng = random.Random(seed) if seed is not None else None
        arc = lift_to_arc(pair, vertex, h, rng)
    except GeometryError as exc:
        _fail(exc)
    _emit(dumps(gio.arc_to_json(arc)), out)


def _verify_pair(pair, vertex):
    """Theorem checks for one pair; returns a list of (name, ok) entries.
    A typed geometry error inside the battery counts as a failed check,
    not a usage error."""
    checks = []
    try:
        return _pair_battery(pair, vertex, checks)
    except GeometryError as exc:
        checks.append((f"pair_battery_{type(exc).__name__}", False))
        return checks


def _pair_battery(pair, vertex, checks):
    n = pair.n
    found = find_vertex(pair)
    checks.append(("vertex_concurrence", found == vertex))

    meets = edge_intersections(pair)
    distinct = len(set(meets.values())) == comb(n + 1, 2)
    outside = all(pt not in pair.a and pt not in pair.b and pt != vertex
                  for pt in meets.values())
    checks.append(("edge_intersections_distinct", distinct))
    checks.append(("edge_intersections_disjoint", outside))

    axis = axis_hyperplane(pair)
    checks.append(("axis_is_hyperplane", axis.dim == n - 1))
    checks.append(("axis_carries_intersections",
                   all(axis.contains_point(pt) for pt in meets.values())))

    ok_t = True
    for t in range(1, n):
        for sub in tspace_intersections(pair, t):
            if sub.dim != t - 1 or not axis.contains(sub):
                ok_t = False
    checks.append(("tspace_meets", ok_t))

    face_ok = all(
        meet(fa, fb).dim == n - 2 and axis.contains(meet(fa, fb))
        for fa, fb in zip(pair.faces_a, pair.faces_b))
    checks.append(("face_meets_in_axis", face_ok))

    # lift-and-project agreement
    h = coordinate_hyperplane(pair.field, n + 1, n + 1)
    w = next(pt for pt in all_points(pair.field, n + 1)
             if not h.contains_point(pt))
    checks.append(("lift_project_axis", conway_lift_axis(pair, h, w) == axis))

    # round trip through the arc
    arc = lift_to_arc(pair, vertex, h)
    config = section_arc(arc, h)
    round_ok = (all(config.point(1, i + 3) == pair.a[i] for i in range(n + 1))
                and all(config.point(2, i + 3) == pair.b[i] for i in range(n + 1))
                and config.point(1, 2) == vertex)
    checks.append(("lift_section_round_trip", round_ok))
    return checks


def _verify_config(config):
    checks = [("symbol_incidence", verify_symbol_incidence(config))]
    counts = substructure_counts(config)
    s = len(config.symbols)
    expected = {k - 2: comb(s, k) for k in range(2, min(config.n + 1, s - 1) + 1)}
    checks.append(("substructure_counts", counts == expected))
    report = vertex_sweep(config)
    checks.append(("vertex_sweep", report.all_ok))
    if config.n >= 2 and len(config.symbols) >= 5:
        try:
            triple_perspective_axis(config)
            checks.append(("triple_perspective_axis", True))
        except GeometryError:
            checks.append(("triple_perspective_axis", False))
    try:
        pair, vertex = extract_perspective_pair(
            config, config.symbols[0], config.symbols[1])
        checks.extend(_verify_pair(pair, vertex))
    except GeometryError as exc:
        checks.append((f"pair_extraction_{type(exc).__name__}", False))
    return checks


@main.command()
@click.argument("input_file", type=click.Path(exists=True))
@click.option("--out", default=None, help="write the report to this path")
def verify(input_file, out):
    """Run the full theorem battery on a configuration or pair file."""
    try:
        kind, obj = _load(input_file)
        if kind == "config":
            checks = _verify_config(obj)
        elif kind == "pair":
            checks = _verify_pair(*obj)
        else:
            raise click.UsageError("verify expects a configuration or pair file")
    except GeometryError as exc:
        _fail(exc)
    doc = {"checks": [{"name": name, "ok": ok} for name, ok in checks],
           "all_ok": all(ok for _, ok in checks)}
    _emit(dumps(doc), out)
    for name, ok in checks:
        click.echo(f"{'PASS' if ok else 'FAIL'}  {name}", err=True)
    sys.exit(0 if doc["all_ok"] else 1)


@main.command(name="enumerate")
@add_options(field_options)
@click.option("--kind", type=click.Choice(["arcs", "frames", "sectioned-configs"]),
              required=True)
@click.option("--m", "m", type=int, default=None, help="tuple size for arc jobs")
@click.option("--avoid", is_flag=True, default=False,
              help="only points off the last-coordinate hyperplane (arc jobs)")
@click.option("--budget", type=int, default=10 ** 9, show_default=True,
              help="node budget for the search")
@click.option("--out", default=None, help="write the counts to this path")
def enumerate_cmd(n, p, k, modulus, kind, m, avoid, budget, out):
    """Count arcs, frames, or sectioned configurations exactly."""
    try:
        field = _field_from_flags(p, k, modulus)
        if kind == "sectioned-configs":
            hyper = coordinate_hyperplane(field, n + 1, n + 1)
        elif avoid:
            hyper = coordinate_hyperplane(field, n, n)
        else:
            hyper = None
        job = EnumJob(kind, n, field, m=m, avoid=hyper, budget=budget)
        result = run_job(job)
    except GeometryError as exc:
        _fail(exc)
    doc = {
        "job": {"kind": kind, "n": n, "field": gio.field_to_json(field),
                "m": m, "avoid_hyperplane": hyper is not None, "budget": budget},
        "raw_count": result.raw_count,
        "unordered_count": result.unordered_count,
        "nodes": result.nodes,
    }
    _emit(dumps(doc), out)
    click.echo(f"count {result.raw_count} ({result.nodes} nodes, "
               f"{result.wall_seconds:.3f}s)", err=True)


@main.command()
@click.argument("config_file", type=click.Path(exists=True))
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--out", default=None, help="write the matrix to this path")
def export(config_file, fmt, out):
    """Export the point-line incidence matrix of a configuration."""
    try:
        kind, obj = _load(config_file)
        if kind != "config":
            raise click.UsageError("export expects a configuration file")
        if fmt == "csv":
            text = gio.incidence_csv(obj)
        else:
            rows = gio.incidence_rows(obj)
            text = dumps({"header": rows[0], "rows": rows[1:]})
    except GeometryError as exc:
        _fail(exc)
    _emit(text, out)


if __name__ == "__main__":
    main()
