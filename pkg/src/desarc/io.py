"""JSON and CSV serialization of fields, points, arcs, pairs and
configurations.

Field specs serialize as {"p": ..., "k": ..., "modulus": [...]}; prime-field
coordinates as residue integers, extension-field coordinates as coefficient
arrays (constant term first).  Subspaces serialize as their canonical RREF
basis matrices, so equal subspaces always serialize identically.
"""

from __future__ import annotations

import csv
import io as _io
import json
from itertools import combinations

from .arcs import Arc
from .desargues import LabeledConfiguration, PerspectivePair
from .errors import BadSymbols
from .field import GF
from .projlin import ProjPoint, Subspace, join, normalize


# -- fields -----------------------------------------------------------------

def field_to_json(field: GF) -> dict:
    return {
        "p": field.p,
        "k": field.k,
        "modulus": list(field.modulus) if field.modulus else None,
    }


def field_from_json(data) -> GF:
    return GF(data["p"], data.get("k", 1), data.get("modulus"))


# -- coordinates -------------------------------------------------------------

def coords_to_json(field: GF, coords):
    if field.k == 1:
        return list(coords)
    return [list(field.coeffs(v)) for v in coords]


def coords_from_json(field: GF, data):
    if field.k == 1:
        return tuple(int(x) for x in data)
    return tuple(field.from_coeffs(item) for item in data)


def point_to_json(p: ProjPoint):
    return coords_to_json(p.field, p.coords)


def point_from_json(field: GF, data) -> ProjPoint:
    return normalize(field, coords_from_json(field, data))


def subspace_to_json(s: Subspace) -> dict:
    return {
        "n": s.n,
        "d": s.dim,
        "basis": [coords_to_json(s.field, row) for row in s.basis],
    }


def subspace_from_json(field: GF, data) -> Subspace:
    rows = [coords_from_json(field, row) for row in data["basis"]]
    return Subspace(field, data["n"], rows)


# -- arcs ---------------------------------------------------------------------

def arc_to_json(arc: Arc) -> dict:
    return {
        "n": arc.n,
        "field": field_to_json(arc.field),
        "points": [point_to_json(p) for p in arc],
    }


def arc_from_json(data) -> Arc:
    field = field_from_json(data["field"])
    return Arc([point_from_json(field, c) for c in data["points"]])


# -- configurations ---------------------------------------------------------------

def config_to_json(config: LabeledConfiguration) -> dict:
    return {
        "n": config.n,
        "field": field_to_json(config.field),
        "points": [
            {"label": list(lab), "coords": point_to_json(config.point(*lab))}
            for lab in config.labels()
        ],
    }


def config_from_json(data) -> LabeledConfiguration:
    field = field_from_json(data["field"])
    table = {}
    for item in data["points"]:
        i, j = item["label"]
        table[(int(i), int(j))] = point_from_json(field, item["coords"])
    return LabeledConfiguration(field, data["n"], table)


# -- perspective pairs --------------------------------------------------------------

def pair_to_json(pair: PerspectivePair, vertex: ProjPoint) -> dict:
    return {
        "n": pair.n,
        "field": field_to_json(pair.field),
        "A": [point_to_json(p) for p in pair.a],
        "B": [point_to_json(p) for p in pair.b],
        "vertex": point_to_json(vertex),
    }


def pair_from_json(data):
    field = field_from_json(data["field"])
    a = [point_from_json(field, c) for c in data["A"]]
    b = [point_from_json(field, c) for c in data["B"]]
    vertex = point_from_json(field, data["vertex"])
    return PerspectivePair(a, b), vertex


# -- incidence matrix ----------------------------------------------------------------

def incidence_rows(config: LabeledConfiguration):
    """Rows of the point-line incidence matrix: one row per table point
    labeled "i-j", one column per shared-symbol line labeled "i-j-k",
    entries 1 when the point lies on the line (verified geometrically)."""
    triples = list(combinations(config.symbols, 3))
    lines = {}
    for t in triples:
        pts = [config.point(i, j) for i, j in combinations(t, 2)]
        lines[t] = join(*pts)
    header = ["point"] + ["-".join(str(x) for x in t) for t in triples]
    rows = [header]
    for lab in config.labels():
        p = config.point(*lab)
        row = ["-".join(str(x) for x in lab)]
        for t in triples:
            row.append(1 if lines[t].contains_point(p) else 0)
        rows.append(row)
    return rows


def incidence_csv(config: LabeledConfiguration) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in incidence_rows(config):
        writer.writerow(row)
    return buf.getvalue()


# -- generic dispatch -----------------------------------------------------------------

def dumps(data) -> str:
    """Deterministic JSON text: sorted keys, stable layout, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def load_geometry(text: str):
    """Parse a JSON document into (kind, object): an arc, a configuration,
    or a perspective pair, recognized by its fields.  Demo reports embed
    their configuration under a "configuration" key."""
    data = json.loads(text)
    if not isinstance(data, dict):
        raise BadSymbols("expected a JSON object")
    if isinstance(data.get("configuration"), dict):
        data = data["configuration"]
    if "A" in data and "B" in data:
        pair, vertex = pair_from_json(data)
        return "pair", (pair, vertex)
    pts = data.get("points")
    if isinstance(pts, list) and pts and isinstance(pts[0], dict):
        return "config", config_from_json(data)
    if isinstance(pts, list):
        return "arc", arc_from_json(data)
    raise BadSymbols("unrecognized geometry document")
