"""Sections of arcs, simplexes in perspective, and the lifts between them.

The pipeline both ways:

  * an (n+3)-point arc in PG(n+1, q) avoiding a hyperplane H, sectioned by
    H, yields a labeled configuration of C(n+3, 2) points in PG(n, q); two
    symbols a, b pick out a pair of simplexes in perspective from the point
    labeled (a, b);
  * two simplexes in perspective with no shared point or face lift back to
    such an arc, and sectioning the lift reproduces the pair.

Labels are unordered pairs of symbols 1..n+3; configuration points are kept
in the internal coordinates of the sectioning hyperplane, so they are honest
points of PG(n, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .arcs import Arc, face, frame_off_hyperplane, is_simplex, random_arc_off_hyperplane
from .errors import (
    AmbientMismatch,
    BadSymbols,
    BadT,
    DegenerateLift,
    DegenerateSection,
    EdgesDisjoint,
    FieldTooSmall,
    NoCommonVertex,
    NotASimplex,
    PointOnHyperplane,
    SharedFace,
    SharedPoint,
    WInH,
    WrongCount,
)
from .field import GF
from .projlin import (
    ProjPoint,
    Subspace,
    all_points,
    coordinate_hyperplane,
    coords_in,
    join,
    meet,
    point_from,
    subspace_in,
)


def _label(i: int, j: int):
    return (i, j) if i < j else (j, i)


class LabeledConfiguration:
    """A table of points of PG(n, q) indexed by unordered symbol pairs.

    The full section of an (n+3)-arc uses symbols 1..n+3; restrictions to a
    subset of symbols keep the original symbol names and share the point
    objects, so identity across recursion levels is label-exact.
    """

    __slots__ = ("field", "n", "symbols", "table")

    def __init__(self, field: GF, n: int, table):
        symbols = set()
        for (i, j) in table:
            symbols.add(i)
            symbols.add(j)
        symbols = tuple(sorted(symbols))
        clean = {}
        for (i, j), p in table.items():
            if i == j:
                raise BadSymbols(f"label ({i},{j}) repeats a symbol")
            if not isinstance(p, ProjPoint) or p.field != field or p.n != n:
                raise AmbientMismatch("configuration points must live in PG(n, q)")
            clean[_label(i, j)] = p
        expected = {(a, b) for a, b in combinations(symbols, 2)}
        if set(clean) != expected:
            raise BadSymbols("table must cover every unordered pair of its symbols")
        if len(set(clean.values())) != len(clean):
            raise DegenerateSection("configuration points are not pairwise distinct")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "table", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LabeledConfiguration is immutable")

    def point(self, i: int, j: int) -> ProjPoint:
        try:
            return self.table[_label(i, j)]
        except KeyError:
            raise BadSymbols(f"no point labeled ({i},{j})") from None

    def labels(self):
        return sorted(self.table)

    def points(self):
        return [self.table[lab] for lab in self.labels()]

    def restrict(self, symbols) -> "LabeledConfiguration":
        """Sub-table over a symbol subset; points are shared, labels kept."""
        keep = set(symbols)
        if not keep <= set(self.symbols):
            raise BadSymbols("restriction symbols must be existing symbols")
        sub = {lab: p for lab, p in self.table.items()
               if lab[0] in keep and lab[1] in keep}
        return LabeledConfiguration(self.field, self.n, sub)

    def relabel(self, mapping) -> "LabeledConfiguration":
        """Apply a symbol permutation given as a dict old -> new."""
        sub = {_label(mapping[i], mapping[j]): p for (i, j), p in self.table.items()}
        return LabeledConfiguration(self.field, self.n, sub)

    def __len__(self):
        return len(self.table)

    def __eq__(self, other):
        return (isinstance(other, LabeledConfiguration)
                and self.field == other.field and self.n == other.n
                and self.table == other.table)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return (f"LabeledConfiguration({len(self.table)} points, "
                f"symbols {self.symbols[0]}..{self.symbols[-1]}, PG({self.n}))")


class PerspectivePair:
    """Two simplexes of PG(n, q) in index-wise correspondence.

    Construction verifies both are simplexes, that they share no point, and
    that no face of one equals the corresponding face of the other; the
    perspectivity theorems all assume exactly these hypotheses, so violating
    them fails fast here instead of corrupting downstream geometry.
    """

    __slots__ = ("field", "n", "a", "b", "_faces_a", "_faces_b")

    def __init__(self, a, b):
        a = tuple(a)
        b = tuple(b)
        if len(a) != len(b):
            raise WrongCount("the simplexes must have the same number of points")
        if not is_simplex(a):
            raise NotASimplex("first point set is not a simplex")
        if not is_simplex(b):
            raise NotASimplex("second point set is not a simplex")
        field, n = a[0].field, a[0].n
        if b[0].field != field or b[0].n != n:
            raise AmbientMismatch("the simplexes live in different spaces")
        if set(a) & set(b):
            raise SharedPoint("the simplexes share a point")
        faces_a = tuple(face(a, k) for k in range(n + 1))
        faces_b = tuple(face(b, k) for k in range(n + 1))
        for k in range(n + 1):
            if faces_a[k] == faces_b[k]:
                raise SharedFace(f"corresponding faces {k} coincide")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "_faces_a", faces_a)
        object.__setattr__(self, "_faces_b", faces_b)

    def __setattr__(self, name, value):
        raise AttributeError("PerspectivePair is immutable")

    @property
    def faces_a(self):
        return self._faces_a

    @property
    def faces_b(self):
        return self._faces_b

    def __repr__(self):
        return f"PerspectivePair(n={self.n}, q={self.field.q})"


# -- section -------------------------------------------------------------------

def section_arc(gamma: Arc, h: Subspace) -> LabeledConfiguration:
    """Section the lines of an (n+3)-arc of PG(n+1, q) by the hyperplane h.

    The line through arc points i and j meets h in one point, labeled by the
    unordered pair (i, j); the result is a configuration of C(n+3, 2)
    distinct points expressed in the internal coordinates of h.
    """
    if gamma.field != h.field or gamma.n != h.n:
        raise AmbientMismatch("arc and hyperplane live in different spaces")
    if not h.is_hyperplane:
        raise PointOnHyperplane("the sectioning subspace must be a hyperplane")
    m = len(gamma)
    if m != gamma.n + 2:
        raise WrongCount(f"expected an arc of {gamma.n + 2} points, got {m}")
    for idx, p in enumerate(gamma):
        if h.contains_point(p):
            raise PointOnHyperplane(f"arc point {idx + 1} lies on the hyperplane")

    table = {}
    for i, j in combinations(range(m), 2):
        line = join(gamma[i], gamma[j])
        x = meet(line, h)
        if x.dim != 0:
            raise DegenerateSection(
                f"line {i + 1},{j + 1} does not meet the hyperplane in a point")
        table[(i + 1, j + 1)] = coords_in(h, x.point())
    return LabeledConfiguration(h.field, h.dim, table)


def sectioned_config(n: int, field: GF, h: Subspace = None) -> LabeledConfiguration:
    """The canonical configuration of PG(n, q): the frame-based (n+3)-arc of
    PG(n+1, q) off h (default: the last-coordinate hyperplane), sectioned."""
    if field.q == 2:
        raise FieldTooSmall("sections need a field of order greater than 2")
    if h is None:
        h = coordinate_hyperplane(field, n + 1, n + 1)
    gamma = frame_off_hyperplane(h)
    return section_arc(gamma, h)


def random_sectioned_config(n: int, field: GF, rng,
                            h: Subspace = None) -> LabeledConfiguration:
    """A seeded random configuration: random (n+3)-arc off h, sectioned."""
    if field.q == 2:
        raise FieldTooSmall("sections need a field of order greater than 2")
    if h is None:
        h = coordinate_hyperplane(field, n + 1, n + 1)
    gamma = random_arc_off_hyperplane(h, n + 3, rng)
    return section_arc(gamma, h)


def random_perspective_pair(n: int, field: GF, rng):
    """A seeded random perspective pair with its vertex, drawn from a random
    sectioned configuration at a random vertex label."""
    config = random_sectioned_config(n, field, rng)
    a, b = rng.sample(config.symbols, 2)
    return extract_perspective_pair(config, a, b)


# -- perspectivity -----------------------------------------------------------

def extract_perspective_pair(config: LabeledConfiguration, a: int, b: int):
    """The simplex pair hung off two symbols: A_i = (a, i), B_i = (b, i) for
    the remaining symbols i ascending, with vertex (a, b).

    Returns (pair, vertex).
    """
    if a == b:
        raise BadSymbols("the two symbols must differ")
    if a not in config.symbols or b not in config.symbols:
        raise BadSymbols(f"symbols must come from {config.symbols}")
    rest = [s for s in config.symbols if s not in (a, b)]
    if len(rest) != config.n + 1:
        # sub-tables carry semi-simplex pairs; see configuration.replicate
        raise BadSymbols(
            f"a full table over {config.n + 3} symbols is required, "
            f"got {len(config.symbols)}")
    pa = tuple(config.point(a, i) for i in rest)
    pb = tuple(config.point(b, i) for i in rest)
    return PerspectivePair(pa, pb), config.point(a, b)


def _edge_meet(pair: PerspectivePair, i: int, j: int) -> ProjPoint:
    la = join(pair.a[i], pair.a[j])
    lb = join(pair.b[i], pair.b[j])
    if la == lb:
        raise EdgesDisjoint(i, j, f"edges {i},{j} are the same line")
    x = meet(la, lb)
    if x.dim != 0:
        raise EdgesDisjoint(i, j, f"edges {i},{j} are skew")
    return x.point()


def find_vertex(pair: PerspectivePair) -> ProjPoint:
    """The common point of all lines A_iB_i.

    Checks first that every pair of corresponding edges meets in a point,
    then intersects two of the connector lines and verifies the rest pass
    through the result.
    """
    n = pair.n
    for i, j in combinations(range(n + 1), 2):
        _edge_meet(pair, i, j)

    l0 = join(pair.a[0], pair.b[0])
    l1 = join(pair.a[1], pair.b[1])
    x = meet(l0, l1)
    if x.dim != 0:
        raise NoCommonVertex("the first two connector lines do not meet in a point")
    v = x.point()
    for i in range(2, n + 1):
        if not join(pair.a[i], pair.b[i]).contains_point(v):
            raise NoCommonVertex(f"connector line {i} misses the candidate vertex")
    return v


def edge_intersections(pair: PerspectivePair):
    """All C(n+1, 2) points A_iA_j meet B_iB_j, keyed by the index pair."""
    return {(i, j): _edge_meet(pair, i, j)
            for i, j in combinations(range(pair.n + 1), 2)}


def axis_hyperplane(pair: PerspectivePair) -> Subspace:
    """The hyperplane spanned by the corresponding-edge intersections; it
    carries every face-pair meet as well."""
    pts = edge_intersections(pair)
    return join(*pts.values())


def tspace_intersections(pair: PerspectivePair, t: int):
    """Meets of corresponding t-spaces, one per (t+1)-subset of indices in
    lexicographic order."""
    n = pair.n
    if not 1 <= t <= n - 1:
        raise BadT(f"t must lie in 1..{n - 1}, got {t}")
    out = []
    for idxs in combinations(range(n + 1), t + 1):
        sa = join(*(pair.a[i] for i in idxs))
        sb = join(*(pair.b[i] for i in idxs))
        out.append(meet(sa, sb))
    return out


# -- lifting -------------------------------------------------------------------

def _first_points_on_line(line: Subspace, h: Subspace, exclude, count: int, rng=None):
    """Points of the line off h and outside `exclude`, canonical order, or a
    seeded random sample when rng is given."""
    candidates = [p for p in line.points()
                  if not h.contains_point(p) and p not in exclude]
    if rng is not None:
        return rng.sample(candidates, count)
    return candidates[:count]


def lift_to_arc(pair: PerspectivePair, vertex: ProjPoint, h: Subspace,
                rng=None) -> Arc:
    """Rebuild an (n+3)-arc of PG(n+1, q) whose section by h is the pair.

    h is a hyperplane of PG(n+1, q) serving as the embedded copy of
    PG(n, q); the pair and vertex are given in internal coordinates of h.
    Points 1 and 2 are placed on a line through the vertex leaving h; point
    i (for i = 3..n+3) is the meet of lines 1-A_i and 2-B_i.  The default
    choice of the line and of points 1, 2 is the canonical first valid one;
    passing a seeded rng randomizes it.
    """
    if not h.is_hyperplane:
        raise AmbientMismatch("the embedding must be a hyperplane of PG(n+1, q)")
    if h.dim != pair.n:
        raise AmbientMismatch("the embedding hyperplane has the wrong dimension")
    for k in range(pair.n + 1):
        if pair.faces_a[k].contains_point(vertex) or \
                pair.faces_b[k].contains_point(vertex):
            raise SharedFace("the vertex lies on a face of one of the simplexes")
    for i in range(pair.n + 1):
        if not join(pair.a[i], pair.b[i]).contains_point(vertex):
            raise NoCommonVertex(f"connector line {i} misses the given vertex")

    field = h.field
    v_amb = point_from(h, vertex)
    a_amb = [point_from(h, p) for p in pair.a]
    b_amb = [point_from(h, p) for p in pair.b]

    if rng is None:
        anchor = next(p for p in all_points(field, h.n) if not h.contains_point(p))
    else:
        pool = [p for p in all_points(field, h.n) if not h.contains_point(p)]
        anchor = rng.choice(pool)
    line = join(v_amb, anchor)
    p1, p2 = _first_points_on_line(line, h, {v_amb}, 2, rng)

    pts = [p1, p2]
    for i in range(pair.n + 1):
        x = meet(join(p1, a_amb[i]), join(p2, b_amb[i]))
        if x.dim != 0:
            raise DegenerateLift(f"lines to point {i + 3} do not meet in a point")
        pts.append(x.point())
    return Arc(pts)


@dataclass(frozen=True)
class ConwayLift:
    """Intermediate data of the lift-and-project axis construction."""
    a2_star: ProjPoint
    b2_star: ProjPoint
    h1: Subspace
    h2: Subspace
    axis: Subspace  # in the internal coordinates of the embedding hyperplane


def conway_lift(pair: PerspectivePair, h: Subspace, w: ProjPoint) -> ConwayLift:
    """Lift the second corresponding point pair out of h through w, span the
    two lifted simplexes, and project their meet back into h from w.

    The projected subspace equals the axis hyperplane of the pair; the
    lifted simplexes are required to span distinct hyperplanes of
    PG(n+1, q), which is checked at runtime.
    """
    if not h.is_hyperplane or h.dim != pair.n:
        raise AmbientMismatch("the embedding must be a hyperplane of PG(n+1, q)")
    if w.field != h.field or w.n != h.n:
        raise AmbientMismatch("w must live in the ambient PG(n+1, q)")
    if h.contains_point(w):
        raise WInH("the projection centre must lie off the hyperplane")

    field = h.field
    v = find_vertex(pair)
    v_amb = point_from(h, v)
    a_amb = [point_from(h, p) for p in pair.a]
    b_amb = [point_from(h, p) for p in pair.b]
    a2, b2 = a_amb[1], b_amb[1]

    if join(w, a2, b2).dim < 2:
        raise DegenerateLift("w is collinear with the points being lifted")

    lift_line = join(w, a2)
    a2_star = next(p for p in lift_line.points() if p != w and p != a2)
    x = meet(join(v_amb, a2_star), join(w, b2))
    if x.dim != 0:
        raise DegenerateLift("the lifted connector lines do not meet in a point")
    b2_star = x.point()

    h1 = join(*([a_amb[0], a2_star] + a_amb[2:]))
    h2 = join(*([b_amb[0], b2_star] + b_amb[2:]))
    if h1.dim != pair.n or h2.dim != pair.n or h1 == h2:
        raise DegenerateLift("the lifted simplexes do not span distinct hyperplanes")

    l_star = meet(h1, h2)
    projected = meet(join(w, l_star), h)
    return ConwayLift(a2_star, b2_star, h1, h2, subspace_in(h, projected))


def conway_lift_axis(pair: PerspectivePair, h: Subspace, w: ProjPoint) -> Subspace:
    """The axis recovered by lifting and projecting; equals
    axis_hyperplane(pair) in canonical form."""
    return conway_lift(pair, h, w).axis
