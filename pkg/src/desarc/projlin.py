"""Exact projective linear algebra over GF(q).

Points are homogeneous coordinate tuples normalized so the first nonzero
coordinate is 1.  Subspaces are stored as reduced-row-echelon bases: one
canonical matrix per row space, so equality, hashing and deduplication are
exact and meets/joins are reproducible bit for bit.  The empty subspace
(projective dimension -1) is a first-class value, which keeps the dimension
formula

    dim<E,F> + dim(E meet F) = dim E + dim F

total, with no special cases.
"""

from __future__ import annotations

from itertools import product

from .errors import (
    AmbientMismatch,
    NotAHyperplane,
    PointNotInSubspace,
    SingularMatrix,
    ZeroVector,
)
from .field import GF


# -- row reduction ----------------------------------------------------------

def rref(field: GF, rows, width: int):
    """Reduced row echelon form. Returns (rows, pivot_columns) with zero
    rows dropped; the output rows are tuples and canonical for the span."""
    mul, sub, inv = field.mul, field.sub, field.inv
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(width):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        if pv != 1:
            piv_inv = inv(pv)
            mat[r] = [mul(piv_inv, x) for x in mat[r]]
        row_r = mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [sub(x, mul(f, y)) for x, y in zip(mat[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rank(field: GF, rows, width: int) -> int:
    return len(rref(field, rows, width)[0])


def nullspace(field: GF, rows, width: int):
    """Canonical (RREF) basis of {x : M x = 0} for the row matrix M."""
    reduced, pivots = rref(field, rows, width)
    pivot_set = set(pivots)
    free = [c for c in range(width) if c not in pivot_set]
    neg = field.neg
    basis = []
    for f in free:
        v = [0] * width
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = neg(reduced[i][f])
        basis.append(v)
    return rref(field, basis, width)[0]


# -- points -------------------------------------------------------------------

def _coerce_coords(field: GF, raw):
    out = []
    for x in raw:
        out.append(field.value(x))
    return tuple(out)


class ProjPoint:
    """A point of PG(n, q): normalized homogeneous coordinates.

    Construction requires already-canonical coordinates; use `normalize` to
    build a point from an arbitrary nonzero vector.
    """

    __slots__ = ("field", "coords")

    def __init__(self, field: GF, coords):
        coords = tuple(coords)
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ZeroVector("projective point needs a nonzero coordinate")
        if lead != 1:
            raise ValueError("coordinates are not normalized; use normalize()")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def __eq__(self, other):
        return (isinstance(other, ProjPoint) and self.field == other.field
                and self.coords == other.coords)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.field, self.coords))

    def __repr__(self):
        return f"Pt{self.coords}"


def normalize(field: GF, raw) -> ProjPoint:
    """Scale a nonzero coordinate vector so its first nonzero entry is 1."""
    coords = _coerce_coords(field, raw)
    lead = next((c for c in coords if c), None)
    if lead is None:
        raise ZeroVector("cannot normalize the zero vector")
    if lead != 1:
        s = field.inv(lead)
        mul = field.mul
        coords = tuple(mul(s, c) for c in coords)
    return ProjPoint(field, coords)


def all_points(field: GF, n: int):
    """All points of PG(n, q) in canonical order: grouped by the position of
    the leading 1, remaining coordinates in increasing code order."""
    q = field.q
    for lead in range(n + 1):
        for tail in product(range(q), repeat=n - lead):
            yield ProjPoint(field, (0,) * lead + (1,) + tail)


def num_points(field: GF, n: int) -> int:
    return (field.q ** (n + 1) - 1) // (field.q - 1)


# -- subspaces ----------------------------------------------------------------

class Subspace:
    """A projective subspace of PG(n, q) as a canonical RREF row basis.

    dim == -1 encodes the empty subspace (empty basis).
    """

    __slots__ = ("field", "n", "basis", "_dual")

    def __init__(self, field: GF, n: int, rows, *, _canonical=False):
        if _canonical:
            basis = tuple(tuple(r) for r in rows)
        else:
            basis = tuple(rref(field, [_coerce_coords(field, r) for r in rows],
                                n + 1)[0])
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_dual", None)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def empty(cls, field: GF, n: int) -> "Subspace":
        return cls(field, n, (), _canonical=True)

    @classmethod
    def from_points(cls, points) -> "Subspace":
        field, n = common_ambient(points)
        return cls(field, n, [p.coords for p in points])

    @property
    def dim(self) -> int:
        return len(self.basis) - 1

    @property
    def is_hyperplane(self) -> bool:
        return self.dim == self.n - 1

    def contains_point(self, p: ProjPoint) -> bool:
        if p.field != self.field or p.n != self.n:
            raise AmbientMismatch("point lives in a different space")
        if self.is_hyperplane:
            d = self.dual_vector()
            mul, add = self.field.mul, self.field.add
            acc = 0
            for x, y in zip(d, p.coords):
                acc = add(acc, mul(x, y))
            return acc == 0
        return self._contains_vector(p.coords)

    def _contains_vector(self, vec) -> bool:
        if not self.basis:
            return False
        reduced, pivots = self.basis, [  # basis is RREF: pivots recoverable
            next(i for i, x in enumerate(row) if x) for row in self.basis]
        sub, mul = self.field.sub, self.field.mul
        v = list(vec)
        for row, pc in zip(reduced, pivots):
            f = v[pc]
            if f:
                v = [sub(x, mul(f, y)) for x, y in zip(v, row)]
        return not any(v)

    def contains(self, other: "Subspace") -> bool:
        _check_same_ambient(self, other)
        return all(self._contains_vector(row) for row in other.basis)

    def dual_vector(self) -> tuple:
        """Normalized coefficient vector of the defining equation; only for
        hyperplanes."""
        if not self.is_hyperplane:
            raise NotAHyperplane(f"dimension {self.dim} in PG({self.n})")
        if self._dual is None:
            ns = nullspace(self.field, self.basis, self.n + 1)
            object.__setattr__(self, "_dual", ns[0])
        return self._dual

    def point(self) -> ProjPoint:
        if self.dim != 0:
            raise ValueError(f"subspace of dimension {self.dim} is not a point")
        return ProjPoint(self.field, self.basis[0])

    def points(self):
        """All points of the subspace, canonical order."""
        if self.dim < 0:
            return
        add, mul = self.field.add, self.field.mul
        width = self.n + 1
        for cpt in all_points(self.field, self.dim):
            vec = [0] * width
            for c, row in zip(cpt.coords, self.basis):
                if c:
                    for i, x in enumerate(row):
                        if x:
                            vec[i] = add(vec[i], mul(c, x))
            yield normalize(self.field, vec)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.n == other.n and self.basis == other.basis)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.field, self.n, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"


def common_ambient(objs):
    """(field, n) shared by a mix of points and subspaces."""
    objs = list(objs)
    if not objs:
        raise AmbientMismatch("no objects given")
    field = objs[0].field
    n = objs[0].n
    for o in objs[1:]:
        if o.field != field or o.n != n:
            raise AmbientMismatch("objects live in different ambient spaces")
    return field, n


def _check_same_ambient(a, b):
    if a.field != b.field or a.n != b.n:
        raise AmbientMismatch("objects live in different ambient spaces")


def join(*parts) -> Subspace:
    """Smallest subspace containing every part (points and subspaces mix)."""
    field, n = common_ambient(parts)
    rows = []
    for part in parts:
        if isinstance(part, ProjPoint):
            rows.append(part.coords)
        elif isinstance(part, Subspace):
            rows.extend(part.basis)
        else:
            raise TypeError(f"cannot join {type(part).__name__}")
    return Subspace(field, n, rows)


def meet(s1: Subspace, s2: Subspace) -> Subspace:
    """Largest subspace contained in both, computed through the duals:
    ann(s1 meet s2) = ann(s1) + ann(s2)."""
    _check_same_ambient(s1, s2)
    field, width = s1.field, s1.n + 1
    a1 = nullspace(field, s1.basis, width)
    a2 = nullspace(field, s2.basis, width)
    stacked = rref(field, list(a1) + list(a2), width)[0]
    rows = nullspace(field, stacked, width)
    return Subspace(field, s1.n, rows, _canonical=True)


def hyperplane_from_dual(field: GF, coeffs) -> Subspace:
    """The hyperplane of all points x with coeffs . x = 0."""
    coeffs = _coerce_coords(field, coeffs)
    if not any(coeffs):
        raise ZeroVector("hyperplane coefficients cannot all be zero")
    n = len(coeffs) - 1
    rows = nullspace(field, [coeffs], n + 1)
    return Subspace(field, n, rows, _canonical=True)


def coordinate_hyperplane(field: GF, n: int, index: int) -> Subspace:
    """The hyperplane x_{index} = 0 of PG(n, q) (index is 0-based)."""
    coeffs = [0] * (n + 1)
    coeffs[index] = 1
    return hyperplane_from_dual(field, coeffs)


# -- subspace-relative coordinates -------------------------------------------

def _vector_in(h: Subspace, vec):
    """Express a vector of <h> in the RREF basis of h; None if outside."""
    pivots = [next(i for i, x in enumerate(row) if x) for row in h.basis]
    c = [vec[pc] for pc in pivots]
    # verify reconstruction: vec == sum c_i * row_i
    add, mul = h.field.add, h.field.mul
    recon = [0] * len(vec)
    for ci, row in zip(c, h.basis):
        if ci:
            for i, x in enumerate(row):
                if x:
                    recon[i] = add(recon[i], mul(ci, x))
    if tuple(recon) != tuple(vec):
        return None
    return c


def coords_in(h: Subspace, p: ProjPoint) -> ProjPoint:
    """Internal coordinates of a point of h, as a point of PG(dim h, q).

    The map is determined by the canonical basis of h, so it is the same
    for equal subspaces no matter how they were produced.
    """
    _check_same_ambient(h, p)
    c = _vector_in(h, p.coords)
    if c is None:
        raise PointNotInSubspace(f"{p} does not lie in the subspace")
    return normalize(h.field, c)


def point_from(h: Subspace, cpoint) -> ProjPoint:
    """Ambient point of h with the given internal coordinates."""
    coords = cpoint.coords if isinstance(cpoint, ProjPoint) else tuple(cpoint)
    add, mul = h.field.add, h.field.mul
    vec = [0] * (h.n + 1)
    for ci, row in zip(coords, h.basis):
        if ci:
            for i, x in enumerate(row):
                if x:
                    vec[i] = add(vec[i], mul(ci, x))
    return normalize(h.field, vec)


def subspace_in(h: Subspace, s: Subspace) -> Subspace:
    """Rewrite a subspace contained in h in h's internal coordinates."""
    _check_same_ambient(h, s)
    rows = []
    for row in s.basis:
        c = _vector_in(h, row)
        if c is None:
            raise PointNotInSubspace("subspace is not contained in the carrier")
        rows.append(c)
    return Subspace(h.field, h.dim, rows)


def subspace_from(h: Subspace, s: Subspace) -> Subspace:
    """Ambient image of a subspace given in h's internal coordinates."""
    rows = [point_from(h, r).coords for r in s.basis]
    return Subspace(h.field, h.n, rows)


# -- collineations -------------------------------------------------------------

def _mat_mul(field: GF, a, b):
    add, mul = field.add, field.mul
    size = len(a)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = 0
            for t in range(size):
                if a[i][t] and b[t][j]:
                    acc = add(acc, mul(a[i][t], b[t][j]))
            row.append(acc)
        out.append(tuple(row))
    return out


def _mat_vec(field: GF, m, v):
    add, mul = field.add, field.mul
    out = []
    for row in m:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = add(acc, mul(x, y))
        out.append(acc)
    return out


def _mat_inverse(field: GF, m):
    size = len(m)
    aug = [list(row) + [1 if i == j else 0 for j in range(size)]
           for i, row in enumerate(m)]
    reduced, pivots = rref(field, aug, 2 * size)
    if pivots[:size] != list(range(size)) or len(reduced) != size:
        raise SingularMatrix("matrix is not invertible")
    return [tuple(row[size:]) for row in reduced]


class Collineation:
    """A projectivity of PG(n, q): an invertible matrix acting on column
    coordinate vectors, stored canonically up to scalar (the first nonzero
    entry of the first row is 1)."""

    __slots__ = ("field", "matrix")

    def __init__(self, field: GF, matrix):
        rows = [_coerce_coords(field, r) for r in matrix]
        size = len(rows)
        if any(len(r) != size for r in rows):
            raise SingularMatrix("collineation matrix must be square")
        if rank(field, rows, size) != size:
            raise SingularMatrix("collineation matrix must be invertible")
        lead = next(x for x in rows[0] if x)
        if lead != 1:
            s = field.inv(lead)
            mul = field.mul
            rows = [tuple(mul(s, x) for x in r) for r in rows]
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("Collineation is immutable")

    @classmethod
    def identity(cls, field: GF, n: int) -> "Collineation":
        return cls(field, [[1 if i == j else 0 for j in range(n + 1)]
                           for i in range(n + 1)])

    @property
    def n(self) -> int:
        return len(self.matrix) - 1

    def apply_point(self, p: ProjPoint) -> ProjPoint:
        if p.field != self.field or p.n != self.n:
            raise AmbientMismatch("point lives in a different space")
        return normalize(self.field, _mat_vec(self.field, self.matrix, p.coords))

    def apply_subspace(self, s: Subspace) -> Subspace:
        if s.field != self.field or s.n != self.n:
            raise AmbientMismatch("subspace lives in a different space")
        rows = [_mat_vec(self.field, self.matrix, r) for r in s.basis]
        return Subspace(self.field, self.n, rows)

    def inverse(self) -> "Collineation":
        return Collineation(self.field, _mat_inverse(self.field, self.matrix))

    def compose(self, other: "Collineation") -> "Collineation":
        """self after other."""
        if other.field != self.field or other.n != self.n:
            raise AmbientMismatch("collineations act on different spaces")
        return Collineation(self.field, _mat_mul(self.field, self.matrix, other.matrix))

    def __eq__(self, other):
        return (isinstance(other, Collineation) and self.field == other.field
                and self.matrix == other.matrix)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.field, self.matrix))

    def __repr__(self):
        return f"Collineation(n={self.n})"


def apply_collineation(c: Collineation, x):
    """Image of a point or subspace, renormalized to canonical form."""
    if isinstance(x, ProjPoint):
        return c.apply_point(x)
    if isinstance(x, Subspace):
        return c.apply_subspace(x)
    raise TypeError(f"cannot apply a collineation to {type(x).__name__}")


def collineation_to_hyperplane(source: Subspace, target: Subspace) -> Collineation:
    """A deterministic collineation mapping the source hyperplane onto the
    target hyperplane set-wise.

    Built as a transposition of the two leading coordinates followed by a
    single elementary row update, so equal inputs always give the same
    matrix.  Identity when source == target.
    """
    _check_same_ambient(source, target)
    if not source.is_hyperplane:
        raise NotAHyperplane("source must be a hyperplane")
    if not target.is_hyperplane:
        raise NotAHyperplane("target must be a hyperplane")
    field = source.field
    size = source.n + 1
    u_s = source.dual_vector()
    u_t = target.dual_vector()
    j = next(i for i, x in enumerate(u_s) if x)
    i_t = next(i for i, x in enumerate(u_t) if x)

    perm = [[1 if r == c else 0 for c in range(size)] for r in range(size)]
    if i_t != j:
        perm[i_t][i_t] = perm[j][j] = 0
        perm[i_t][j] = perm[j][i_t] = 1
    # v = u_t * perm has a 1 in position j
    v = _mat_vec(field, list(zip(*perm)), u_t)  # row vector times matrix
    sub = field.sub
    w = [sub(a, b) for a, b in zip(u_s, v)]
    elem = [[1 if r == c else 0 for c in range(size)] for r in range(size)]
    add = field.add
    elem[j] = [add(x, y) for x, y in zip(elem[j], w)]
    return Collineation(field, _mat_mul(field, perm, elem))
