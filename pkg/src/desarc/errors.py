"""Typed errors raised by the geometry engine.

Every degenerate geometric situation maps to its own exception class so
callers (and the CLI) can distinguish bad input from internal inconsistency.
"""


class GeometryError(Exception):
    """Base class for all errors raised by this package."""


# field construction and arithmetic

class InvalidField(GeometryError):
    """Field parameters are inconsistent (p not prime, bad modulus, ...)."""


class MixedFields(GeometryError):
    """Two operands belong to different fields."""


class DivisionByZero(GeometryError, ZeroDivisionError):
    """Inversion or division by the zero element."""


# projective linear algebra

class ZeroVector(GeometryError):
    """An all-zero coordinate vector where a projective point was expected."""


class AmbientMismatch(GeometryError):
    """Objects live in different ambient spaces or over different fields."""


class NotAHyperplane(GeometryError):
    """A hyperplane (codimension-1 subspace) was required."""


class SingularMatrix(GeometryError):
    """A collineation matrix must be invertible."""


class PointNotInSubspace(GeometryError):
    """Tried to express a point in the internal coordinates of a subspace
    that does not contain it."""


# simplexes and arcs

class WrongCount(GeometryError):
    """Wrong number of points for the requested construction."""


class TooFew(GeometryError):
    """Fewer points than the minimum the definition allows."""


class NotASimplex(GeometryError):
    """The given points do not span the space."""


class NotAnArc(GeometryError):
    """A point set violates the arc property (some subset is degenerate)."""


class FieldTooSmall(GeometryError):
    """The construction needs a field of order greater than 2."""


# sections and perspectivity

class PointOnHyperplane(GeometryError):
    """An arc point lies on the sectioning hyperplane."""


class DegenerateSection(GeometryError):
    """Section points collided; internal consistency failure for a valid arc."""


class BadSymbols(GeometryError):
    """Symbol labels are out of range, equal, or not in the table."""


class SharedPoint(GeometryError):
    """The two simplexes share a point."""


class SharedFace(GeometryError):
    """The two simplexes share a face, or the vertex lies on a face."""


class EdgesDisjoint(GeometryError):
    """A pair of corresponding edges is skew or coincident."""

    def __init__(self, i, j, message=None):
        self.i = i
        self.j = j
        super().__init__(message or f"edges {i},{j} do not meet in a single point")


class NoCommonVertex(GeometryError):
    """The lines through corresponding points are not concurrent."""


class BadT(GeometryError):
    """t is outside the valid range 1..n-1."""


class DegenerateLift(GeometryError):
    """The lifted simplexes collapsed (collinear choices or coplanar images)."""


class WInH(GeometryError):
    """The projection centre must lie off the designated hyperplane."""


# configurations

class TooFewSymbols(GeometryError):
    """A symbol table needs at least 3 symbols to replicate."""


class DegenerateConfiguration(GeometryError):
    """A labeled table violates the incidence structure it should carry."""


# enumeration

class BudgetExceeded(GeometryError):
    """The search walked more nodes than the configured budget."""
