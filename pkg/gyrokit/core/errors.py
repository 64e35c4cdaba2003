class GyroError(ValueError):
    """Base class for every domain error raised by gyrokit."""


class OutOfBall(GyroError):
    """A point (or velocity) does not lie strictly inside the s-ball."""


class DimensionMismatch(GyroError):
    """Coordinates do not match the ambient dimension of the ball."""


class ParamsMismatch(GyroError):
    """Operands belong to balls with different radius or dimension."""


class DimensionUnsupported(GyroError):
    """The operation is only defined for a specific ball (e.g. the disc, the Bloch ball)."""


class DegenerateCurve(GyroError):
    """A gyroline or cogyroline was requested through two equal points."""


class DegenerateTriangle(GyroError):
    """The vertices are gyrocollinear (or coincide)."""


class DegenerateFit(GyroError):
    """Too few distinct points to fit a circle or a line."""


class VectorParseError(GyroError):
    """A vector literal could not be parsed."""
