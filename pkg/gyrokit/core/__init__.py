from gyrokit.core.ball import (
    DEFAULT_TOLERANCE,
    BallParams,
    BallVector,
    Tolerance,
    gamma,
    make_ball_vector,
    rapidity,
    rapidity_to_norm,
)
from gyrokit.core.base import GyroOp
from gyrokit.core.errors import (
    DegenerateCurve,
    DegenerateFit,
    DegenerateTriangle,
    DimensionMismatch,
    DimensionUnsupported,
    GyroError,
    OutOfBall,
    ParamsMismatch,
    VectorParseError,
)
from gyrokit.core.result import GyroResult

__all__ = [
    "BallParams",
    "BallVector",
    "Tolerance",
    "DEFAULT_TOLERANCE",
    "make_ball_vector",
    "gamma",
    "rapidity",
    "rapidity_to_norm",
    "GyroOp",
    "GyroResult",
    "GyroError",
    "OutOfBall",
    "DimensionMismatch",
    "ParamsMismatch",
    "DimensionUnsupported",
    "DegenerateCurve",
    "DegenerateTriangle",
    "DegenerateFit",
    "VectorParseError",
]
