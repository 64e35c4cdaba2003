import logging

from gyrokit.algebra import Einstein, Euclidean, Mobius, audit, get_model
from gyrokit.core import BallParams, BallVector, GyroError, GyroOp, GyroResult, Tolerance, make_ball_vector

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "BallParams",
    "BallVector",
    "Tolerance",
    "make_ball_vector",
    "GyroOp",
    "GyroResult",
    "GyroError",
    "Mobius",
    "Einstein",
    "Euclidean",
    "get_model",
    "audit",
]
