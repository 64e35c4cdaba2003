"""Gyrolines, cogyrolines, their midpoints and the two distance functions of a gyrovector space.

A gyroline through A and B is ``A ⊕ (⊖A ⊕ B) ⊗ t`` and a cogyroline is
``(B ⊟ A) ⊗ t ⊕ A``; both pass through A at t = 0 and through B at t = 1.
"""

import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np

from gyrokit.core.ball import DEFAULT_TOLERANCE, BallVector, Tolerance
from gyrokit.core.base import GyroOp
from gyrokit.core.errors import DegenerateCurve
from gyrokit.core.result import GyroResult

logger = logging.getLogger(__name__)

CurveKind = Literal["gyroline", "cogyroline"]
CURVE_KINDS: tuple[CurveKind, ...] = ("gyroline", "cogyroline")


def _gyroline(op: GyroOp, a: BallVector, b: BallVector, t: float) -> BallVector:
    return op.add(a, op.mul(t, op.add(op.neg(a), b)))


def _cogyroline(op: GyroOp, a: BallVector, b: BallVector, t: float) -> BallVector:
    return op.add(op.mul(t, op.cosub(b, a)), a)


def _distinct(op: GyroOp, a: BallVector, b: BallVector) -> None:
    op.check_operands(a, b)
    if a == b:
        raise DegenerateCurve(f"A curve needs two distinct points, got A = B = {a.tolist()}")


def gyroline_point(a: BallVector, b: BallVector, t: float, op: GyroOp) -> BallVector:
    _distinct(op, a, b)
    return _gyroline(op, a, b, t)


def cogyroline_point(a: BallVector, b: BallVector, t: float, op: GyroOp) -> BallVector:
    _distinct(op, a, b)
    return _cogyroline(op, a, b, t)


def gyromidpoint(a: BallVector, b: BallVector, op: GyroOp, tol: Tolerance = DEFAULT_TOLERANCE) -> BallVector:
    """M = A ⊕ (⊖A ⊕ B) ⊗ ½, cross-checked against ½ ⊗ (A ⊞ B)."""
    op.check_operands(a, b)
    midpoint = _gyroline(op, a, b, 0.5)
    other = op.mul(0.5, op.coadd(a, b))
    if not midpoint.isclose(other, tol):
        logger.warning("gyromidpoint forms disagree for %s: %s vs %s", op, midpoint, other)
    return midpoint


def cogyromidpoint(a: BallVector, b: BallVector, op: GyroOp, tol: Tolerance = DEFAULT_TOLERANCE) -> BallVector:
    """Mᶜ = (B ⊟ A) ⊗ ½ ⊕ A, the point of the cogyroline co-equidistant from A and B.

    ``½ ⊗ (A ⊕ B)`` is in general a different point; a gap between the two is
    logged at DEBUG.
    """
    op.check_operands(a, b)
    midpoint = _cogyroline(op, a, b, 0.5)
    other = op.mul(0.5, op.add(a, b))
    if not midpoint.isclose(other, tol):
        logger.debug("cogyromidpoint differs from ½ ⊗ (A ⊕ B) for %s: %s vs %s", op, midpoint, other)
    return midpoint


def gyrodistance(a: BallVector, b: BallVector, op: GyroOp) -> float:
    """d(A, B) = ‖⊖A ⊕ B‖."""
    return op.add(op.neg(a), b).norm


def cogyrodistance(a: BallVector, b: BallVector, op: GyroOp) -> float:
    """dᶜ(A, B) = ‖B ⊟ A‖."""
    return op.cosub(b, a).norm


@dataclass(frozen=True)
class GyroCurve:
    """A gyroline or cogyroline through two distinct points, bound to an operation."""

    kind: CurveKind
    a: BallVector
    b: BallVector
    op: GyroOp

    def __post_init__(self) -> None:
        if self.kind not in CURVE_KINDS:
            raise ValueError(f"Curve kind must be one of {CURVE_KINDS}, got {self.kind!r}")
        _distinct(self.op, self.a, self.b)

    def point(self, t: float) -> BallVector:
        if self.kind == "gyroline":
            return _gyroline(self.op, self.a, self.b, t)
        return _cogyroline(self.op, self.a, self.b, t)

    def midpoint(self) -> BallVector:
        if self.kind == "gyroline":
            return gyromidpoint(self.a, self.b, self.op)
        return cogyromidpoint(self.a, self.b, self.op)

    def sample(self, samples: int, t0: float = 0.0, t1: float = 1.0) -> GyroResult:
        """Rows ``(t, x1, ..., xn)`` at ``samples + 1`` evenly spaced parameters from t0 to t1."""
        if samples < 1:
            raise ValueError(f"Curve sampling needs at least one interval, got {samples}")
        ts = np.linspace(t0, t1, samples + 1)
        rows = [[float(t), *self.point(float(t)).tolist()] for t in ts]
        return GyroResult(
            rows,
            metadata={"kind": self.kind, "model": self.op.label, "s": self.op.params.s, "t0": t0, "t1": t1},
        )
