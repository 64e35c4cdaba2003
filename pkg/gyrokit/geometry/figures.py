"""Gyrotriangles, gyrovector equivalence and gyroparallelograms."""

from dataclasses import dataclass

import numpy as np

from gyrokit.algebra.mobius import mob_scalar_add
from gyrokit.core.ball import DEFAULT_TOLERANCE, BallVector, Tolerance
from gyrokit.core.base import GyroOp
from gyrokit.core.errors import DegenerateTriangle

# Sine of the largest angle between ⊖A⊕B and ⊖A⊕C still treated as collinear.
COLLINEAR_SINE = 1e-8

# Addition of signed gyrolengths along a line; the same law in both models.
scalar_add = mob_scalar_add


def is_gyrocollinear(a: BallVector, b: BallVector, c: BallVector, op: GyroOp, sine_tol: float = COLLINEAR_SINE) -> bool:
    """True when C lies on the gyroline through A and B (or two of the points coincide)."""
    op.check_operands(a, b, c)
    u = op.add(op.neg(a), b).coords
    w = op.add(op.neg(a), c).coords
    nu, nw = float(np.linalg.norm(u)), float(np.linalg.norm(w))
    if nu == 0.0 or nw == 0.0:
        return True
    unit = u / nu
    perpendicular = w - np.dot(w, unit) * unit
    return float(np.linalg.norm(perpendicular)) / nw <= sine_tol


@dataclass(frozen=True)
class GyroTriangle:
    """Vertices A, B, C with side gyrovectors ⊖C⊕B, ⊖C⊕A, ⊖B⊕A and their gyrolengths a, b, c."""

    vertices: tuple[BallVector, BallVector, BallVector]
    side_vectors: tuple[BallVector, BallVector, BallVector]
    s: float

    @property
    def sides(self) -> tuple[float, float, float]:
        a, b, c = self.side_vectors
        return a.norm, b.norm, c.norm

    @property
    def a(self) -> float:
        return self.side_vectors[0].norm

    @property
    def b(self) -> float:
        return self.side_vectors[1].norm

    @property
    def c(self) -> float:
        return self.side_vectors[2].norm

    def inequality_holds(self, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        """Each side is at most the gyrosum of the other two."""
        a, b, c = self.sides
        bound = tol.bound(self.s)
        return (
            a <= scalar_add(b, c, self.s) + bound
            and b <= scalar_add(c, a, self.s) + bound
            and c <= scalar_add(a, b, self.s) + bound
        )


def _non_collinear(op: GyroOp, a: BallVector, b: BallVector, c: BallVector) -> None:
    if a == b or b == c or a == c:
        raise DegenerateTriangle(f"Vertices must be pairwise distinct, got {a.tolist()}, {b.tolist()}, {c.tolist()}")
    if is_gyrocollinear(a, b, c, op):
        raise DegenerateTriangle(f"Vertices are gyrocollinear: {a.tolist()}, {b.tolist()}, {c.tolist()}")


def gyrotriangle(a: BallVector, b: BallVector, c: BallVector, op: GyroOp) -> GyroTriangle:
    op.check_operands(a, b, c)
    _non_collinear(op, a, b, c)
    sides = (op.add(op.neg(c), b), op.add(op.neg(c), a), op.add(op.neg(b), a))
    return GyroTriangle((a, b, c), sides, op.params.s)


def gyrovector_equivalent(
    a: BallVector,
    b: BallVector,
    a2: BallVector,
    b2: BallVector,
    op: GyroOp,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> bool:
    """Whether the rooted gyrovectors (A, B) and (A2, B2) share the free gyrovector ⊖A⊕B."""
    op.check_operands(a, b, a2, b2)
    first = op.add(op.neg(a), b)
    second = op.add(op.neg(a2), b2)
    return tol.allows(float(np.linalg.norm(first.coords - second.coords)), op.params.s)


def gyroparallelogram_fourth(a: BallVector, b: BallVector, c: BallVector, op: GyroOp) -> BallVector:
    """D = (B ⊞ C) ⊖ A, completing the gyroparallelogram ABDC."""
    op.check_operands(a, b, c)
    _non_collinear(op, a, b, c)
    return op.sub(op.coadd(b, c), a)


def gyroparallelogram_add(u: BallVector, v: BallVector, op: GyroOp) -> BallVector:
    """The gyroparallelogram law with vertex A = 0, which is coaddition u ⊞ v."""
    return op.coadd(u, v)
