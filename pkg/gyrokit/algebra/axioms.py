"""Generic gyrogroup engine: gyrations by definition, loop equations, and the axiom audit.

Everything here works for any :class:`~gyrokit.core.base.GyroOp`; nothing
assumes a closed form for the gyrations of the ball.
"""

import json
import logging
import math
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np

from gyrokit.core.ball import DEFAULT_TOLERANCE, BallVector, FloatArray, Tolerance, gamma_sq_array
from gyrokit.core.base import GyroOp
from gyrokit.core.errors import DimensionUnsupported
from gyrokit.core.result import GyroResult
from gyrokit.core.sampling import DEFAULT_CAP, index_rng, sample_coords

logger = logging.getLogger(__name__)

# Probe size for gyration matrices, as a fraction of s.
PROBE_EPS = 1e-6
# Fraction of audit samples drawn with b close to ⊖a.
DEGENERATE_FRACTION = 0.05


def gyr(op: GyroOp, a: BallVector, b: BallVector, z: BallVector) -> BallVector:
    """gyr[a,b]z = ⊖(a⊕b) ⊕ (a⊕(b⊕z))."""
    return op.gyr(a, b, z)


def gyr_matrix(op: GyroOp, a: BallVector, b: BallVector) -> GyroResult:
    """Materialize gyr[a,b] as an n×n matrix by probing ε-scaled basis vectors.

    The result's metadata carries ``linearity_residual`` (ε vs 2ε probes),
    ``orthogonality_residual`` (max |MᵀM - I|) and ``determinant``.
    """
    op.gyr(a, b, op.zero)
    eps = PROBE_EPS * op.params.s
    basis = np.eye(op.params.dim)
    matrix = (op.gyr_array(a.coords, b.coords, eps * basis) / eps).T
    matrix2 = (op.gyr_array(a.coords, b.coords, 2.0 * eps * basis) / (2.0 * eps)).T
    gram = matrix.T @ matrix
    return GyroResult(
        matrix,
        metadata={
            "linearity_residual": float(np.max(np.abs(matrix - matrix2))),
            "orthogonality_residual": float(np.max(np.abs(gram - np.eye(op.params.dim)))),
            "determinant": float(np.linalg.det(matrix)),
        },
    )


def gyr_angle(op: GyroOp, a: BallVector, b: BallVector) -> float:
    """Rotation angle (radians, in (-π, π]) of a gyration of the 2-ball."""
    if op.params.dim != 2:
        raise DimensionUnsupported(f"Gyration angles are defined for dim 2 only, got dim={op.params.dim}")
    probe = op.vector([0.5 * op.params.s, 0.0])
    image = op.gyr(a, b, probe).coords
    return math.atan2(float(image[1]), float(image[0]))


def coadd(op: GyroOp, a: BallVector, b: BallVector) -> BallVector:
    """The cooperation a ⊞ b = a ⊕ gyr[a,⊖b]b, evaluated from its definition."""
    return op.add(a, op.gyr(a, op.neg(b), b))


def solve_left(op: GyroOp, a: BallVector, b: BallVector) -> BallVector:
    """The unique x with a ⊕ x = b, namely ⊖a ⊕ b."""
    return op.add(op.neg(a), b)


def solve_right(op: GyroOp, a: BallVector, b: BallVector) -> BallVector:
    """The unique y with y ⊕ a = b, namely b ⊟ a."""
    return op.cosub(b, a)


def solve_co_left(op: GyroOp, a: BallVector, b: BallVector) -> BallVector:
    """The unique x with a ⊞ x = b, namely ⊖(⊖b ⊕ a)."""
    return op.neg(op.add(op.neg(b), a))


def solve_co_right(op: GyroOp, a: BallVector, b: BallVector) -> BallVector:
    """The unique y with y ⊞ a = b, namely b ⊖ a."""
    return op.sub(b, a)


# --- audit ------------------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    samples: int
    max_residual: float
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        residual = self.max_residual if math.isfinite(self.max_residual) else None
        return {"name": self.name, "samples": self.samples, "max_residual": residual, "pass": self.passed}


@dataclass(frozen=True)
class AxiomReport:
    op: str
    dim: int
    s: float
    seed: int
    tolerance: Tolerance
    identities: tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.identities)

    def failures(self) -> list[IdentityCheck]:
        return [check for check in self.identities if not check.passed]

    def __getitem__(self, name: str) -> IdentityCheck:
        for check in self.identities:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        return {
            "op": self.op,
            "dim": self.dim,
            "s": self.s,
            "seed": self.seed,
            "tolerance": {"abs": self.tolerance.abs, "rel": self.tolerance.rel},
            "pass": self.passed,
            "identities": [check.to_dict() for check in self.identities],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _draw(op: GyroOp, seed: int, indices: Iterable[int]) -> tuple[FloatArray, ...]:
    """Stack the (a, b, z, c, d) samples of the given indices; each index owns its generator."""
    params = op.params
    rows = []
    for index in indices:
        rng = index_rng(seed, index)
        a, b, z, c, d = sample_coords(rng, params, 5)
        if rng.random() < DEGENERATE_FRACTION:
            b = -a + rng.standard_normal(params.dim) * (1e-3 * params.s)
            norm = float(np.linalg.norm(b))
            if norm >= DEFAULT_CAP * params.s:
                b *= DEFAULT_CAP * params.s / norm
        rows.append((a, b, z, c, d))
    if not rows:
        empty = np.empty((0, params.dim))
        return empty, empty, empty, empty, empty
    stacked = np.array(rows)
    return tuple(stacked[:, i, :] for i in range(5))


def _gap(lhs: FloatArray, rhs: FloatArray) -> FloatArray:
    return np.linalg.norm(lhs - rhs, axis=-1)


def _conditioning(op: GyroOp, *points: FloatArray) -> FloatArray:
    """Largest squared gamma factor among ``points``, per sample; 1 where a point lies outside the ball."""
    squared = np.stack([gamma_sq_array(p, op.params.s)[..., 0] for p in points])
    squared = np.where(np.isfinite(squared) & (squared >= 1.0), squared, 1.0)
    return np.max(squared, axis=0)


def _residuals(
    op: GyroOp, a: FloatArray, b: FloatArray, z: FloatArray, c: FloatArray, d: FloatArray
) -> dict[str, FloatArray]:
    add, neg, gyr_, coadd_ = op.add_array, op.neg_array, op.gyr_array, op.coadd_array
    zero = np.zeros_like(a)
    ab, ba, bz, az = add(a, b), add(b, a), add(b, z), add(a, z)
    a_bz = add(a, bz)
    gyr_abz = gyr_(a, b, z)
    kappa = _conditioning(
        op, a, b, z, c, d, ab, ba, bz, az, a_bz, add(c, d),
        add(ab, b), add(ab, bz), add(a, ba), add(a, add(ba, z)), add(b, az), add(a, add(b, az)),
        coadd_(a, b), add(a, neg(b)),
    )  # fmt: skip
    gaps = {
        "G1 left identity": _gap(add(zero, a), a),
        "right identity": _gap(add(a, zero), a),
        "G2 left inverse": _gap(add(neg(a), a), zero),
        "right inverse": _gap(add(a, neg(a)), zero),
        "G3 left gyroassociative law": _gap(a_bz, add(ab, gyr_abz)),
        "G4 gyration automorphism": _gap(gyr_(a, b, add(c, d)), add(gyr_(a, b, c), gyr_(a, b, d))),
        "G5 left loop property": _gap(gyr_abz, gyr_(ab, b, z)),
        "G6 gyrocommutative law": _gap(ab, gyr_(a, b, ba)),
        "left Bol identity": _gap(add(a, add(b, az)), add(add(a, ba), z)),
        "gyration inversion": _gap(gyr_(b, a, gyr_abz), z),
        "right loop property": _gap(gyr_abz, gyr_(a, ba, z)),
        "nested gyration": _gap(gyr_abz, gyr_(neg(gyr_(a, b, b)), a, z)),
        "duality: coaddition": _gap(coadd_(a, b), add(a, gyr_(a, neg(b), b))),
        "duality: addition": _gap(ab, coadd_(a, gyr_(a, b, b))),
        "left cancellation": _gap(add(a, add(neg(a), b)), b),
        "right cancellation": _gap(add(coadd_(b, neg(a)), a), b),
        "coaddition left cancellation": _gap(coadd_(a, neg(add(neg(b), a))), b),
        "second right cancellation": _gap(coadd_(add(b, neg(a)), a), b),
        "automorphic inverse": _gap(neg(ab), add(neg(a), neg(b))),
        "coaddition commutative": _gap(coadd_(a, b), coadd_(b, a)),
    }
    closure = np.maximum(0.0, np.linalg.norm(ab, axis=-1) - op.params.s)
    return {"closure": closure} | {name: gap / kappa for name, gap in gaps.items()}


def _worst(values: Iterable[float]) -> float:
    values = list(values)
    if any(math.isnan(v) for v in values):
        return math.nan
    return max(values, default=0.0)


def _evaluate(op: GyroOp, seed: int, indices: FloatArray) -> dict[str, float]:
    a, b, z, c, d = _draw(op, seed, (int(i) for i in indices))
    with np.errstate(all="ignore"):
        residuals = _residuals(op, a, b, z, c, d)
    return {name: _worst(float(x) for x in values) for name, values in residuals.items()}


def audit(
    op: GyroOp,
    samples: int = 1000,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> AxiomReport:
    """Evaluate every gyrogroup axiom and derived identity on ``samples`` seeded draws.

    Each residual is the Euclidean gap between the two sides of an identity,
    divided by the largest squared gamma factor among the points its sample
    evaluates. Closure is the overshoot ``‖a⊕b‖ - s`` and is not divided.
    An identity passes when its worst residual is within
    ``tol.abs + tol.rel * s``. Chunks may run on a thread pool; the
    report is identical for any ``workers`` because each sample is a function
    of ``(seed, index)`` only and the reduction is a max.
    """
    if samples < 1:
        raise ValueError(f"Audit needs at least one sample, got {samples}")
    if workers < 1:
        raise ValueError(f"Audit needs at least one worker, got {workers}")

    chunks = [chunk for chunk in np.array_split(np.arange(samples), workers) if chunk.size]
    evaluate: Callable[[FloatArray], dict[str, float]] = lambda chunk: _evaluate(op, seed, chunk)  # noqa: E731
    if len(chunks) == 1:
        partials = [evaluate(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            partials = list(pool.map(evaluate, chunks))
    logger.debug("audited %s over %d samples in %d chunk(s)", op, samples, len(chunks))

    bound = tol.bound(op.params.s)
    checks = []
    for name in partials[0]:
        worst = _worst(partial[name] for partial in partials)
        checks.append(IdentityCheck(name, samples, worst, bool(worst <= bound)))
        if not checks[-1].passed:
            logger.info("%s fails %r: max residual %.3e > %.3e", op.label, name, worst, bound)

    return AxiomReport(op.label, op.params.dim, op.params.s, seed, tol, tuple(checks))
