"""Circle fits of Möbius curves in the s-disc.

Möbius gyrolines are arcs of circles meeting the boundary at right angles,
and cogyrolines are arcs whose supporting circle crosses the boundary at two
antipodal points. Curves through the origin degenerate to diameters.
"""

import logging
import math

import numpy as np

from gyrokit.core.ball import FloatArray
from gyrokit.core.errors import DegenerateFit, DimensionUnsupported
from gyrokit.core.result import GyroResult
from gyrokit.geometry.gyrolines import GyroCurve

logger = logging.getLogger(__name__)

MIN_SAMPLES = 16
# Ratio of singular values below which the sampled points are a straight segment.
LINE_RATIO = 1e-9


def _points(curve: GyroCurve, samples: int, t0: float, t1: float) -> FloatArray:
    rows = curve.sample(samples, t0, t1).as_array()
    return rows[:, 1:]


def _fit_circle(points: FloatArray) -> tuple[FloatArray, float, float]:
    """Kåsa fit of x² + y² + Dx + Ey + F = 0 on centered, scaled points."""
    mean = points.mean(axis=0)
    scale = float(np.max(np.linalg.norm(points - mean, axis=1)))
    xy = (points - mean) / scale
    design = np.column_stack([xy, np.ones(len(xy))])
    rhs = -np.sum(xy * xy, axis=1)
    (d, e, f), *_ = np.linalg.lstsq(design, rhs, rcond=None)
    center = np.array([-d / 2.0, -e / 2.0])
    radius = math.sqrt(max(float(center @ center) - f, 0.0))
    center = center * scale + mean
    radius *= scale
    residual = float(np.max(np.abs(np.linalg.norm(points - center, axis=1) - radius)))
    return center, radius, residual


def arc_diagnostics(curve: GyroCurve, samples: int = 64, t0: float = 0.0, t1: float = 1.0) -> GyroResult:
    """Fit the supporting circle of a Möbius curve and measure how it meets the boundary.

    The payload is the fitted center, or the unit direction when the points are
    collinear (``line`` flag set, radius infinite). Gyrolines report
    ``orthogonality_residual`` = |‖center‖² - r² - s²|; cogyrolines report
    ``diametric_residual``, the norm of the sum of the two boundary
    intersection points. For a line both residuals are its distance from the
    origin.
    """
    params = curve.op.params
    if params.dim != 2:
        raise DimensionUnsupported(f"Arc diagnostics need the 2-disc, got dim={params.dim}")
    if curve.op.label != "mobius":
        raise ValueError(f"Arc diagnostics apply to Möbius curves, got {curve.op.label!r}")
    if samples < MIN_SAMPLES:
        raise DegenerateFit(f"Need at least {MIN_SAMPLES} samples for a circle fit, got {samples}")

    s = params.s
    points = _points(curve, samples, t0, t1)
    residual_key = "orthogonality_residual" if curve.kind == "gyroline" else "diametric_residual"

    centered = points - points.mean(axis=0)
    singular = np.linalg.svd(centered, compute_uv=False)
    if t0 == t1 or singular[0] <= LINE_RATIO * s * math.sqrt(len(points)):
        raise DegenerateFit(f"Sampled points coincide over t in [{t0}, {t1}]")
    if singular[-1] / singular[0] <= LINE_RATIO:
        _, _, vt = np.linalg.svd(centered)
        direction = vt[0]
        offset = points.mean(axis=0)
        distance = abs(float(offset[0] * direction[1] - offset[1] * direction[0]))
        logger.debug("%s through %s is a straight segment", curve.kind, curve.a)
        return GyroResult(
            direction,
            metadata={
                "kind": curve.kind,
                "line": True,
                "center": None,
                "radius": math.inf,
                "boundary_angle": math.pi / 2 if distance <= LINE_RATIO * s else None,
                residual_key: distance,
                "samples": samples,
            },
        )

    center, radius, fit_residual = _fit_circle(points)
    d = float(np.linalg.norm(center))
    meets_boundary = abs(radius - s) <= d <= radius + s
    cosine = (d * d - radius * radius - s * s) / (2.0 * radius * s)
    angle = math.acos(min(1.0, max(-1.0, abs(cosine)))) if meets_boundary else None

    if curve.kind == "gyroline":
        residual = abs(d * d - radius * radius - s * s)
    elif meets_boundary and d > 0:
        residual = abs(s * s + d * d - radius * radius) / d
    else:
        residual = math.nan

    return GyroResult(
        center,
        metadata={
            "kind": curve.kind,
            "line": False,
            "center": center.tolist(),
            "radius": radius,
            "boundary_angle": angle,
            residual_key: residual,
            "fit_residual": fit_residual,
            "samples": samples,
        },
    )
