"""Deterministic sampling of ball points.

Every draw is a pure function of ``(seed, index)`` so that chunked or
concurrent evaluation reproduces a serial run exactly.
"""

import numpy as np

from gyrokit.core.ball import BallParams, BallVector, FloatArray

DEFAULT_CAP = 0.95
NEAR_BOUNDARY = (0.99, 0.999999)


def index_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def _directions(rng: np.random.Generator, size: int, dim: int) -> FloatArray:
    raw = rng.standard_normal((size, dim))
    norms = np.linalg.norm(raw, axis=-1, keepdims=True)
    # all-zero draw
    norms[norms == 0.0] = 1.0
    return raw / norms


def sample_coords(rng: np.random.Generator, params: BallParams, size: int, cap: float = DEFAULT_CAP) -> FloatArray:
    """Uniform-in-volume points of the ball of radius ``cap * s``, shape (size, dim)."""
    if not 0 < cap < 1:
        raise ValueError(f"Sampling cap must lie in (0, 1), got {cap!r}")
    u = rng.uniform(0.0, 1.0, size=(size, 1))
    return _directions(rng, size, params.dim) * (params.s * u ** (1.0 / params.dim) * cap)


def sample_near_boundary(
    rng: np.random.Generator,
    params: BallParams,
    size: int,
    low: float = NEAR_BOUNDARY[0],
    high: float = NEAR_BOUNDARY[1],
) -> FloatArray:
    if not 0 < low < high < 1:
        raise ValueError(f"Need 0 < low < high < 1, got low={low!r}, high={high!r}")
    radii = rng.uniform(low, high, size=(size, 1)) * params.s
    return _directions(rng, size, params.dim) * radii


def sample_ball(rng: np.random.Generator, params: BallParams, cap: float = DEFAULT_CAP) -> BallVector:
    return BallVector(sample_coords(rng, params, 1, cap)[0], params)


def sample_balls(rng: np.random.Generator, params: BallParams, size: int, cap: float = DEFAULT_CAP) -> list[BallVector]:
    return [BallVector(row, params) for row in sample_coords(rng, params, size, cap)]
