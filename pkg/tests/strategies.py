"""Shared hypothesis strategies for ball vectors."""

import math

from hypothesis import strategies as st

from gyrokit.core.ball import BallParams, BallVector

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def ball_vectors(params: BallParams, cap: float = 0.9) -> st.SearchStrategy[BallVector]:
    """Vectors of the cube inscribed in the ball of radius ``cap * s``."""
    bound = cap * params.s / math.sqrt(params.dim)
    coord = st.floats(min_value=-bound, max_value=bound, allow_nan=False, allow_infinity=False)
    return st.lists(coord, min_size=params.dim, max_size=params.dim).map(lambda c: BallVector(c, params))


def disc_points(cap: float = 0.9) -> st.SearchStrategy[complex]:
    bound = cap / math.sqrt(2.0)
    part = st.floats(min_value=-bound, max_value=bound, allow_nan=False, allow_infinity=False)
    return st.builds(complex, part, part)
