import math
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from gyrokit.core.errors import DimensionMismatch, OutOfBall, ParamsMismatch

FloatArray = NDArray[np.float64]

# Below this fraction of s a vector is treated as the origin when its direction is needed.
_TINY = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class BallParams:
    """The open s-ball of R^dim. ``s`` plays the role of the speed of light c."""

    s: float = 1.0
    dim: int = 3

    def __post_init__(self) -> None:
        if not (math.isfinite(self.s) and self.s > 0):
            raise ValueError(f"Ball radius s must be a positive finite number, got {self.s!r}")
        if self.dim < 1:
            raise ValueError(f"Ball dimension must be at least 1, got {self.dim!r}")

    def vector(self, coords: ArrayLike) -> "BallVector":
        return BallVector(coords, self)

    def zero(self) -> "BallVector":
        return BallVector(np.zeros(self.dim), self)


@dataclass(frozen=True)
class Tolerance:
    abs: float = 1e-12
    rel: float = 1e-9

    def __post_init__(self) -> None:
        if self.abs < 0 or self.rel < 0:
            raise ValueError(f"Tolerances must be nonnegative, got abs={self.abs!r}, rel={self.rel!r}")
        if self.abs == 0 and self.rel == 0:
            raise ValueError("Tolerance abs and rel must not both be zero")

    def bound(self, scale: float = 1.0) -> float:
        return self.abs + self.rel * scale

    def allows(self, residual: float, scale: float = 1.0) -> bool:
        return residual <= self.bound(scale)


DEFAULT_TOLERANCE = Tolerance()


class BallVector:
    """An immutable point of the open s-ball.

    Construction enforces ``‖coords‖ < s`` strictly; nothing is ever clamped.
    """

    __slots__ = ("_coords", "_params")

    def __init__(self, coords: ArrayLike, params: BallParams) -> None:
        arr = np.array(coords, dtype=np.float64)
        if arr.ndim != 1 or arr.shape[0] != params.dim:
            raise DimensionMismatch(f"Expected {params.dim} coordinates, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise OutOfBall(f"Coordinates must be finite, got {arr.tolist()}")
        norm = float(np.linalg.norm(arr))
        if not norm < params.s:
            raise OutOfBall(f"‖v‖ = {norm!r} is not below s = {params.s!r}")
        arr.setflags(write=False)
        self._coords = arr
        self._params = params

    @property
    def coords(self) -> FloatArray:
        return self._coords

    @property
    def params(self) -> BallParams:
        return self._params

    @property
    def s(self) -> float:
        return self._params.s

    @property
    def dim(self) -> int:
        return self._params.dim

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self._coords))

    def dot(self, other: "BallVector") -> float:
        same_params(self, other)
        return float(np.dot(self._coords, other._coords))

    def is_zero(self) -> bool:
        return not np.any(self._coords)

    def isclose(self, other: "BallVector", tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        same_params(self, other)
        return tol.allows(float(np.linalg.norm(self._coords - other._coords)), self.s)

    def tolist(self) -> list[float]:
        return [float(x) for x in self._coords]

    def to_json(self) -> dict[str, Any]:
        return {"coords": self.tolist(), "s": self.s}

    @classmethod
    def from_json(cls, payload: dict[str, Any]) -> "BallVector":
        coords = payload["coords"]
        return cls(coords, BallParams(s=float(payload.get("s", 1.0)), dim=len(coords)))

    def __neg__(self) -> "BallVector":
        return BallVector(-self._coords, self._params)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BallVector):
            return self._params == other._params and bool(np.array_equal(self._coords, other._coords))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._params, self._coords.tobytes()))

    def __repr__(self) -> str:
        return f"BallVector({self.tolist()}, s={self.s})"


def make_ball_vector(coords: ArrayLike, params: BallParams | None = None) -> BallVector:
    """Validate ``coords`` as a point of the open ball; ``params`` defaults to the unit ball of matching dimension."""
    if params is None:
        params = BallParams(s=1.0, dim=int(np.size(coords)))
    return BallVector(coords, params)


def same_params(*vectors: BallVector) -> BallParams:
    params = vectors[0].params
    for v in vectors[1:]:
        if v.params.dim != params.dim:
            raise DimensionMismatch(f"Dimension mismatch: {params.dim} vs {v.params.dim}")
        if v.params != params:
            raise ParamsMismatch(f"Ball radius mismatch: s={params.s} vs s={v.params.s}")
    return params


# --- batched kernels: arrays of shape (..., n), reductions keep the last axis -------------


def dot_array(u: FloatArray, v: FloatArray) -> FloatArray:
    return np.sum(u * v, axis=-1, keepdims=True)


def norm_array(v: FloatArray) -> FloatArray:
    return np.sqrt(dot_array(v, v))


def gamma_array(v: FloatArray, s: float) -> FloatArray:
    x = norm_array(v) / s
    return 1.0 / np.sqrt((1.0 - x) * (1.0 + x))


def gamma_sq_array(v: FloatArray, s: float) -> FloatArray:
    x = norm_array(v) / s
    return 1.0 / ((1.0 - x) * (1.0 + x))


def artanh_ratio(x: FloatArray) -> FloatArray:
    """atanh(x) for 0 <= x < 1, written with log1p so it stays accurate as x -> 1."""
    return 0.5 * np.log1p(2.0 * x / (1.0 - x))


def scale_array(r: float | FloatArray, v: FloatArray, s: float) -> FloatArray:
    """Scalar multiplication r ⊗ v = s tanh(r atanh(‖v‖/s)) v/‖v‖, shared by both models."""
    norm = norm_array(v)
    with np.errstate(divide="ignore", invalid="ignore"):
        factor = s * np.tanh(r * artanh_ratio(norm / s)) / norm
    return np.where(norm < _TINY * s, 0.0, factor) * v


# --- scalar quantities ---------------------------------------------------------------------


def gamma(v: BallVector) -> float:
    """Lorentz factor 1/sqrt(1 - ‖v‖²/s²), factored as (1-x)(1+x) against cancellation."""
    x = v.norm / v.s
    return 1.0 / math.sqrt((1.0 - x) * (1.0 + x))


def rapidity(v: BallVector) -> float:
    x = v.norm / v.s
    return 0.5 * math.log1p(2.0 * x / (1.0 - x))


def rapidity_to_norm(r: float, params: BallParams) -> float:
    if r < 0:
        raise ValueError(f"Rapidity must be nonnegative, got {r!r}")
    return params.s * math.tanh(r)
