import json
from typing import Any

import numpy as np
from numpy.typing import ArrayLike

from gyrokit.core.ball import BallParams, BallVector, FloatArray


class GyroResult:
    """An array payload plus metadata, returned by diagnostic operations."""

    def __init__(self, data: ArrayLike, metadata: dict[str, Any] | None = None) -> None:
        self._data: FloatArray = np.array(data, dtype=np.float64)
        self._data.setflags(write=False)
        self.metadata: dict[str, Any] = metadata or {}

    def as_array(self) -> FloatArray:
        return self._data

    def as_list(self) -> Any:
        return self._data.tolist()

    def as_ball(self, params: BallParams) -> BallVector:
        return BallVector(self._data, params)

    def as_dict(self) -> dict[str, Any]:
        return {"data": self.as_list(), **{k: _plain(v) for k, v in self.metadata.items()}}

    def as_json(self) -> str:
        return json.dumps(self.as_dict(), allow_nan=False, default=str)

    def __array__(self, dtype: Any = None, copy: Any = None) -> FloatArray:
        return self._data if dtype is None else self._data.astype(dtype)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GyroResult):
            return bool(np.array_equal(self._data, other._data))
        if isinstance(other, np.ndarray | list | tuple):
            return bool(np.array_equal(self._data, np.asarray(other)))
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        flat = self._data.ravel()
        preview = flat[:6].tolist()
        suffix = ", ..." if flat.size > 6 else ""
        return f"GyroResult({preview}{suffix}, shape={self._data.shape})"


def _plain(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, BallVector):
        return value.tolist()
    if isinstance(value, float) and not np.isfinite(value):
        return None
    return value
