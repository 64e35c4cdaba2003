import json
import math

import numpy as np
import pytest

from gyrokit.core.ball import BallParams, BallVector
from gyrokit.core.errors import OutOfBall
from gyrokit.core.result import GyroResult


class TestGyroResult:
    def test_as_array(self) -> None:
        r = GyroResult([0.1, 0.2])
        assert r.as_array().dtype == np.float64
        assert r.as_array().tolist() == [0.1, 0.2]

    def test_as_list_matrix(self) -> None:
        assert GyroResult(np.eye(2)).as_list() == [[1.0, 0.0], [0.0, 1.0]]

    def test_read_only(self) -> None:
        r = GyroResult([0.1, 0.2])
        with pytest.raises(ValueError):
            r.as_array()[0] = 1.0

    def test_as_ball(self) -> None:
        params = BallParams(s=1.0, dim=2)
        assert GyroResult([0.3, 0.4]).as_ball(params) == BallVector([0.3, 0.4], params)

    def test_as_ball_rejects_outside(self) -> None:
        with pytest.raises(OutOfBall):
            GyroResult([0.8, 0.8]).as_ball(BallParams(s=1.0, dim=2))

    def test_as_dict_merges_metadata(self) -> None:
        r = GyroResult([1.0], metadata={"radius": 2.0})
        assert r.as_dict() == {"data": [1.0], "radius": 2.0}

    def test_as_dict_converts_numpy_and_vectors(self) -> None:
        v = BallVector([0.1, 0.2], BallParams(s=1.0, dim=2))
        r = GyroResult([0.0], metadata={"center": np.array([1.0, 2.0]), "det": np.float64(1.0), "v": v})
        assert r.as_dict() == {"data": [0.0], "center": [1.0, 2.0], "det": 1.0, "v": [0.1, 0.2]}

    def test_as_json_maps_non_finite_to_null(self) -> None:
        r = GyroResult([0.5], metadata={"radius": math.inf, "line": True})
        assert json.loads(r.as_json()) == {"data": [0.5], "radius": None, "line": True}

    def test_equality_with_result(self) -> None:
        assert GyroResult([1.0, 2.0]) == GyroResult([1.0, 2.0])
        assert GyroResult([1.0, 2.0]) != GyroResult([1.0, 3.0])

    def test_equality_with_list(self) -> None:
        assert GyroResult([1.0, 2.0]) == [1.0, 2.0]

    def test_array_protocol(self) -> None:
        assert np.asarray(GyroResult([1.0, 2.0])).sum() == 3.0

    def test_metadata_defaults_empty(self) -> None:
        assert GyroResult([0.0]).metadata == {}

    def test_unhashable(self) -> None:
        with pytest.raises(TypeError):
            hash(GyroResult([0.0]))

    def test_repr(self) -> None:
        assert "GyroResult" in repr(GyroResult(np.zeros(10)))
