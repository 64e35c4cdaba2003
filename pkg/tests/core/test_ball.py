import math

import numpy as np
import parametrize_from_file
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gyrokit.core import errors
from gyrokit.core.ball import (
    DEFAULT_TOLERANCE,
    BallParams,
    BallVector,
    Tolerance,
    gamma,
    gamma_array,
    make_ball_vector,
    rapidity,
    rapidity_to_norm,
    same_params,
    scale_array,
)
from gyrokit.core.errors import DimensionMismatch, OutOfBall, ParamsMismatch
from tests.strategies import ball_vectors, seeds

_B3 = BallParams(s=1.0, dim=3)


@parametrize_from_file
def test_gamma_anchor(coords: list[float], s: float, expected: float) -> None:
    v = BallVector(coords, BallParams(s=s, dim=len(coords)))
    assert gamma(v) == pytest.approx(expected, rel=1e-12)


@parametrize_from_file
def test_make_ball_vector_rejects(coords: list[float], s: float, error: str) -> None:
    with pytest.raises(getattr(errors, error)):
        make_ball_vector(coords, BallParams(s=s, dim=2))


class TestBallParams:
    def test_defaults(self) -> None:
        assert BallParams() == BallParams(s=1.0, dim=3)

    @pytest.mark.parametrize("s", [0.0, -1.0, math.inf, math.nan])
    def test_invalid_radius(self, s: float) -> None:
        with pytest.raises(ValueError, match="radius"):
            BallParams(s=s)

    def test_invalid_dim(self) -> None:
        with pytest.raises(ValueError, match="dimension"):
            BallParams(dim=0)

    def test_zero(self) -> None:
        assert BallParams(dim=4).zero().is_zero()


class TestTolerance:
    def test_defaults(self) -> None:
        assert DEFAULT_TOLERANCE == Tolerance(abs=1e-12, rel=1e-9)

    def test_bound_scales_with_s(self) -> None:
        assert Tolerance(abs=1e-12, rel=1e-9).bound(10.0) == pytest.approx(1e-12 + 1e-8)

    def test_negative_rejected(self) -> None:
        with pytest.raises(ValueError, match="nonnegative"):
            Tolerance(abs=-1.0)

    def test_both_zero_rejected(self) -> None:
        with pytest.raises(ValueError, match="both be zero"):
            Tolerance(abs=0.0, rel=0.0)

    def test_allows(self) -> None:
        tol = Tolerance(abs=1e-6, rel=0.0)
        assert tol.allows(5e-7)
        assert not tol.allows(2e-6)


class TestBallVector:
    # ── construction ────────────────────────────────────────────────────────

    def test_zero_vector_valid(self) -> None:
        assert make_ball_vector([0.0, 0.0, 0.0]).is_zero()

    def test_inside_valid(self) -> None:
        v = make_ball_vector([0.6, 0.0, 0.0])
        assert v.norm == pytest.approx(0.6)
        assert v.params == _B3

    def test_boundary_excluded(self) -> None:
        with pytest.raises(OutOfBall):
            make_ball_vector([1.0, 0.0])

    def test_out_of_ball_is_value_error(self) -> None:
        with pytest.raises(ValueError):
            make_ball_vector([2.0])

    def test_coords_read_only(self) -> None:
        v = make_ball_vector([0.1, 0.2])
        with pytest.raises(ValueError):
            v.coords[0] = 0.5

    def test_input_not_aliased(self) -> None:
        raw = np.array([0.1, 0.2])
        v = make_ball_vector(raw)
        raw[0] = 0.9
        assert v.tolist() == [0.1, 0.2]

    # ── operations ──────────────────────────────────────────────────────────

    def test_neg(self) -> None:
        assert (-make_ball_vector([0.1, -0.2])).tolist() == [-0.1, 0.2]

    def test_dot(self) -> None:
        assert make_ball_vector([0.1, 0.2]).dot(make_ball_vector([0.3, 0.4])) == pytest.approx(0.11)

    def test_dot_dimension_mismatch(self) -> None:
        with pytest.raises(DimensionMismatch):
            make_ball_vector([0.1, 0.2]).dot(make_ball_vector([0.1, 0.2, 0.3]))

    def test_params_mismatch(self) -> None:
        u = BallVector([0.1, 0.2], BallParams(s=1.0, dim=2))
        v = BallVector([0.1, 0.2], BallParams(s=2.0, dim=2))
        with pytest.raises(ParamsMismatch):
            same_params(u, v)

    def test_equality_and_hash(self) -> None:
        u = make_ball_vector([0.1, 0.2])
        v = make_ball_vector([0.1, 0.2])
        assert u == v
        assert hash(u) == hash(v)
        assert u != make_ball_vector([0.1, 0.3])

    def test_isclose(self) -> None:
        u = make_ball_vector([0.1, 0.2])
        assert u.isclose(make_ball_vector([0.1 + 1e-13, 0.2]))
        assert not u.isclose(make_ball_vector([0.1 + 1e-6, 0.2]))

    def test_json(self) -> None:
        v = BallVector([0.5, -1.0], BallParams(s=2.0, dim=2))
        assert v.to_json() == {"coords": [0.5, -1.0], "s": 2.0}
        assert BallVector.from_json(v.to_json()) == v

    def test_repr(self) -> None:
        assert "BallVector" in repr(make_ball_vector([0.1]))


class TestGamma:
    def test_scalar_matches_batched(self) -> None:
        coords = np.array([[0.6, 0.0, 0.0], [0.0, 0.0, 0.8]])
        assert gamma_array(coords, 1.0)[:, 0] == pytest.approx([1.25, 5.0 / 3.0])

    @given(ball_vectors(_B3))
    def test_at_least_one(self, v: BallVector) -> None:
        assert gamma(v) >= 1.0

    def test_greater_than_one_off_origin(self) -> None:
        assert gamma(make_ball_vector([1e-4, 0.0])) > 1.0

    def test_diverges_near_boundary(self) -> None:
        assert gamma(make_ball_vector([1.0 - 1e-12])) > 7e5

    @given(ball_vectors(_B3), seeds)
    def test_invariant_under_orthogonal_map(self, v: BallVector, seed: int) -> None:
        q, _ = np.linalg.qr(np.random.default_rng(seed).standard_normal((3, 3)))
        rotated = BallVector(q @ v.coords, _B3)
        assert gamma(rotated) == pytest.approx(gamma(v), rel=1e-12)


class TestRapidity:
    def test_origin(self) -> None:
        assert rapidity(make_ball_vector([0.0, 0.0])) == 0.0

    def test_half(self) -> None:
        assert rapidity(make_ball_vector([0.3, 0.4])) == pytest.approx(math.atanh(0.5), rel=1e-14)

    def test_round_trip_near_boundary(self) -> None:
        params = BallParams(s=1.0, dim=1)
        v = BallVector([1.0 - 1e-12], params)
        assert rapidity_to_norm(rapidity(v), params) == pytest.approx(v.norm, rel=1e-6)

    @given(ball_vectors(BallParams(s=5.0, dim=2), cap=0.999))
    def test_round_trip(self, v: BallVector) -> None:
        assert rapidity_to_norm(rapidity(v), v.params) == pytest.approx(v.norm, rel=1e-9, abs=1e-15)

    def test_negative_rejected(self) -> None:
        with pytest.raises(ValueError, match="nonnegative"):
            rapidity_to_norm(-1.0, _B3)


class TestScaleArray:
    def test_zero_stays_zero(self) -> None:
        assert scale_array(3.0, np.zeros((2, 3)), 1.0).tolist() == [[0.0] * 3] * 2

    @given(st.floats(min_value=-3.0, max_value=3.0), ball_vectors(_B3, cap=0.5))
    def test_stays_in_ball(self, r: float, v: BallVector) -> None:
        assert np.linalg.norm(scale_array(r, v.coords, 1.0)) < 1.0
