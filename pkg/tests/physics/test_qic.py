import logging

import numpy as np
import pytest
from hypothesis import given

from gyrokit.algebra import scalar_mul
from gyrokit.core.ball import BallParams, BallVector
from gyrokit.core.errors import DimensionUnsupported
from gyrokit.core.sampling import sample_balls
from gyrokit.physics import (
    BLOCH,
    QubitDensity,
    bloch_from_density,
    bures_fidelity,
    density_from_bloch,
    density_product_residual,
    two_sum_bloch,
)
from tests.strategies import ball_vectors, seeds


def _bloch(*coords: float) -> BallVector:
    return BallVector(list(coords), BLOCH)


def _pairs(seed: int, n: int) -> list[tuple[BallVector, BallVector]]:
    rng = np.random.default_rng(seed)
    return list(zip(sample_balls(rng, BLOCH, n), sample_balls(rng, BLOCH, n), strict=True))


class TestQubitDensity:
    def test_maximally_mixed(self) -> None:
        assert density_from_bloch(BLOCH.zero()).matrix == pytest.approx(0.5 * np.eye(2))

    def test_diagonal(self) -> None:
        rho = density_from_bloch(_bloch(0.0, 0.0, 0.6))
        assert rho.matrix == pytest.approx(np.diag([0.8, 0.2]))
        assert rho.eigenvalues() == pytest.approx([0.2, 0.8])

    def test_off_diagonal(self) -> None:
        rho = density_from_bloch(_bloch(0.2, 0.4, 0.0))
        assert rho.matrix[1, 0] == pytest.approx(0.1 + 0.2j)
        assert rho.matrix[0, 1] == pytest.approx(0.1 - 0.2j)

    def test_determinant_and_purity(self) -> None:
        v = _bloch(0.3, -0.4, 0.5)
        rho = density_from_bloch(v)
        assert rho.determinant() == pytest.approx((1 - v.norm**2) / 4)
        assert rho.purity() == pytest.approx((1 + v.norm**2) / 2)

    def test_sqrt(self) -> None:
        rho = density_from_bloch(_bloch(0.3, -0.4, 0.5))
        root = rho.sqrt()
        assert root @ root == pytest.approx(rho.matrix, abs=1e-14)

    @given(ball_vectors(BLOCH, cap=0.99))
    def test_round_trip(self, v: BallVector) -> None:
        assert bloch_from_density(density_from_bloch(v)).coords == pytest.approx(v.coords, abs=1e-15)

    def test_shape_checked(self) -> None:
        with pytest.raises(DimensionUnsupported):
            QubitDensity(np.eye(3) / 3)

    def test_hermitian_checked(self) -> None:
        with pytest.raises(ValueError, match="Hermitian"):
            QubitDensity([[0.5, 0.1], [0.2, 0.5]])

    def test_trace_checked(self) -> None:
        with pytest.raises(ValueError, match="trace"):
            QubitDensity(np.eye(2))

    def test_matrix_read_only(self) -> None:
        rho = density_from_bloch(BLOCH.zero())
        with pytest.raises(ValueError):
            rho.matrix[0, 0] = 1.0

    def test_bloch_ball_required(self) -> None:
        with pytest.raises(DimensionUnsupported):
            density_from_bloch(BallVector([0.1, 0.2], BallParams(s=1.0, dim=2)))
        with pytest.raises(DimensionUnsupported):
            density_from_bloch(BallVector([0.1, 0.2, 0.3], BallParams(s=2.0, dim=3)))


class TestTwoSum:
    def test_u_zero(self) -> None:
        v = _bloch(0.1, 0.5, -0.2)
        assert two_sum_bloch(BLOCH.zero(), v).isclose(scalar_mul(2.0, v))

    def test_v_zero(self) -> None:
        u = _bloch(0.1, 0.5, -0.2)
        assert two_sum_bloch(u, BLOCH.zero()).isclose(scalar_mul(2.0, u))

    def test_forms_agree(self, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.WARNING, logger="gyrokit.physics.qic"):
            for u, v in _pairs(71, 100):
                two_sum_bloch(u, v)
        assert "disagree" not in caplog.text

    def test_product_is_multiple_of_density(self) -> None:
        for u, v in _pairs(72, 200):
            assert density_product_residual(u, v) <= 1e-9


class TestFidelity:
    def test_identical_states(self) -> None:
        for v in sample_balls(np.random.default_rng(73), BLOCH, 50):
            assert bures_fidelity(v, v) == pytest.approx(1.0, abs=1e-12)
            assert bures_fidelity(v, v, "matrix") == pytest.approx(1.0, abs=1e-9)

    def test_opposite_states(self) -> None:
        # ½ (1 - 0.36 + 0.8²)
        assert bures_fidelity(_bloch(0.6, 0, 0), _bloch(-0.6, 0, 0)) == pytest.approx(0.64)

    def test_closed_form(self) -> None:
        for u, v in _pairs(74, 100):
            expected = 0.5 * (1 + u.dot(v) + np.sqrt(1 - u.norm**2) * np.sqrt(1 - v.norm**2))
            assert bures_fidelity(u, v) == pytest.approx(expected, abs=1e-12)

    def test_matrix_agrees_with_gyro(self) -> None:
        for u, v in _pairs(75, 10_000):
            assert bures_fidelity(u, v, "matrix") == pytest.approx(bures_fidelity(u, v, "gyro"), abs=1e-9)

    def test_symmetric(self) -> None:
        for u, v in _pairs(76, 100):
            assert bures_fidelity(u, v) == pytest.approx(bures_fidelity(v, u), abs=1e-12)

    @given(ball_vectors(BLOCH), ball_vectors(BLOCH), seeds)
    def test_rotation_invariant(self, u: BallVector, v: BallVector, seed: int) -> None:
        q, _ = np.linalg.qr(np.random.default_rng(seed).standard_normal((3, 3)))
        rotated = bures_fidelity(_bloch(*(q @ u.coords)), _bloch(*(q @ v.coords)))
        assert rotated == pytest.approx(bures_fidelity(u, v), abs=1e-12)

    def test_in_unit_interval(self) -> None:
        for u, v in _pairs(77, 200):
            assert 0.0 <= bures_fidelity(u, v) <= 1.0 + 1e-12

    def test_unknown_method(self) -> None:
        with pytest.raises(ValueError, match="method"):
            bures_fidelity(BLOCH.zero(), BLOCH.zero(), "trace")  # type: ignore[arg-type]

    def test_bloch_ball_required(self) -> None:
        params = BallParams(s=1.0, dim=2)
        with pytest.raises(DimensionUnsupported):
            bures_fidelity(params.zero(), params.zero())
