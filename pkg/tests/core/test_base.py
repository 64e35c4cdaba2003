import pytest

from gyrokit.algebra import Euclidean, Mobius
from gyrokit.core.ball import BallParams, BallVector, FloatArray
from gyrokit.core.base import GyroOp
from gyrokit.core.errors import ParamsMismatch

_DISC = BallParams(s=1.0, dim=2)


class _Shifted(GyroOp):
    label = "shifted"

    def add_array(self, u: FloatArray, v: FloatArray) -> FloatArray:
        return u + v + 0.01


class TestGyroOp:
    def test_abstract(self) -> None:
        with pytest.raises(TypeError):
            GyroOp()  # type: ignore[abstract]

    def test_default_params(self) -> None:
        assert Mobius().params == BallParams()

    def test_zero(self) -> None:
        assert Mobius(_DISC).zero == BallVector([0.0, 0.0], _DISC)

    def test_is_identity(self) -> None:
        assert Mobius(_DISC).is_identity()
        assert Euclidean(_DISC).is_identity()

    def test_is_identity_detects_shift(self) -> None:
        assert not _Shifted(_DISC).is_identity()

    def test_operand_params_checked(self) -> None:
        op = Mobius(_DISC)
        other = BallVector([0.1, 0.1], BallParams(s=2.0, dim=2))
        with pytest.raises(ParamsMismatch):
            op.add(other, other)

    def test_check_operands(self) -> None:
        op = Mobius(_DISC)
        op.check_operands(op.zero, op.vector([0.3, 0.1]))
        with pytest.raises(ParamsMismatch):
            op.check_operands(op.zero, BallVector([0.1, 0.1], BallParams(s=2.0, dim=2)))

    def test_sub_is_add_of_negative(self) -> None:
        op = Mobius(_DISC)
        u, v = op.vector([0.2, 0.1]), op.vector([-0.3, 0.4])
        assert op.sub(u, v) == op.add(u, op.neg(v))

    def test_cosub_is_coadd_of_negative(self) -> None:
        op = Mobius(_DISC)
        u, v = op.vector([0.2, 0.1]), op.vector([-0.3, 0.4])
        assert op.cosub(u, v) == op.coadd(u, op.neg(v))

    def test_default_coadd_matches_definition(self) -> None:
        op = _Shifted(_DISC)
        a, b = op.vector([0.1, 0.0]), op.vector([0.0, 0.1])
        expected = op.add_array(a.coords, op.gyr_array(a.coords, -b.coords, b.coords))
        assert op.coadd(a, b).coords.tolist() == expected.tolist()

    def test_mul_zero(self) -> None:
        op = Mobius(_DISC)
        assert op.mul(5.0, op.zero).is_zero()

    def test_repr(self) -> None:
        assert repr(Mobius(_DISC)) == "Mobius(s=1.0, dim=2)"
