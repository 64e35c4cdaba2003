from gyrokit.core.ball import FloatArray
from gyrokit.core.base import GyroOp


class Euclidean(GyroOp):
    """Ordinary vector addition restricted to the ball.

    This is the s → ∞ limit of both gyrogroups and the Newtonian composition of
    velocities. It is associative, so every gyration is the identity, but the
    ball is not closed under it: the axiom audit uses it as a negative control.
    """

    label = "euclidean"

    def add_array(self, u: FloatArray, v: FloatArray) -> FloatArray:
        return u + v

    def coadd_array(self, a: FloatArray, b: FloatArray) -> FloatArray:
        return a + b

    def mul_array(self, r: float | FloatArray, v: FloatArray) -> FloatArray:
        return r * v
