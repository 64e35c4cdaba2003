"""Einstein (relativistic velocity) addition in the s-ball and its link to Möbius addition."""

from gyrokit.algebra.mobius import mob_add_ball, scalar_mul
from gyrokit.core.ball import BallVector, FloatArray, dot_array, gamma, gamma_array, same_params, scale_array
from gyrokit.core.base import GyroOp


def _add(u: FloatArray, v: FloatArray, s: float) -> FloatArray:
    s2 = s * s
    uv = dot_array(u, v)
    gu = gamma_array(u, s)
    return (u + v / gu + (gu / (1.0 + gu)) * (uv / s2) * u) / (1.0 + uv / s2)


def _half(v: FloatArray, s: float) -> FloatArray:
    gv = gamma_array(v, s)
    return (gv / (1.0 + gv)) * v


def _coadd(u: FloatArray, v: FloatArray, s: float) -> FloatArray:
    gu = gamma_array(u, s)
    gv = gamma_array(v, s)
    return scale_array(2.0, (gu * u + gv * v) / (gu + gv), s)


class Einstein(GyroOp):
    """The Einstein gyrogroup of the s-ball (s = c); its gyrations are Thomas rotations."""

    label = "einstein"

    def add_array(self, u: FloatArray, v: FloatArray) -> FloatArray:
        return _add(u, v, self.params.s)

    def coadd_array(self, a: FloatArray, b: FloatArray) -> FloatArray:
        return _coadd(a, b, self.params.s)


def ein_add(u: BallVector, v: BallVector) -> BallVector:
    params = same_params(u, v)
    return BallVector(_add(u.coords, v.coords, params.s), params)


def ein_gamma_of_sum(u: BallVector, v: BallVector) -> float:
    """γ of u ⊕ v = γ_u γ_v (1 + u·v/s²)."""
    params = same_params(u, v)
    return gamma(u) * gamma(v) * (1.0 + u.dot(v) / (params.s * params.s))


def ein_coadd(u: BallVector, v: BallVector) -> BallVector:
    params = same_params(u, v)
    return BallVector(_coadd(u.coords, v.coords, params.s), params)


def ein_half(v: BallVector) -> BallVector:
    return BallVector(_half(v.coords, v.s), v.params)


# Einstein scalar multiplication is Möbius scalar multiplication.
ein_scalar_mul = scalar_mul


def mobius_to_einstein(v: BallVector) -> BallVector:
    return scalar_mul(2.0, v)


def einstein_to_mobius(v: BallVector) -> BallVector:
    return scalar_mul(0.5, v)


def ein_add_via_mobius(u: BallVector, v: BallVector) -> BallVector:
    """u ⊕_E v computed as 2 ⊗ (½ ⊗ u ⊕_M ½ ⊗ v)."""
    return mobius_to_einstein(mob_add_ball(einstein_to_mobius(u), einstein_to_mobius(v)))


def mob_add_via_einstein(u: BallVector, v: BallVector) -> BallVector:
    """u ⊕_M v computed as ½ ⊗ (2 ⊗ u ⊕_E 2 ⊗ v)."""
    return einstein_to_mobius(ein_add(mobius_to_einstein(u), mobius_to_einstein(v)))
