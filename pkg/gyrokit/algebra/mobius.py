"""Möbius addition in the complex disc and in the s-ball of R^n."""

import math

import numpy as np

from gyrokit.core.ball import (
    BallParams,
    BallVector,
    FloatArray,
    dot_array,
    gamma,
    gamma_sq_array,
    same_params,
    scale_array,
)
from gyrokit.core.base import GyroOp
from gyrokit.core.errors import DimensionUnsupported, OutOfBall

# A point of the open unit disc, and a point of the unit circle (disc gyrations).
DiscComplex = complex
UnimodularComplex = complex


def _check_disc(*points: complex) -> None:
    for z in points:
        if not abs(z) < 1:
            raise OutOfBall(f"|z| = {abs(z)!r} is not below 1 for z = {z!r}")


def mob_add_disc(a: DiscComplex, z: DiscComplex) -> DiscComplex:
    _check_disc(a, z)
    return (a + z) / (1 + a.conjugate() * z)


def mob_neg_disc(z: DiscComplex) -> DiscComplex:
    _check_disc(z)
    return -z


def mob_sub_disc(a: DiscComplex, z: DiscComplex) -> DiscComplex:
    return mob_add_disc(a, mob_neg_disc(z))


def mob_gyr_disc(a: DiscComplex, b: DiscComplex) -> UnimodularComplex:
    """The disc gyration gyr[a,b] as the unimodular factor (1 + a b̄)/(1 + ā b)."""
    _check_disc(a, b)
    return (1 + a * b.conjugate()) / (1 + a.conjugate() * b)


def mob_gyr_disc_ratio(a: DiscComplex, b: DiscComplex) -> UnimodularComplex:
    """The same gyration written as (a ⊕ b)/(b ⊕ a); undefined when b ⊕ a = 0."""
    return mob_add_disc(a, b) / mob_add_disc(b, a)


def to_disc(v: BallVector) -> DiscComplex:
    if v.dim != 2:
        raise DimensionUnsupported(f"Only 2-dimensional vectors identify with complex numbers, got dim={v.dim}")
    return complex(v.coords[0], v.coords[1])


def from_disc(z: DiscComplex, params: BallParams | None = None) -> BallVector:
    params = params if params is not None else BallParams(s=1.0, dim=2)
    if params.dim != 2:
        raise DimensionUnsupported(f"Complex numbers identify with the 2-ball, got dim={params.dim}")
    return BallVector([z.real, z.imag], params)


# --- ball kernels -----------------------------------------------------------------------------


def _add(u: FloatArray, v: FloatArray, s: float) -> FloatArray:
    s2 = s * s
    uv = dot_array(u, v) / s2
    uu = dot_array(u, u) / s2
    vv = dot_array(v, v) / s2
    den = 1.0 + 2.0 * uv + uu * vv
    assert np.all(den > 0), "Möbius denominator must be positive inside the ball"
    return ((1.0 + 2.0 * uv + vv) * u + (1.0 - uu) * v) / den


def _coadd(u: FloatArray, v: FloatArray, s: float) -> FloatArray:
    gu2 = gamma_sq_array(u, s)
    gv2 = gamma_sq_array(v, s)
    den = gu2 + gv2 - 1.0
    assert np.all(den > 0), "Möbius coaddition denominator must be positive inside the ball"
    return (gu2 * u + gv2 * v) / den


class Mobius(GyroOp):
    """The Möbius gyrogroup of the s-ball, with its closed-form coaddition."""

    label = "mobius"

    def add_array(self, u: FloatArray, v: FloatArray) -> FloatArray:
        return _add(u, v, self.params.s)

    def coadd_array(self, a: FloatArray, b: FloatArray) -> FloatArray:
        return _coadd(a, b, self.params.s)


def mob_add_ball(u: BallVector, v: BallVector) -> BallVector:
    params = same_params(u, v)
    return BallVector(_add(u.coords, v.coords, params.s), params)


def mob_coadd(u: BallVector, v: BallVector) -> BallVector:
    params = same_params(u, v)
    return BallVector(_coadd(u.coords, v.coords, params.s), params)


def scalar_mul(r: float, v: BallVector) -> BallVector:
    """Möbius (and Einstein) scalar multiplication r ⊗ v; r ⊗ 0 = 0."""
    return BallVector(scale_array(r, v.coords, v.s), v.params)


def scalar_mul_power(r: float, v: BallVector) -> BallVector:
    """r ⊗ v through the power form ((1+x)^r - (1-x)^r)/((1+x)^r + (1-x)^r), x = ‖v‖/s."""
    norm = v.norm
    if norm == 0.0:
        return v.params.zero()
    x = norm / v.s
    plus, minus = (1.0 + x) ** r, (1.0 - x) ** r
    return BallVector(v.s * (plus - minus) / (plus + minus) * v.coords / norm, v.params)


def mob_gamma_of_sum(u: BallVector, v: BallVector) -> float:
    """γ of u ⊕ v from the gamma identity, without forming the sum."""
    params = same_params(u, v)
    s2 = params.s * params.s
    inner = 1.0 + 2.0 * u.dot(v) / s2 + (u.norm**2) * (v.norm**2) / (s2 * s2)
    return gamma(u) * gamma(v) * math.sqrt(inner)


def mob_scalar_add(a: float, b: float, s: float = 1.0) -> float:
    """One-dimensional Möbius addition of signed lengths; identical to the Einstein one."""
    return (a + b) / (1.0 + a * b / (s * s))
