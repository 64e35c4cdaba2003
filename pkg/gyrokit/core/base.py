from abc import ABC, abstractmethod
from typing import ClassVar

import numpy as np

from gyrokit.core.ball import BallParams, BallVector, FloatArray, same_params, scale_array
from gyrokit.core.errors import ParamsMismatch


class GyroOp(ABC):
    """A binary operation on a ball, together with its inverse map and identity.

    Subclasses implement the batched kernel ``add_array`` on arrays of shape
    (..., dim). Everything else (gyrations, coaddition, scalar multiplication)
    has a definition-level default that a model may replace with a closed form.
    """

    label: ClassVar[str]

    def __init__(self, params: BallParams | None = None) -> None:
        self.params = params if params is not None else BallParams()

    # --- kernels -------------------------------------------------------------

    @abstractmethod
    def add_array(self, u: FloatArray, v: FloatArray) -> FloatArray: ...

    def neg_array(self, v: FloatArray) -> FloatArray:
        return -v

    def gyr_array(self, a: FloatArray, b: FloatArray, z: FloatArray) -> FloatArray:
        """gyr[a,b]z = ⊖(a⊕b) ⊕ (a⊕(b⊕z))."""
        return self.add_array(self.neg_array(self.add_array(a, b)), self.add_array(a, self.add_array(b, z)))

    def coadd_array(self, a: FloatArray, b: FloatArray) -> FloatArray:
        """a ⊞ b = a ⊕ gyr[a,⊖b]b."""
        return self.add_array(a, self.gyr_array(a, self.neg_array(b), b))

    def mul_array(self, r: float | FloatArray, v: FloatArray) -> FloatArray:
        return scale_array(r, v, self.params.s)

    # --- BallVector surface -------------------------------------------------

    def vector(self, coords: FloatArray | list[float]) -> BallVector:
        return BallVector(coords, self.params)

    @property
    def zero(self) -> BallVector:
        return self.params.zero()

    def check_operands(self, *vectors: BallVector) -> None:
        """Raise ``ParamsMismatch`` unless every vector lives in this operation's ball."""
        params = same_params(*vectors)
        if params != self.params:
            raise ParamsMismatch(f"{self.label} operation lives in {self.params}, operands in {params}")

    def add(self, u: BallVector, v: BallVector) -> BallVector:
        self.check_operands(u, v)
        return self.vector(self.add_array(u.coords, v.coords))

    def neg(self, v: BallVector) -> BallVector:
        self.check_operands(v)
        return self.vector(self.neg_array(v.coords))

    def sub(self, u: BallVector, v: BallVector) -> BallVector:
        """u ⊖ v = u ⊕ (⊖v)."""
        self.check_operands(u, v)
        return self.vector(self.add_array(u.coords, self.neg_array(v.coords)))

    def coadd(self, u: BallVector, v: BallVector) -> BallVector:
        self.check_operands(u, v)
        return self.vector(self.coadd_array(u.coords, v.coords))

    def cosub(self, u: BallVector, v: BallVector) -> BallVector:
        """u ⊟ v = u ⊞ (⊖v)."""
        self.check_operands(u, v)
        return self.vector(self.coadd_array(u.coords, self.neg_array(v.coords)))

    def gyr(self, a: BallVector, b: BallVector, z: BallVector) -> BallVector:
        self.check_operands(a, b, z)
        return self.vector(self.gyr_array(a.coords, b.coords, z.coords))

    def mul(self, r: float, v: BallVector) -> BallVector:
        self.check_operands(v)
        return self.vector(self.mul_array(r, v.coords))

    def is_identity(self, tol: float = 1e-12) -> bool:
        """Whether ``zero`` acts as a two-sided identity on a few probe points."""
        diagonal = np.ones(self.params.dim) * (self.params.s / np.sqrt(self.params.dim))
        probes = np.linspace(-0.9, 0.9, 7)[:, None] * diagonal
        zero = np.zeros_like(probes)
        left = np.max(np.abs(self.add_array(zero, probes) - probes))
        right = np.max(np.abs(self.add_array(probes, zero) - probes))
        return bool(max(left, right) <= tol * self.params.s)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(s={self.params.s}, dim={self.params.dim})"
