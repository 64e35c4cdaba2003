"""Qubit density matrices as Bloch gyrovectors of the unit 3-ball.

Complex arithmetic lives here only. Bloch vectors must belong to
``BallParams(s=1, dim=3)``; pure states (‖v‖ = 1) are outside the open ball
and are refused.
"""

import logging
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray

from gyrokit.algebra.einstein import ein_gamma_of_sum
from gyrokit.algebra.mobius import mob_add_ball, scalar_mul
from gyrokit.core.ball import DEFAULT_TOLERANCE, BallParams, BallVector, Tolerance, gamma, same_params
from gyrokit.core.errors import DimensionUnsupported

logger = logging.getLogger(__name__)

ComplexMatrix = NDArray[np.complex128]
FidelityMethod = Literal["gyro", "matrix"]

BLOCH = BallParams(s=1.0, dim=3)
_IDENTITY = np.eye(2, dtype=np.complex128)
_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


def _require_bloch(*vectors: BallVector) -> None:
    for v in vectors:
        if v.params != BLOCH:
            raise DimensionUnsupported(f"Bloch vectors live in the unit 3-ball, got s={v.s}, dim={v.dim}")


class QubitDensity:
    """A 2×2 Hermitian, trace-one density matrix."""

    __slots__ = ("_matrix",)

    def __init__(self, matrix: ArrayLike, tol: Tolerance = DEFAULT_TOLERANCE) -> None:
        arr = np.array(matrix, dtype=np.complex128)
        if arr.shape != (2, 2):
            raise DimensionUnsupported(f"A qubit density matrix is 2x2, got shape {arr.shape}")
        if not tol.allows(float(np.max(np.abs(arr - arr.conj().T)))):
            raise ValueError("Density matrix must be Hermitian")
        if not tol.allows(abs(complex(np.trace(arr)) - 1.0)):
            raise ValueError(f"Density matrix must have trace 1, got {np.trace(arr)!r}")
        arr.setflags(write=False)
        self._matrix = arr

    @property
    def matrix(self) -> ComplexMatrix:
        return self._matrix

    def eigenvalues(self) -> NDArray[np.float64]:
        return np.linalg.eigvalsh(self._matrix)

    def purity(self) -> float:
        """tr ρ² = (1 + ‖v‖²)/2."""
        return float(np.real(np.trace(self._matrix @ self._matrix)))

    def determinant(self) -> float:
        return float(np.real(np.linalg.det(self._matrix)))

    def sqrt(self) -> ComplexMatrix:
        return _psd_sqrt(self._matrix)

    def __repr__(self) -> str:
        return f"QubitDensity({self._matrix.tolist()})"


def _psd_sqrt(matrix: ComplexMatrix) -> ComplexMatrix:
    """Principal square root of a Hermitian positive semidefinite matrix."""
    values, vectors = np.linalg.eigh(matrix)
    roots = np.sqrt(np.clip(values, 0.0, None))
    return (vectors * roots) @ vectors.conj().T


def density_from_bloch(v: BallVector) -> QubitDensity:
    """ρ_v = ½ [[1 + v₃, v₁ - i v₂], [v₁ + i v₂, 1 - v₃]]."""
    _require_bloch(v)
    v1, v2, v3 = v.tolist()
    return QubitDensity(0.5 * (_IDENTITY + v1 * _PAULI[0] + v2 * _PAULI[1] + v3 * _PAULI[2]))


def bloch_from_density(rho: QubitDensity) -> BallVector:
    m = rho.matrix
    return BallVector(
        [2.0 * m[1, 0].real, 2.0 * m[1, 0].imag, (m[0, 0] - m[1, 1]).real],
        BLOCH,
    )


def two_sum_bloch(u: BallVector, v: BallVector, tol: Tolerance = DEFAULT_TOLERANCE) -> BallVector:
    """w = u ⊕ (2⊗v ⊕ u), cross-checked against 2⊗(u ⊕ v) (Möbius operations).

    ρ_u ρ_v ρ_v ρ_u is a multiple of the single density matrix ρ_w.
    """
    same_params(u, v)
    _require_bloch(u, v)
    w = mob_add_ball(u, mob_add_ball(scalar_mul(2.0, v), u))
    doubled = scalar_mul(2.0, mob_add_ball(u, v))
    if not w.isclose(doubled, tol):
        logger.warning("two-sum forms disagree: %s vs %s", w, doubled)
    return w


def density_product_residual(u: BallVector, v: BallVector) -> float:
    """Max-entry residual of ρ_u ρ_v ρ_v ρ_u = tr[ρ_u ρ_v ρ_v ρ_u] ρ_w."""
    rho_u = density_from_bloch(u).matrix
    rho_v = density_from_bloch(v).matrix
    product = rho_u @ rho_v @ rho_v @ rho_u
    rho_w = density_from_bloch(two_sum_bloch(u, v)).matrix
    return float(np.max(np.abs(product - np.trace(product) * rho_w)))


def _fidelity_matrix(u: BallVector, v: BallVector) -> float:
    root_u = density_from_bloch(u).sqrt()
    inner = root_u @ density_from_bloch(v).matrix @ root_u
    values = np.clip(np.linalg.eigvalsh(inner), 0.0, None)
    return float(np.sum(np.sqrt(values)) ** 2)


def _fidelity_gyro(u: BallVector, v: BallVector) -> float:
    return 0.5 * (1.0 + ein_gamma_of_sum(u, v)) / (gamma(u) * gamma(v))


def bures_fidelity(u: BallVector, v: BallVector, method: FidelityMethod = "gyro") -> float:
    """Bures fidelity [tr √(√ρ_u ρ_v √ρ_u)]² of two mixed qubit states.

    ``method="gyro"`` evaluates ½(1 + γ_{u⊕v})/(γ_u γ_v) with Einstein addition;
    ``method="matrix"`` takes Hermitian square roots by eigendecomposition.
    """
    same_params(u, v)
    _require_bloch(u, v)
    if method == "gyro":
        return _fidelity_gyro(u, v)
    if method == "matrix":
        return _fidelity_matrix(u, v)
    raise ValueError(f"Fidelity method must be 'gyro' or 'matrix', got {method!r}")
