"""Relativistic kinematics in the c-ball: aberration and the invariant mass of a particle system.

The ball radius ``s`` plays the role of the speed of light. Velocities compose
by Einstein addition; the Newtonian counterpart is plain vector addition.
"""

import json
import math
from dataclasses import dataclass
from typing import Any, Literal

import numpy as np

from gyrokit.algebra.einstein import ein_add, ein_gamma_of_sum
from gyrokit.core.ball import BallParams, BallVector, same_params
from gyrokit.core.result import GyroResult

AberrationMode = Literal["classical", "relativistic"]


@dataclass(frozen=True)
class Particle:
    mass: float
    velocity: BallVector

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mass) and self.mass > 0):
            raise ValueError(f"Particle mass must be positive and finite, got {self.mass!r}")


@dataclass(frozen=True)
class ParticleSystem:
    """An isolated system of noninteracting particles, velocities measured in one frame."""

    particles: tuple[Particle, ...]

    def __post_init__(self) -> None:
        if not self.particles:
            raise ValueError("A particle system needs at least one particle")
        same_params(*(p.velocity for p in self.particles))

    @property
    def params(self) -> BallParams:
        return self.particles[0].velocity.params

    @property
    def masses(self) -> list[float]:
        return [p.mass for p in self.particles]

    def total_mass(self) -> float:
        return math.fsum(self.masses)

    def scaled(self, factor: float) -> "ParticleSystem":
        return ParticleSystem(tuple(Particle(p.mass * factor, p.velocity) for p in self.particles))

    @classmethod
    def from_json(cls, payload: dict[str, Any] | str) -> "ParticleSystem":
        """Build from ``{"s": number, "particles": [{"m": number, "v": [...]}, ...]}``."""
        data = json.loads(payload) if isinstance(payload, str) else payload
        try:
            s = float(data.get("s", 1.0))
            entries = data["particles"]
        except (AttributeError, KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"Malformed particle system: {exc}") from exc
        if not entries:
            raise ValueError("A particle system needs at least one particle")
        try:
            params = BallParams(s=s, dim=len(entries[0]["v"]))
            particles = tuple(Particle(float(e["m"]), BallVector(e["v"], params)) for e in entries)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"Malformed particle entry: {exc!r}") from exc
        return cls(particles)

    def to_json(self) -> dict[str, Any]:
        return {
            "s": self.params.s,
            "particles": [{"m": p.mass, "v": p.velocity.tolist()} for p in self.particles],
        }


def _pair_excess(system: ParticleSystem) -> float:
    """Σ_{j<k} m_j m_k (γ_{⊖v_j ⊕ v_k} - 1), summed in lexicographic pair order."""
    particles = system.particles
    terms = [
        pj.mass * pk.mass * (ein_gamma_of_sum(-pj.velocity, pk.velocity) - 1.0)
        for j, pj in enumerate(particles)
        for pk in particles[j + 1 :]
    ]
    return max(0.0, math.fsum(terms))


def invariant_mass(system: ParticleSystem) -> float:
    """m₀ = √((Σm_k)² + 2 Σ_{j<k} m_j m_k (γ_{⊖v_j⊕v_k} - 1)); never below Σm_k."""
    total = system.total_mass()
    return math.sqrt(total * total + 2.0 * _pair_excess(system))


def fictitious_mass(system: ParticleSystem) -> float:
    """m₀ - Σm_k, written as (m₀² - M²)/(m₀ + M) to avoid cancellation when it is small."""
    total = system.total_mass()
    excess = 2.0 * _pair_excess(system)
    return excess / (math.sqrt(total * total + excess) + total)


def aberrate(u: BallVector, v_obs: BallVector, mode: AberrationMode = "relativistic") -> GyroResult:
    """Apparent velocity of a particle moving at ``u`` seen from a frame moving at ``v_obs``.

    The payload is the unit direction (zero when the particle appears at rest);
    metadata carries ``speed``, ``mode`` and ``exceeds_s``. The classical mode
    composes by u - v_obs and may return a speed at or above s, flagged rather
    than rejected. The relativistic mode composes by ⊖v_obs ⊕ u.
    """
    params = same_params(u, v_obs)
    if mode == "classical":
        apparent = u.coords - v_obs.coords
    elif mode == "relativistic":
        apparent = ein_add(-v_obs, u).coords
    else:
        raise ValueError(f"Aberration mode must be 'classical' or 'relativistic', got {mode!r}")

    speed = float(np.linalg.norm(apparent))
    direction = apparent / speed if speed > 0 else np.zeros(params.dim)
    return GyroResult(
        direction,
        metadata={"speed": speed, "mode": mode, "exceeds_s": speed >= params.s, "velocity": apparent.tolist()},
    )


def aberration_gap(u: BallVector, v_obs: BallVector) -> float:
    """Angle in radians between the classical and the relativistic apparent directions."""
    classical = aberrate(u, v_obs, "classical").as_array()
    relativistic = aberrate(u, v_obs, "relativistic").as_array()
    return 2.0 * math.atan2(
        float(np.linalg.norm(classical - relativistic)),
        float(np.linalg.norm(classical + relativistic)),
    )
