from gyrokit.physics.qic import (
    BLOCH,
    QubitDensity,
    bloch_from_density,
    bures_fidelity,
    density_from_bloch,
    density_product_residual,
    two_sum_bloch,
)
from gyrokit.physics.relativity import (
    Particle,
    ParticleSystem,
    aberrate,
    aberration_gap,
    fictitious_mass,
    invariant_mass,
)

__all__ = [
    "Particle",
    "ParticleSystem",
    "aberrate",
    "aberration_gap",
    "invariant_mass",
    "fictitious_mass",
    "BLOCH",
    "QubitDensity",
    "density_from_bloch",
    "bloch_from_density",
    "two_sum_bloch",
    "density_product_residual",
    "bures_fidelity",
]
