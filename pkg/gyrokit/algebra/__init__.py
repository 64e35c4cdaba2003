from gyrokit.algebra.axioms import (
    AxiomReport,
    IdentityCheck,
    audit,
    coadd,
    gyr,
    gyr_angle,
    gyr_matrix,
    solve_co_left,
    solve_co_right,
    solve_left,
    solve_right,
)
from gyrokit.algebra.einstein import (
    Einstein,
    ein_add,
    ein_add_via_mobius,
    ein_coadd,
    ein_gamma_of_sum,
    ein_half,
    ein_scalar_mul,
    einstein_to_mobius,
    mob_add_via_einstein,
    mobius_to_einstein,
)
from gyrokit.algebra.euclid import Euclidean
from gyrokit.algebra.mobius import (
    Mobius,
    from_disc,
    mob_add_ball,
    mob_add_disc,
    mob_coadd,
    mob_gamma_of_sum,
    mob_gyr_disc,
    mob_gyr_disc_ratio,
    mob_neg_disc,
    mob_scalar_add,
    mob_sub_disc,
    scalar_mul,
    scalar_mul_power,
    to_disc,
)
from gyrokit.core.ball import BallParams
from gyrokit.core.base import GyroOp

MODELS: dict[str, type[GyroOp]] = {cls.label: cls for cls in (Mobius, Einstein, Euclidean)}


def get_model(name: str, params: BallParams | None = None) -> GyroOp:
    """Instantiate a registered operation by label ("mobius", "einstein", "euclidean")."""
    try:
        cls = MODELS[name.lower()]
    except KeyError:
        raise ValueError(f"Unknown model {name!r}, expected one of {sorted(MODELS)}") from None
    return cls(params)


__all__ = [
    "MODELS",
    "get_model",
    "Mobius",
    "Einstein",
    "Euclidean",
    "mob_add_disc",
    "mob_neg_disc",
    "mob_sub_disc",
    "mob_gyr_disc",
    "mob_gyr_disc_ratio",
    "to_disc",
    "from_disc",
    "mob_add_ball",
    "mob_coadd",
    "mob_gamma_of_sum",
    "mob_scalar_add",
    "scalar_mul",
    "scalar_mul_power",
    "ein_add",
    "ein_gamma_of_sum",
    "ein_coadd",
    "ein_half",
    "ein_scalar_mul",
    "mobius_to_einstein",
    "einstein_to_mobius",
    "ein_add_via_mobius",
    "mob_add_via_einstein",
    "gyr",
    "gyr_matrix",
    "gyr_angle",
    "coadd",
    "solve_left",
    "solve_right",
    "solve_co_left",
    "solve_co_right",
    "audit",
    "AxiomReport",
    "IdentityCheck",
]
