from gyrokit.geometry.arcs import arc_diagnostics
from gyrokit.geometry.figures import (
    GyroTriangle,
    gyroparallelogram_add,
    gyroparallelogram_fourth,
    gyrotriangle,
    gyrovector_equivalent,
    is_gyrocollinear,
    scalar_add,
)
from gyrokit.geometry.gyrolines import (
    GyroCurve,
    cogyrodistance,
    cogyroline_point,
    cogyromidpoint,
    gyrodistance,
    gyroline_point,
    gyromidpoint,
)

__all__ = [
    "GyroCurve",
    "gyroline_point",
    "cogyroline_point",
    "gyromidpoint",
    "cogyromidpoint",
    "gyrodistance",
    "cogyrodistance",
    "GyroTriangle",
    "gyrotriangle",
    "is_gyrocollinear",
    "gyrovector_equivalent",
    "gyroparallelogram_fourth",
    "gyroparallelogram_add",
    "scalar_add",
    "arc_diagnostics",
]
