"""Exact synthesis of revolute scissor linkages drawing rational curves.

Pipeline: load a bounded rational space curve, normalize it, compute the
minimal motion polynomial, factor it into rotations, flip the factor chain
into four-bar cells, and verify the assembled linkage exactly.
"""

from .algebra import (
    DualQuaternion,
    PlueckerLine,
    Quaternion,
    RotationQuaternion,
    act_on_point,
    axis,
    minpol,
)
from .errors import ScissorlinkError
from .linkage import (
    CellKind,
    FourBarReport,
    Generic,
    Linkage,
    Planar,
    Spherical,
    UserSupplied,
    bflip,
    choose_m0,
    count_bounds,
    fourbar_check,
    recentre_factorization,
    run_recursion,
    synthesize,
)
from .motion import (
    Factorization,
    FrameTransform,
    MotionPolynomial,
    RationalCurve,
    curve_load,
    curve_normalize,
    gfactor,
    minmot,
    tfactor,
    trajectory,
)
from .quatpoly import QPoly
from .realpoly import RealPoly
from .verify import (
    INFINITY,
    check_loop_closure,
    check_trajectory,
    configuration_at,
    point_trajectory,
)

__version__ = "0.1.0"

__all__ = [
    "CellKind",
    "DualQuaternion",
    "Factorization",
    "FourBarReport",
    "FrameTransform",
    "Generic",
    "INFINITY",
    "Linkage",
    "MotionPolynomial",
    "Planar",
    "PlueckerLine",
    "QPoly",
    "Quaternion",
    "RationalCurve",
    "RealPoly",
    "RotationQuaternion",
    "ScissorlinkError",
    "Spherical",
    "UserSupplied",
    "act_on_point",
    "axis",
    "bflip",
    "check_loop_closure",
    "check_trajectory",
    "choose_m0",
    "configuration_at",
    "count_bounds",
    "curve_load",
    "curve_normalize",
    "fourbar_check",
    "gfactor",
    "minmot",
    "minpol",
    "point_trajectory",
    "recentre_factorization",
    "run_recursion",
    "synthesize",
    "tfactor",
    "trajectory",
]
