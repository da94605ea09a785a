"""Differential geometry of horizontally regular curves in the first
Heisenberg group: invariants, reconstruction, Cesàro immobility, surfaces
of revolution, Bertrand mates, and position-vector classification."""

from .heisenberg import (
    H1Point,
    PshTransform,
    TangentVector,
    apply_J,
    group_inverse,
    left_translate,
    psh_apply,
    standard_frame,
)
from .expressions import EvalDomainError, ExpressionError, ScalarFn
from .curves import (
    Frame,
    HorizontalCurve,
    InvariantPair,
    ParamCurve,
    RegularityError,
    frame_at,
    frame_coefficients,
    is_horizontally_regular,
    kappa_tau_arbitrary,
    psh_transform_curve,
    reparam_horizontal,
    verify_cesaro,
)
from .frenet import AlignmentError, InitialPose, find_psh_alignment, reconstruct

__all__ = [
    "H1Point",
    "PshTransform",
    "TangentVector",
    "apply_J",
    "group_inverse",
    "left_translate",
    "psh_apply",
    "standard_frame",
    "EvalDomainError",
    "ExpressionError",
    "ScalarFn",
    "Frame",
    "HorizontalCurve",
    "InvariantPair",
    "ParamCurve",
    "RegularityError",
    "frame_at",
    "frame_coefficients",
    "is_horizontally_regular",
    "kappa_tau_arbitrary",
    "psh_transform_curve",
    "reparam_horizontal",
    "verify_cesaro",
    "AlignmentError",
    "InitialPose",
    "find_psh_alignment",
    "reconstruct",
]
