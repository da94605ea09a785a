"""Curve reconstruction from prescribed invariants (the fundamental theorem
of curves) and alignment of equal-invariant curves by a pseudo-hermitian
transformation.

The 12-dimensional frame system collapses to four states: with phi the
heading of the unit contact velocity against e1,

    x' = cos(phi),  y' = sin(phi),  phi' = kappa(s),
    z' = tau(s) + y cos(phi) - x sin(phi),

where the z-equation is the T-component identity -x'y + xy' + z' = tau
solved for z'.  The contact constraint |r'_xi| = 1 then holds exactly and
frame orthonormality cannot drift.  Integration is classical RK4 at a
fixed step for bit-reproducible output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import HorizontalCurve, ParamCurve, reparam_horizontal
from .heisenberg import H1Point, PshTransform, left_translate

__all__ = [
    "InitialPose",
    "AlignmentError",
    "reconstruct",
    "find_psh_alignment",
]


@dataclass(frozen=True)
class InitialPose:
    """Starting point and heading angle of the unit contact velocity."""

    point: H1Point
    heading: float

    def __post_init__(self):
        if not math.isfinite(self.heading):
            raise ValueError("non-finite heading")

    @classmethod
    def origin(cls, heading: float = 0.0) -> "InitialPose":
        return cls(H1Point.origin(), heading)


class AlignmentError(ValueError):
    """No pseudo-hermitian transformation maps one curve onto the other."""


def reconstruct(
    inv, pose: InitialPose, s_max: float, step: float = 1e-3
) -> HorizontalCurve:
    """Integrate the reduced Frenet system for the curve with invariants
    ``inv`` and initial pose ``pose`` over [0, s_max].

    The actual step is s_max/ceil(s_max/step) so the endpoint is hit
    exactly.  Returns the curve as samples reparametrized by (its own,
    numerically identical) horizontal arc-length.
    """
    if not s_max > 0:
        raise ValueError("s_max must be positive")
    if not step > 0:
        raise ValueError("step must be positive")
    n = max(4, int(np.ceil(s_max / step)))
    h = s_max / n
    s_half = np.linspace(0.0, s_max, 2 * n + 1)  # nodes and half-steps
    kappa = np.asarray(inv.kappa(s_half), dtype=float)
    tau = np.asarray(inv.tau(s_half), dtype=float)
    if not (np.all(np.isfinite(kappa)) and np.all(np.isfinite(tau))):
        raise ValueError("invariants are not finite on [0, s_max]")

    out = np.empty((n + 1, 4))
    out[0] = (pose.point.x, pose.point.y, pose.point.z, pose.heading)

    def rhs(x, y, z, phi, kap, tv):
        c, sn = math.cos(phi), math.sin(phi)
        return c, sn, tv + y * c - x * sn, kap

    x, y, z, phi = out[0]
    for i in range(n):
        k0, k1, k2 = kappa[2 * i], kappa[2 * i + 1], kappa[2 * i + 2]
        t0, t1, t2 = tau[2 * i], tau[2 * i + 1], tau[2 * i + 2]
        a1 = rhs(x, y, z, phi, k0, t0)
        a2 = rhs(x + h / 2 * a1[0], y + h / 2 * a1[1], z + h / 2 * a1[2],
                 phi + h / 2 * a1[3], k1, t1)
        a3 = rhs(x + h / 2 * a2[0], y + h / 2 * a2[1], z + h / 2 * a2[2],
                 phi + h / 2 * a2[3], k1, t1)
        a4 = rhs(x + h * a3[0], y + h * a3[1], z + h * a3[2],
                 phi + h * a3[3], k2, t2)
        x += h / 6 * (a1[0] + 2 * a2[0] + 2 * a3[0] + a4[0])
        y += h / 6 * (a1[1] + 2 * a2[1] + 2 * a3[1] + a4[1])
        z += h / 6 * (a1[2] + 2 * a2[2] + 2 * a3[2] + a4[2])
        phi += h / 6 * (a1[3] + 2 * a2[3] + 2 * a3[3] + a4[3])
        out[i + 1] = (x, y, z, phi)

    s = np.linspace(0.0, s_max, n + 1)
    curve = ParamCurve.from_samples(s, out[:, 0], out[:, 1], out[:, 2])
    return reparam_horizontal(curve, step=h)


def find_psh_alignment(
    a: HorizontalCurve,
    b: HorizontalCurve,
    tol: float = 1e-6,
    n: int = 200,
    invariant_tol: float = 1e-4,
) -> PshTransform:
    """The pseudo-hermitian transformation g with g(a) = b, when the curves
    share invariants; raises AlignmentError otherwise.

    The rotation angle is the heading difference at s = 0 and the shift is
    solved from the group law; the result is accepted only if the
    sup-distance of the transformed curve to b is below tol.
    """
    s_hi = min(a.s_max, b.s_max)
    grid = np.linspace(0.0, s_hi, n)
    ka, ta_ = a.invariants(grid)
    kb, tb_ = b.invariants(grid)
    dk = float(np.max(np.abs(ka - kb)))
    dt = float(np.max(np.abs(ta_ - tb_)))
    if dk > invariant_tol or dt > invariant_tol:
        raise AlignmentError(
            f"invariants differ (max |dkappa| = {dk:.3e}, max |dtau| = {dt:.3e}); "
            "the curves are not congruent"
        )
    angle = float(b.heading(0.0) - a.heading(0.0))
    rot = PshTransform(angle, H1Point.origin())
    a0 = H1Point.from_array(a.point(0.0))
    b0 = H1Point.from_array(b.point(0.0))
    shift = left_translate(b0, rot.apply(a0).inverse())
    g = PshTransform(angle, shift)
    moved = g.apply_array(a.point(grid))
    sup = float(np.max(np.linalg.norm(moved - b.point(grid), axis=1)))
    if sup > tol:
        raise AlignmentError(
            f"alignment failed: sup-distance {sup:.3e} exceeds tol {tol:.3e}"
        )
    return g
