"""Invariants and frames of horizontally regular curves.

A curve r(u) = (x(u), y(u), z(u)) is horizontally regular when the contact
part of its velocity never vanishes, i.e. sqrt(x'^2 + y'^2) > 0.  Such a
curve carries two pseudo-hermitian invariants,

    kappa = (x' y'' - x'' y') / (x'^2 + y'^2)^(3/2)    (p-curvature)
    tau   = (x y' - x' y + z') / (x'^2 + y'^2)^(1/2)   (contact normality)

both unchanged under z-axis rotations and left translations.  kappa is the
Euclidean curvature of the xy-projection; tau vanishes exactly on
horizontal curves.  After reparametrizing by horizontal arc-length s the
moving frame is, in Euclidean coordinates,

    t = (x', y', x'y - xy'),   n = (-y', x', -yy' - xx'),   b = (0, 0, 1),

with n = J t.  Analytic components differentiate symbolically; sampled
components use 4th-order finite differences on a uniform resample.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.interpolate import PchipInterpolator

from .fields import LinearCombinationField, SampledField, as_field
from .heisenberg import H1Point, PshTransform
from .numerics import cumulative_simpson, uniform_grid

__all__ = [
    "RegularityError",
    "ParamCurve",
    "HorizontalCurve",
    "Frame",
    "InvariantPair",
    "is_horizontally_regular",
    "kappa_tau_arbitrary",
    "reparam_horizontal",
    "frame_at",
    "frame_coefficients",
    "verify_cesaro",
    "psh_transform_curve",
]


class RegularityError(ValueError):
    """The contact part of the velocity is (numerically) degenerate."""


@dataclass
class ParamCurve:
    """A curve over an arbitrary parameter u, with field components."""

    x: object
    y: object
    z: object
    u_min: float
    u_max: float
    kind: str = "analytic"  # "analytic" | "samples"

    def __post_init__(self):
        if not self.u_max > self.u_min:
            raise ValueError(f"degenerate interval [{self.u_min}, {self.u_max}]")
        self._d1 = None
        self._d2 = None

    @classmethod
    def from_expressions(cls, x: str, y: str, z: str, u_range) -> "ParamCurve":
        lo, hi = (float(v) for v in u_range)
        return cls(as_field(x), as_field(y), as_field(z), lo, hi, kind="analytic")

    @classmethod
    def from_fields(cls, x, y, z, u_range, kind: str = "analytic") -> "ParamCurve":
        lo, hi = (float(v) for v in u_range)
        return cls(as_field(x), as_field(y), as_field(z), lo, hi, kind=kind)

    @classmethod
    def from_samples(cls, u, x, y, z) -> "ParamCurve":
        u = np.asarray(u, dtype=float)
        if u.ndim != 1 or u.size < 4:
            raise ValueError("need at least 4 samples")
        if np.any(np.diff(u) <= 0):
            raise ValueError("sample parameters must be strictly increasing")
        n = max(u.size, 64)
        return cls(
            SampledField.resample(u, x, n),
            SampledField.resample(u, y, n),
            SampledField.resample(u, z, n),
            float(u[0]),
            float(u[-1]),
            kind="samples",
        )

    # -- evaluation ---------------------------------------------------------

    def point(self, u):
        u = np.asarray(u, dtype=float)
        out = np.stack(
            [np.asarray(self.x(u)), np.asarray(self.y(u)), np.asarray(self.z(u))],
            axis=-1,
        )
        return out

    def _first(self):
        if self._d1 is None:
            self._d1 = (
                self.x.derivative(),
                self.y.derivative(),
                self.z.derivative(),
            )
        return self._d1

    def _second(self):
        if self._d2 is None:
            dx, dy, _ = self._first()
            self._d2 = (dx.derivative(), dy.derivative())
        return self._d2

    def contact_speed(self, u):
        dx, dy, _ = self._first()
        return np.hypot(np.asarray(dx(u)), np.asarray(dy(u)))

    def diameter(self, n: int = 256) -> float:
        pts = self.point(np.linspace(self.u_min, self.u_max, n))
        return float(np.linalg.norm(pts.max(axis=0) - pts.min(axis=0)))


def is_horizontally_regular(c: ParamCurve, tol: float | None = None, n: int = 1024) -> bool:
    """True when the contact speed stays above tol on a dense grid.

    tol defaults to 1e-8 times the curve diameter.
    """
    if tol is None:
        tol = 1e-8 * c.diameter()
    elif tol <= 0:
        raise ValueError("tol must be positive")
    u = np.linspace(c.u_min, c.u_max, n)
    return bool(np.min(c.contact_speed(u)) > tol)


def kappa_tau_arbitrary(c: ParamCurve, u, tol: float = 1e-12):
    """Invariants at parameter u (scalar or array), arbitrary parametrization."""
    scalar = np.ndim(u) == 0
    u = np.atleast_1d(np.asarray(u, dtype=float))
    dx, dy, dz = c._first()
    ddx, ddy = c._second()
    xp, yp, zp = np.asarray(dx(u)), np.asarray(dy(u)), np.asarray(dz(u))
    xpp, ypp = np.asarray(ddx(u)), np.asarray(ddy(u))
    speed2 = xp * xp + yp * yp
    if np.any(speed2 < tol * tol):
        bad = u[np.argmin(speed2)]
        raise RegularityError(f"degenerate contact speed near u = {bad}")
    x, y = np.asarray(c.x(u)), np.asarray(c.y(u))
    speed = np.sqrt(speed2)
    kappa = (xp * ypp - xpp * yp) / speed2**1.5
    tau = (x * yp - xp * y + zp) / speed
    if scalar:
        return float(kappa[0]), float(tau[0])
    return kappa, tau


# ---------------------------------------------------------------------------
# Horizontal arc-length


class HorizontalCurve:
    """A curve reparametrized by horizontal arc-length s in [0, S].

    Holds the monotone map s -> u (built by composite Simpson and refined
    per query by safeguarded Newton on the local integral), so the contact
    speed in s is exactly one by construction.
    """

    def __init__(self, param: ParamCurve, u_grid: np.ndarray, sigma: np.ndarray):
        self.param = param
        self._u_grid = u_grid
        self._sigma = sigma
        self.s_max = float(sigma[-1])
        self._inverse = PchipInterpolator(sigma, u_grid)

    # -- parameter map ------------------------------------------------------

    def u_of_s(self, s, refine_tol: float = 1e-12, max_iter: int = 8):
        scalar = np.ndim(s) == 0
        s = np.atleast_1d(np.asarray(s, dtype=float))
        u = np.clip(self._inverse(np.clip(s, 0.0, self.s_max)),
                    self.param.u_min, self.param.u_max)
        # anchor each query at the nearest grid node below and Newton-refine
        # on sigma(u) - s, with the local integral by composite Simpson
        idx = np.clip(np.searchsorted(self._sigma, s, side="right") - 1, 0,
                      len(self._sigma) - 2)
        u_lo = self._u_grid[idx]
        s_lo = self._sigma[idx]
        for _ in range(max_iter):
            local = self._local_integral(u_lo, u)
            res = (s_lo + local) - s
            speed = self.param.contact_speed(u)
            step = res / np.maximum(speed, 1e-300)
            u = np.clip(u - step, self.param.u_min, self.param.u_max)
            if np.max(np.abs(step)) < refine_tol:
                break
        if scalar:
            return float(u[0])
        return u

    def _local_integral(self, a: np.ndarray, b: np.ndarray, panels: int = 16):
        # composite Simpson over [a_i, b_i] for vectors a, b
        w = np.linspace(0.0, 1.0, panels + 1)[:, None]
        nodes = a[None, :] + (b - a)[None, :] * w
        vals = self.param.contact_speed(nodes.ravel()).reshape(nodes.shape)
        h = (b - a) / panels
        weights = np.ones(panels + 1)
        weights[1:-1:2] = 4.0
        weights[2:-1:2] = 2.0
        return (h / 3.0) * np.einsum("i,ij->j", weights, vals)

    # -- geometry -----------------------------------------------------------

    def point(self, s):
        return self.param.point(self.u_of_s(s))

    def velocity(self, s):
        """d/ds of the Euclidean coordinates (unit contact speed)."""
        scalar = np.ndim(s) == 0
        u = np.atleast_1d(self.u_of_s(s))
        dx, dy, dz = self.param._first()
        xp, yp, zp = np.asarray(dx(u)), np.asarray(dy(u)), np.asarray(dz(u))
        speed = np.hypot(xp, yp)
        out = np.stack([xp / speed, yp / speed, zp / speed], axis=-1)
        return out[0] if scalar else out

    def kappa(self, s):
        return kappa_tau_arbitrary(self.param, self.u_of_s(s))[0]

    def tau(self, s):
        return kappa_tau_arbitrary(self.param, self.u_of_s(s))[1]

    def invariants(self, s):
        return kappa_tau_arbitrary(self.param, self.u_of_s(s))

    def heading(self, s):
        v = self.velocity(s)
        if v.ndim == 1:
            return float(np.arctan2(v[1], v[0]))
        return np.arctan2(v[..., 1], v[..., 0])

    def diameter(self, n: int = 256) -> float:
        return self.param.diameter(n)

    def frame_arrays(self, s):
        """Vectorized frame: returns (points, t, n, b) with shape (m, 3)."""
        s = np.atleast_1d(np.asarray(s, dtype=float))
        u = self.u_of_s(s)
        pts = self.param.point(u)
        x, y = pts[..., 0], pts[..., 1]
        v = self.velocity(s)
        xp, yp = v[..., 0], v[..., 1]
        t = np.stack([xp, yp, xp * y - x * yp], axis=-1)
        n = np.stack([-yp, xp, -y * yp - x * xp], axis=-1)
        b = np.broadcast_to(np.array([0.0, 0.0, 1.0]), t.shape)
        return pts, t, n, b

    def contact_speed_check(self, n: int = 257) -> float:
        """Max deviation of |r'_xi(s)| from 1 on a grid (should be ~eps)."""
        s = np.linspace(0.0, self.s_max, n)
        v = self.velocity(s)
        return float(np.max(np.abs(np.hypot(v[:, 0], v[:, 1]) - 1.0)))


def reparam_horizontal(
    c: ParamCurve, step: float | None = None, tol: float | None = None
) -> HorizontalCurve:
    """Reparametrize by horizontal arc-length.

    ``step`` controls the u-grid spacing of the Simpson accumulation of
    sigma(u) = integral of the contact speed; inversion is monotone (PCHIP)
    interpolation refined to ~1e-12 per query.
    """
    if tol is None:
        tol = 1e-8 * c.diameter()
    span = c.u_max - c.u_min
    n_panels = int(np.ceil(span / step)) if step else 4096
    n_panels = max(64, min(n_panels, 200_000))
    u = uniform_grid(c.u_min, c.u_max, n_panels)
    speed = c.contact_speed(u)
    if np.min(speed) <= tol:
        bad = u[np.argmin(speed)]
        raise RegularityError(
            f"curve is not horizontally regular: contact speed "
            f"{np.min(speed):.3e} <= tol {tol:.3e} near u = {bad}"
        )
    sigma = cumulative_simpson(speed, x=u, initial=0.0)
    return HorizontalCurve(c, u, sigma)


# ---------------------------------------------------------------------------
# Frames and position coefficients


@dataclass
class Frame:
    """Orthonormal frame (t, n, b) at a curve point, Euclidean components.

    b is always (0, 0, 1); t and n lie in the contact plane at the base
    point and n = J t.  ``contact`` holds the basis components (x', y') of
    t; the basis components of n are (-y', x')."""

    base: H1Point
    t: np.ndarray
    n: np.ndarray
    b: np.ndarray
    contact: tuple[float, float]

    def t_basis(self) -> np.ndarray:
        return np.array([self.contact[0], self.contact[1], 0.0])

    def n_basis(self) -> np.ndarray:
        return np.array([-self.contact[1], self.contact[0], 0.0])


def frame_at(h: HorizontalCurve, s: float) -> Frame:
    pts, t, n, b = h.frame_arrays(float(s))
    return Frame(
        base=H1Point.from_array(pts[0]),
        t=t[0],
        n=n[0],
        b=np.array([0.0, 0.0, 1.0]),
        contact=(float(t[0][0]), float(t[0][1])),
    )


def frame_coefficients(h: HorizontalCurve, s):
    """Coefficients (u1~, u2~, u3~) of the position vector in the curve's own
    frame: r = u1~ t + u2~ n + u3~ b with

        u1~ = x x' + y y',   u2~ = y x' - x y',   u3~ = z.

    sqrt(u1~^2 + u2~^2) is the distance to the z-axis and u3~ the height.
    """
    scalar = np.ndim(s) == 0
    s = np.atleast_1d(np.asarray(s, dtype=float))
    pts = h.point(s)
    v = h.velocity(s)
    x, y, z = pts[..., 0], pts[..., 1], pts[..., 2]
    xp, yp = v[..., 0], v[..., 1]
    u1 = x * xp + y * yp
    u2 = y * xp - x * yp
    u3 = z
    if scalar:
        return float(u1[0]), float(u2[0]), float(u3[0])
    return u1, u2, u3


def verify_cesaro(h: HorizontalCurve, grid, h_fd: float = 1e-5) -> float:
    """Max residual of the first-order immobility system

        u1' = kappa u2 - 1,   u2' = -kappa u1,   u3' = u2 - tau

    for u_i = -(position coefficients), derivatives by central differences
    with step h_fd.  Holds identically for every horizontally regular
    curve, so the residual measures only numerical error.
    """
    grid = np.asarray(grid, dtype=float)
    if np.any(grid - h_fd < 0.0) or np.any(grid + h_fd > h.s_max):
        raise ValueError("grid must lie at least h_fd inside [0, S]")
    um = [-np.asarray(c) for c in frame_coefficients(h, grid - h_fd)]
    up = [-np.asarray(c) for c in frame_coefficients(h, grid + h_fd)]
    u0 = [-np.asarray(c) for c in frame_coefficients(h, grid)]
    du = [(p - m) / (2.0 * h_fd) for p, m in zip(up, um)]
    kappa, tau = h.invariants(grid)
    r1 = du[0] - (kappa * u0[1] - 1.0)
    r2 = du[1] + kappa * u0[0]
    r3 = du[2] - (u0[1] - tau)
    return float(max(np.max(np.abs(r1)), np.max(np.abs(r2)), np.max(np.abs(r3))))


# ---------------------------------------------------------------------------
# Invariant pairs and curve transforms


@dataclass
class InvariantPair:
    """kappa(s) and tau(s) as fields (expression-backed or sampled)."""

    kappa: object
    tau: object

    def __post_init__(self):
        self.kappa = as_field(self.kappa)
        self.tau = as_field(self.tau)

    @classmethod
    def from_expressions(cls, kappa: str, tau: str) -> "InvariantPair":
        return cls(kappa, tau)

    @classmethod
    def from_constants(cls, kappa: float, tau: float) -> "InvariantPair":
        return cls(float(kappa), float(tau))

    @classmethod
    def from_samples(cls, s, kappa, tau) -> "InvariantPair":
        s = np.asarray(s, dtype=float)
        return cls(SampledField.resample(s, kappa), SampledField.resample(s, tau))


def psh_transform_curve(g: PshTransform, c: ParamCurve) -> ParamCurve:
    """The induced curve map of a pseudo-hermitian transformation.

    Components stay exact linear combinations of the originals, so analytic
    derivative information survives; kappa and tau are invariant under the
    result.
    """
    ca, sa = np.cos(g.angle), np.sin(g.angle)
    p = g.shift
    x = LinearCombinationField([(ca, c.x), (-sa, c.y)], const=p.x)
    y = LinearCombinationField([(sa, c.x), (ca, c.y)], const=p.y)
    z = LinearCombinationField(
        [(1.0, c.z), (p.y * ca - p.x * sa, c.x), (-p.y * sa - p.x * ca, c.y)],
        const=p.z,
    )
    return ParamCurve(x, y, z, c.u_min, c.u_max, kind=c.kind)
