"""Parametric paths, the path-tangential frame and tracking errors."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Tuple

# Below this first-derivative norm the path tangent is undefined.
DEGENERATE_NORM = 1e-9

Vec6 = Tuple[float, float, float, float, float, float]


class IllPosedPathError(ValueError):
    """Raised when the path parametrization is degenerate at the queried point."""


def wrap_angle(theta: float) -> float:
    """Map an angle to the half-open interval (-pi, pi]."""
    if not math.isfinite(theta):
        raise ValueError(f"cannot wrap non-finite angle {theta!r}")
    wrapped = math.remainder(theta, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


def sign(x: float) -> float:
    # sign(0) = 0, used everywhere in the package
    if x > 0.0:
        return 1.0
    if x < 0.0:
        return -1.0
    return 0.0


@dataclass(frozen=True)
class PathFrame:
    w: float
    x_k: float
    y_k: float
    dx_k: float
    dy_k: float
    ddx_k: float
    ddy_k: float
    alpha_k: float

    @property
    def speed_norm(self) -> float:
        """Norm of the first parametric derivative, m per unit w."""
        return math.hypot(self.dx_k, self.dy_k)


@dataclass(frozen=True)
class TrackingError:
    x_e: float
    y_e: float


@dataclass(frozen=True)
class ParametricPath:
    """A planar path given by a closure returning position and derivatives.

    Use :meth:`circle` or :meth:`line` for the built-in shapes. ``kind`` and
    ``params`` only describe the path for serialization.
    """

    kind: str
    params: Tuple[float, ...]
    func: Callable[[float], Vec6]

    @classmethod
    def circle(cls, radius: float, center: Tuple[float, float] = (0.0, 0.0)) -> "ParametricPath":
        if not radius > 0.0:
            raise ValueError(f"circle radius must be positive, got {radius}")
        cx, cy = float(center[0]), float(center[1])
        R = float(radius)

        def f(w: float) -> Vec6:
            c, s = math.cos(w), math.sin(w)
            return (cx + R * c, cy + R * s, -R * s, R * c, -R * c, -R * s)

        return cls("circle", (R, cx, cy), f)

    @classmethod
    def line(cls, origin: Tuple[float, float] = (0.0, 0.0), heading: float = 0.0) -> "ParametricPath":
        ox, oy = float(origin[0]), float(origin[1])
        c, s = math.cos(heading), math.sin(heading)

        def f(w: float) -> Vec6:
            return (ox + w * c, oy + w * s, c, s, 0.0, 0.0)

        return cls("line", (ox, oy, float(heading)), f)


def _regular_norm(dx: float, dy: float) -> float:
    n = math.hypot(dx, dy)
    if not n >= DEGENERATE_NORM:
        raise IllPosedPathError(f"degenerate path parametrization (|dp/dw| = {n:g})")
    return n


def evaluate(path: ParametricPath, w: float) -> PathFrame:
    x, y, dx, dy, ddx, ddy = path.func(w)
    _regular_norm(dx, dy)
    return PathFrame(w, x, y, dx, dy, ddx, ddy, wrap_angle(math.atan2(dy, dx)))


def tracking_errors(frame: PathFrame, x: float, y: float) -> TrackingError:
    """Along- and cross-track errors: the position offset rotated into the path frame."""
    ca, sa = math.cos(frame.alpha_k), math.sin(frame.alpha_k)
    dx, dy = x - frame.x_k, y - frame.y_k
    return TrackingError(ca * dx + sa * dy, -sa * dx + ca * dy)


def tangent_rate(frame: PathFrame, w_dot: float) -> float:
    """Time derivative of the tangential angle, exact from the second derivatives."""
    n = _regular_norm(frame.dx_k, frame.dy_k)
    curvature_w = (frame.dx_k * frame.ddy_k - frame.dy_k * frame.ddx_k) / (n * n)
    return w_dot * curvature_w


def path_variable_rate(frame: PathFrame, psi_d: float, U: float, x_e: float, kappa: float) -> float:
    """Rate of the path variable that makes the virtual point move at
    ``U cos(psi_d - alpha_k) + kappa * x_e``."""
    n = _regular_norm(frame.dx_k, frame.dy_k)
    return (U * math.cos(psi_d - frame.alpha_k) + kappa * x_e) / n
