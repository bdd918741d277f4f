"""Han's time-optimal tracking differentiator and the saturation stage."""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .path import sign


def fsg(x: float, d: float) -> float:
    return (sign(x + d) - sign(x - d)) / 2.0


def fhan(v1: float, v2: float, r: float, h: float) -> float:
    """Time-optimal synthesis function driving ``(v1, v2)`` to the origin.

    Bounded by ``r`` in magnitude; linear inside the boundary layer ``|a| < r*h**2``.
    """
    d = r * h * h
    a0 = h * v2
    y = v1 + a0
    a1 = math.sqrt(d * (d + 8.0 * abs(y)))
    a2 = a0 + sign(y) * (a1 - d) / 2.0
    fy = fsg(y, d)
    a = (a0 + y) * fy + a2 * (1.0 - fy)
    fa = fsg(a, d)
    return -r * (a / d) * fa - r * sign(a) * (1.0 - fa)


@dataclass(frozen=True)
class TdState:
    v1: float = 0.0
    v2: float = 0.0
    r: float = 30.0
    h: float = 0.05

    def __post_init__(self):
        if not (self.r > 0 and self.h > 0):
            raise ValueError("TD speed factor r and filter factor h must be positive")


def td_step(td: TdState, signal: float, dt: float) -> TdState:
    """Advance the differentiator toward ``signal``; the smoothed value is ``v1``."""
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    if not math.isfinite(signal):
        raise ValueError(f"non-finite TD input {signal!r}")
    accel = fhan(td.v1 - signal, td.v2, td.r, td.h)
    return replace(td, v1=td.v1 + dt * td.v2, v2=td.v2 + dt * accel)


@dataclass(frozen=True)
class SaturationLimit:
    beta_m: float = math.pi

    def __post_init__(self):
        if not self.beta_m > 0:
            raise ValueError("saturation bound must be positive")


def saturate(beta_star: float, limit: SaturationLimit = SaturationLimit()) -> float:
    if abs(beta_star) >= limit.beta_m:
        return limit.beta_m * sign(beta_star)
    return beta_star
