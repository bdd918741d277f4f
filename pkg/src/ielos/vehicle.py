"""Planar kinematic plant with ambient current and a heading autopilot.

Sideslip comes from a constant North-East current superposed on the
relative surge speed, so the body-frame sideslip angle changes as the
heading rotates. Surge speed relative to the water is held constant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Tuple

from .path import wrap_angle


@dataclass(frozen=True)
class VehicleState:
    x: float
    y: float
    psi: float
    r: float = 0.0
    u_rel: float = 0.0

    def __post_init__(self):
        if self.u_rel < 0.0:
            raise ValueError(f"relative surge speed must be >= 0, got {self.u_rel}")


@dataclass(frozen=True)
class KinematicSample:
    u: float
    v: float
    U: float
    beta: float


@dataclass(frozen=True)
class Environment:
    """Constant ambient current, m/s, in North-East components."""

    V_N: float = 0.0
    V_E: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.V_N) and math.isfinite(self.V_E)):
            raise ValueError("current components must be finite")


@dataclass(frozen=True)
class AutopilotGains:
    k_psi: float = 5.0  # 1/s
    T_r: float = 0.05  # s
    k_t: float = 50.0  # N*m*s/rad

    def __post_init__(self):
        if not (self.k_psi > 0 and self.T_r > 0 and self.k_t > 0):
            raise ValueError("autopilot gains must all be positive")


def body_velocities(state: VehicleState, env: Environment) -> KinematicSample:
    c, s = math.cos(state.psi), math.sin(state.psi)
    u = state.u_rel + env.V_N * c + env.V_E * s
    v = -env.V_N * s + env.V_E * c
    return KinematicSample(u, v, math.hypot(u, v), wrap_angle(math.atan2(v, u)))


def autopilot(state: VehicleState, psi_d: float, gains: AutopilotGains) -> Tuple[float, float]:
    """Return the commanded yaw rate and the torque proxy ``k_t * (r_cmd - r)``."""
    r_cmd = gains.k_psi * wrap_angle(psi_d - state.psi)
    return r_cmd, gains.k_t * (r_cmd - state.r)


def step(state: VehicleState, r_cmd: float, env: Environment, dt: float,
         gains: AutopilotGains = AutopilotGains()) -> VehicleState:
    """One forward-Euler step of the kinematics and the first-order yaw-rate lag."""
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    if not all(math.isfinite(q) for q in (state.x, state.y, state.psi, state.r, r_cmd)):
        raise ValueError("non-finite vehicle state or command")
    kin = body_velocities(state, env)
    c, s = math.cos(state.psi), math.sin(state.psi)
    return replace(
        state,
        x=state.x + dt * (kin.u * c - kin.v * s),
        y=state.y + dt * (kin.u * s + kin.v * c),
        psi=wrap_angle(state.psi + dt * state.r),
        r=state.r + dt * (r_cmd - state.r) / gains.T_r,
    )


def step_perfect_heading(state: VehicleState, psi_d: float, env: Environment, dt: float) -> VehicleState:
    """Translate with the heading snapped to ``psi_d`` (ideal autopilot)."""
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    held = replace(state, psi=wrap_angle(psi_d), r=0.0)
    kin = body_velocities(held, env)
    c, s = math.cos(held.psi), math.sin(held.psi)
    return replace(held, x=held.x + dt * (kin.u * c - kin.v * s), y=held.y + dt * (kin.u * s + kin.v * c))
