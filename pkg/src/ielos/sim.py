"""Closed-loop scenario execution and run metrics."""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import vehicle
from .guidance import GuidanceParams, Law, Measurement, guidance_step, initial_state
from .path import ParametricPath, evaluate, path_variable_rate, tangent_rate, tracking_errors, wrap_angle
from .vehicle import AutopilotGains, Environment, VehicleState

# (name, unit suffix) in logging order
COLUMNS: Tuple[Tuple[str, str], ...] = (
    ("t", "s"),
    ("x", "m"),
    ("y", "m"),
    ("psi", "rad"),
    ("r", "rad_s"),
    ("w", "1"),
    ("x_e", "m"),
    ("y_e", "m"),
    ("psi_d", "rad"),
    ("beta", "rad"),
    ("beta_hat", "rad"),
    ("beta_star", "rad"),
    ("beta_sat", "rad"),
    ("u_psi", "Nm"),
    ("w_dot", "1_s"),
)
COLUMN_NAMES = tuple(name for name, _ in COLUMNS)


@dataclass(frozen=True)
class InitialCondition:
    x: float = 0.0
    y: float = 0.0
    psi: float = 0.0
    w0: float = 0.0


@dataclass(frozen=True)
class Scenario:
    name: str
    law: Law
    path: ParametricPath = field(default_factory=lambda: ParametricPath.circle(10.0))
    params: GuidanceParams = field(default_factory=GuidanceParams)
    env: Environment = field(default_factory=Environment)
    gains: AutopilotGains = field(default_factory=AutopilotGains)
    initial: InitialCondition = field(default_factory=InitialCondition)
    desired_speed: float = 0.5
    duration: float = 100.0
    dt: float = 0.01
    perfect_heading: bool = False

    def __post_init__(self):
        if not (self.duration > 0 and self.dt > 0 and self.dt <= self.duration):
            raise ValueError("need duration > 0 and 0 < dt <= duration")
        if not self.desired_speed >= 0:
            raise ValueError("desired speed must be non-negative")
        self.params.validate(self.law)

    @property
    def n_steps(self) -> int:
        return int(round(self.duration / self.dt))


@dataclass
class RunLog:
    name: str
    dt: float
    columns: Dict[str, np.ndarray]
    diverged: bool = False
    divergence_time: Optional[float] = None

    def __getitem__(self, key: str) -> np.ndarray:
        return self.columns[key]

    def __len__(self) -> int:
        return len(self.columns["t"])


@dataclass(frozen=True)
class RunMetrics:
    name: str
    mae_xe: float
    mae_ye: float
    overshoot_ye: float
    mean_abs_torque: float
    max_sideslip_rate: float
    diverged: bool

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "mae_xe": self.mae_xe,
            "mae_ye": self.mae_ye,
            "overshoot_ye": self.overshoot_ye,
            "mean_abs_torque": self.mean_abs_torque,
            "max_sideslip_rate": self.max_sideslip_rate,
            "diverged": self.diverged,
        }


def divergence_bound(y_e0: float, path: ParametricPath) -> float:
    scale = path.params[0] if path.kind == "circle" else 0.0
    return 10.0 * max(abs(y_e0), scale)


def run(scenario: Scenario) -> RunLog:
    """Simulate one scenario at its fixed step.

    Each step evaluates the path frame, the tracking errors and the tangent
    rate (from the previous path-variable rate), runs the law, the autopilot
    and the plant, then advances the path variable. A divergent run is
    truncated at the first offending step and flagged.
    """
    sc = scenario
    dt = sc.dt
    p = sc.params
    ic = sc.initial
    state = VehicleState(ic.x, ic.y, wrap_angle(ic.psi), 0.0, sc.desired_speed)
    w = ic.w0
    w_dot = 0.0

    frame = evaluate(sc.path, w)
    err0 = tracking_errors(frame, state.x, state.y)
    law_state = initial_state(sc.law, p, frame.alpha_k, err0.y_e)
    bound = divergence_bound(err0.y_e, sc.path)

    rows: List[Tuple[float, ...]] = []
    diverged = False
    t_div = None
    for n in range(sc.n_steps):
        t = n * dt
        try:
            frame = evaluate(sc.path, w)
            err = tracking_errors(frame, state.x, state.y)
            if not (math.isfinite(err.x_e) and math.isfinite(err.y_e)) or abs(err.y_e) > bound:
                raise FloatingPointError
            alpha_dot = tangent_rate(frame, w_dot)
            kin = vehicle.body_velocities(state, sc.env)
            meas = Measurement(frame.alpha_k, alpha_dot, err.x_e, err.y_e, kin.U)
            out, law_state = guidance_step(sc.law, p, law_state, meas, dt)
            if sc.perfect_heading:
                u_psi = 0.0
                state_next = vehicle.step_perfect_heading(state, out.psi_d, sc.env, dt)
            else:
                r_cmd, u_psi = vehicle.autopilot(state, out.psi_d, sc.gains)
                state_next = vehicle.step(state, r_cmd, sc.env, dt, sc.gains)
            w_dot = path_variable_rate(frame, out.psi_d, kin.U, err.x_e, p.kappa)
            row = (
                t, state.x, state.y, state.psi, state.r, w, err.x_e, err.y_e, out.psi_d,
                kin.beta, _or0(out.beta_hat), _or0(out.beta_star), _or0(out.beta_sat),
                u_psi, w_dot,
            )
            if not all(math.isfinite(v) for v in row):
                raise FloatingPointError
        except (ValueError, FloatingPointError, OverflowError, ZeroDivisionError):
            diverged, t_div = True, t
            break
        rows.append(row)
        state = state_next
        w = w + dt * w_dot

    data = np.array(rows, dtype=float).reshape(len(rows), len(COLUMNS))
    columns = {name: data[:, i].copy() for i, name in enumerate(COLUMN_NAMES)}
    return RunLog(sc.name, dt, columns, diverged, t_div)


def _or0(v: float) -> float:
    return 0.0 if math.isnan(v) else v


def mae(log: RunLog) -> Tuple[float, float]:
    """Mean absolute along-track and cross-track errors."""
    if len(log) == 0:
        raise ValueError("cannot compute MAE of an empty log")
    return float(np.mean(np.abs(log["x_e"]))), float(np.mean(np.abs(log["y_e"])))


def overshoot(log: RunLog) -> float:
    """Largest cross-track excursion past the path, opposite to the initial side."""
    y = log["y_e"]
    s0 = np.sign(y[0])
    if s0 == 0:
        raise ValueError("overshoot is undefined for y_e(0) = 0")
    return float(max(0.0, np.max(-s0 * y)))


def tail_mae_ye(log: RunLog, seconds: float) -> float:
    """Mean |y_e| over the final ``seconds`` of the log."""
    t = log["t"]
    sel = t >= t[-1] - seconds + 0.5 * log.dt
    return float(np.mean(np.abs(log["y_e"][sel])))


def total_variation(x: np.ndarray) -> float:
    return float(np.sum(np.abs(np.diff(x))))


def metrics(log: RunLog) -> RunMetrics:
    mx, my = mae(log)
    beta = log["beta"]
    if len(beta) > 1:
        dbeta = np.array([wrap_angle(b) for b in np.diff(beta)])
        max_rate = float(np.max(np.abs(dbeta)) / log.dt)
    else:
        max_rate = 0.0
    return RunMetrics(
        name=log.name,
        mae_xe=mx,
        mae_ye=my,
        overshoot_ye=overshoot(log),
        mean_abs_torque=float(np.mean(np.abs(log["u_psi"]))),
        max_sideslip_rate=max_rate,
        diverged=log.diverged,
    )


def compare(scenarios: Sequence[Scenario]) -> List[RunMetrics]:
    """Run each scenario in order and return one metrics row per scenario."""
    if not scenarios:
        raise ValueError("compare needs at least one scenario")
    return [metrics(run(sc)) for sc in scenarios]


def with_overrides(scenario: Scenario, dt: Optional[float] = None,
                   duration: Optional[float] = None) -> Scenario:
    changes = {}
    if dt is not None:
        changes["dt"] = dt
    if duration is not None:
        changes["duration"] = duration
    return replace(scenario, **changes) if changes else scenario
