"""LOS, ALOS, ELOS and IELOS heading laws.

Every law goes through :func:`guidance_step`, which maps the current
measurements and the law's own state record to a heading command and the
next state record.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from .differentiator import SaturationLimit, TdState, saturate, td_step
from .observer import DEFAULT_EPS_DEN, EsoState, eso_step, extract_sideslip
from .path import wrap_angle

NAN = float("nan")


class Law(str, enum.Enum):
    LOS = "LOS"
    ALOS = "ALOS"
    ELOS = "ELOS"
    IELOS = "IELOS"


@dataclass(frozen=True)
class GuidanceParams:
    """Tuning of one law. Fields a law does not use may stay ``None``."""

    delta: float = 2.0  # lookahead, m
    kappa: float = 10.0  # along-track gain, 1/s
    k: Optional[float] = None  # observer bandwidth, 1/s
    l: Optional[float] = None  # ALOS adaptation gain
    td_r: Optional[float] = None  # TD speed factor, rad/s^2
    td_h: Optional[float] = None  # TD filter factor, s
    beta_m: float = math.pi
    eps_den: float = DEFAULT_EPS_DEN

    def validate(self, law: Law) -> None:
        if not (self.delta > 0 and self.kappa > 0):
            raise ValueError("delta and kappa must be positive")
        required = {
            Law.LOS: (),
            Law.ALOS: ("l",),
            Law.ELOS: ("k",),
            Law.IELOS: ("k", "td_r", "td_h"),
        }[law]
        for name in required:
            value = getattr(self, name)
            if value is None or not value > 0:
                raise ValueError(f"{law.value} requires a positive '{name}', got {value!r}")
        if not self.beta_m > 0:
            raise ValueError("beta_m must be positive")


@dataclass(frozen=True)
class GuidanceOutput:
    psi_d: float
    beta_used: float
    beta_hat: float = NAN
    beta_star: float = NAN
    beta_sat: float = NAN
    clamped: bool = False


def _compensated(alpha_k: float, y_e: float, delta: float, beta: float) -> float:
    return wrap_angle(alpha_k + math.atan(-y_e / delta - beta))


def los_heading(alpha_k: float, y_e: float, delta: float) -> GuidanceOutput:
    if not delta > 0:
        raise ValueError("lookahead distance must be positive")
    return GuidanceOutput(wrap_angle(alpha_k + math.atan(-y_e / delta)), 0.0)


def alos_step(alpha_k: float, y_e: float, delta: float, beta_hat: float, U: float,
              l: float, dt: float) -> Tuple[GuidanceOutput, float]:
    """Heading from the current adaptive estimate, plus the Euler-updated estimate."""
    if not (delta > 0 and l > 0):
        raise ValueError("delta and l must be positive")
    out = GuidanceOutput(_compensated(alpha_k, y_e, delta, beta_hat), beta_hat, beta_hat=beta_hat)
    rate = l * y_e * U * delta / math.sqrt(delta * delta + (y_e + delta * beta_hat) ** 2)
    return out, beta_hat + dt * rate


def elos_heading(alpha_k: float, y_e: float, delta: float, beta_hat: float) -> GuidanceOutput:
    if not delta > 0:
        raise ValueError("lookahead distance must be positive")
    return GuidanceOutput(_compensated(alpha_k, y_e, delta, beta_hat), beta_hat, beta_hat=beta_hat)


def ielos_heading(alpha_k: float, y_e: float, delta: float, beta_sat: float,
                  beta_m: float = math.pi) -> GuidanceOutput:
    if not delta > 0:
        raise ValueError("lookahead distance must be positive")
    if abs(beta_sat) > beta_m:
        raise ValueError(f"|beta_sat| = {abs(beta_sat)} exceeds the bound {beta_m}; saturate first")
    return GuidanceOutput(_compensated(alpha_k, y_e, delta, beta_sat), beta_sat, beta_sat=beta_sat)


@dataclass(frozen=True)
class Measurement:
    alpha_k: float
    alpha_k_dot: float
    x_e: float
    y_e: float
    U: float


@dataclass(frozen=True)
class LawState:
    """Internal state of one law between steps."""

    beta_hat: float = 0.0
    psi_d_prev: float = 0.0
    eso: Optional[EsoState] = None
    td: Optional[TdState] = None


def initial_state(law: Law, params: GuidanceParams, alpha_k0: float, y_e0: float) -> LawState:
    params.validate(law)
    psi0 = los_heading(alpha_k0, y_e0, params.delta).psi_d
    eso = EsoState.initial(params.k, y_e0) if law in (Law.ELOS, Law.IELOS) else None
    td = TdState(0.0, 0.0, params.td_r, params.td_h) if law is Law.IELOS else None
    return LawState(beta_hat=0.0, psi_d_prev=psi0, eso=eso, td=td)


def guidance_step(law: Law, params: GuidanceParams, state: LawState, m: Measurement,
                  dt: float) -> Tuple[GuidanceOutput, LawState]:
    if law is Law.LOS:
        out = los_heading(m.alpha_k, m.y_e, params.delta)
        return out, replace(state, psi_d_prev=out.psi_d)

    if law is Law.ALOS:
        out, beta_next = alos_step(m.alpha_k, m.y_e, params.delta, state.beta_hat, m.U, params.l, dt)
        # clamp is hygiene only; the adaptive law itself is unbounded
        clamped = min(max(beta_next, -math.pi), math.pi)
        if clamped != beta_next:
            out = replace(out, clamped=True)
        return out, replace(state, beta_hat=clamped, psi_d_prev=out.psi_d)

    # Observer-based laws. The estimate is refreshed against the current
    # measurement, and the division uses the previous heading command since
    # the current one depends on the result.
    eso = state.eso
    g_hat = eso.estimate(m.y_e)
    extracted = extract_sideslip(g_hat, m.U, state.psi_d_prev, m.alpha_k, params.eps_den)
    beta_hat = state.beta_hat if extracted is None else extracted

    td = state.td
    if law is Law.ELOS:
        out = elos_heading(m.alpha_k, m.y_e, params.delta, beta_hat)
    else:
        td = td_step(td, beta_hat, dt)
        beta_sat = saturate(td.v1, SaturationLimit(params.beta_m))
        out = ielos_heading(m.alpha_k, m.y_e, params.delta, beta_sat, params.beta_m)
        out = replace(out, beta_hat=beta_hat, beta_star=td.v1)

    eso = eso_step(replace(eso, g_hat=g_hat, beta_hat=beta_hat), m.y_e, m.x_e, m.U,
                   out.psi_d, m.alpha_k, m.alpha_k_dot, dt)
    eso = replace(eso, beta_hat=beta_hat)
    return out, LawState(beta_hat=beta_hat, psi_d_prev=out.psi_d, eso=eso, td=td)
