"""Reduced-order extended state observer for the lumped sideslip disturbance.

The observed quantity is ``g = U cos(psi - alpha_k) * beta``, the part of the
cross-track rate not explained by the commanded heading.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

DEFAULT_EPS_DEN = 0.05  # m/s


@dataclass(frozen=True)
class EsoState:
    p: float
    g_hat: float
    beta_hat: float
    k: float

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError(f"observer gain must be positive, got {self.k}")

    @classmethod
    def initial(cls, k: float, y_e0: float) -> "EsoState":
        # p(0) = -k*y_e(0) starts the estimate at g_hat = 0
        return cls(p=-k * y_e0, g_hat=0.0, beta_hat=0.0, k=k)

    def estimate(self, y_e: float) -> float:
        """Output equation ``p + k*y_e`` evaluated against a fresh measurement."""
        return self.p + self.k * y_e


def eso_step(obs: EsoState, y_e: float, x_e: float, U: float, psi_d: float,
             alpha_k: float, alpha_k_dot: float, dt: float) -> EsoState:
    """Advance the auxiliary state by one Euler step.

    ``g_hat`` of the result pairs the advanced ``p`` with the ``y_e`` passed in;
    call :meth:`EsoState.estimate` with the next measurement to refresh it.
    """
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    args = (obs.p, y_e, x_e, U, psi_d, alpha_k, alpha_k_dot)
    if not all(math.isfinite(a) for a in args):
        raise ValueError("non-finite observer input")
    k = obs.k
    known = U * math.sin(psi_d - alpha_k) - alpha_k_dot * x_e
    p = obs.p + dt * (-k * obs.p - k * k * y_e - k * known)
    return replace(obs, p=p, g_hat=p + k * y_e)


def extract_sideslip(g_hat: float, U: float, psi_d: float, alpha_k: float,
                     eps_den: float = DEFAULT_EPS_DEN) -> Optional[float]:
    """Divide out ``U cos(psi_d - alpha_k)``; ``None`` means hold the previous value."""
    if not eps_den > 0:
        raise ValueError("eps_den must be positive")
    den = U * math.cos(psi_d - alpha_k)
    if abs(den) < eps_den:
        return None
    return g_hat / den
