"""Built-in scenarios: the six circular-path cases and the pool parameter set."""
from __future__ import annotations

from typing import Dict

from .guidance import GuidanceParams, Law
from .path import ParametricPath
from .sim import InitialCondition, Scenario
from .vehicle import Environment

CURRENT = Environment(0.1, 0.1)
# vehicle at the circle centre facing the path point at w = 0
CIRCLE_START = InitialCondition(x=0.0, y=0.0, psi=0.0, w0=0.0)


def _case(name: str, law: Law, params: GuidanceParams) -> Scenario:
    return Scenario(
        name=name,
        law=law,
        path=ParametricPath.circle(10.0),
        params=params,
        env=CURRENT,
        initial=CIRCLE_START,
        desired_speed=0.5,
        duration=100.0,
        dt=0.01,
    )


def builtin_presets() -> Dict[str, Scenario]:
    presets = {
        "case1": _case("case1", Law.LOS, GuidanceParams(delta=2.0, kappa=10.0)),
        "case2": _case("case2", Law.ALOS, GuidanceParams(delta=2.0, kappa=10.0, l=0.005)),
        "case3": _case("case3", Law.ELOS, GuidanceParams(delta=2.0, kappa=10.0, k=10.0)),
        "case4": _case("case4", Law.ELOS, GuidanceParams(delta=2.0, kappa=0.3, k=2.0)),
        "case5": _case("case5", Law.IELOS,
                       GuidanceParams(delta=2.0, kappa=10.0, k=10.0, td_r=30.0, td_h=0.05)),
        "case6": _case("case6", Law.IELOS,
                       GuidanceParams(delta=2.0, kappa=10.0, k=2.0, td_r=30.0, td_h=0.05)),
    }
    # pool parameter set: every law with the same lookahead and along-track gain
    pool_params = {
        Law.LOS: GuidanceParams(delta=10.0, kappa=0.9),
        Law.ALOS: GuidanceParams(delta=10.0, kappa=0.9, l=0.2),
        Law.ELOS: GuidanceParams(delta=10.0, kappa=0.9, k=0.1),
        Law.IELOS: GuidanceParams(delta=10.0, kappa=0.9, k=0.1, td_r=30.0, td_h=0.1),
    }
    for law, params in pool_params.items():
        name = "pool" if law is Law.IELOS else f"pool_{law.value.lower()}"
        presets[name] = Scenario(
            name=name,
            law=law,
            path=ParametricPath.circle(10.0),
            params=params,
            env=CURRENT,
            initial=CIRCLE_START,
            desired_speed=0.3,
            duration=200.0,
            dt=0.01,
        )
    return presets
