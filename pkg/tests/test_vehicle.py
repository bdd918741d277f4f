import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ielos.path import wrap_angle
from ielos.vehicle import (
    AutopilotGains,
    Environment,
    VehicleState,
    autopilot,
    body_velocities,
    step,
)

CALM = Environment()


@pytest.mark.parametrize(
    "state, env, expected",
    [
        (VehicleState(0, 0, 0.0, 0, 0.5), CALM, (0.5, 0.0, 0.5, 0.0)),
        (VehicleState(0, 0, 0.0, 0, 0.0), Environment(1.0, 0.0), (1.0, 0.0, 1.0, 0.0)),
        (VehicleState(0, 0, 0.0, 0, 0.0), Environment(0.0, 1.0), (0.0, 1.0, 1.0, math.pi / 2)),
    ],
)
def test_body_velocities(state, env, expected):
    k = body_velocities(state, env)
    assert (k.u, k.v, k.U, k.beta) == pytest.approx(expected, abs=1e-12)


def test_autopilot_on_target():
    assert autopilot(VehicleState(0, 0, 0.3, 0.0), 0.3, AutopilotGains()) == (0.0, 0.0)


def test_autopilot_quarter_turn():
    r_cmd, u_psi = autopilot(VehicleState(0, 0, 0.0, 0.0), math.pi / 2, AutopilotGains(1.0, 0.5, 1.0))
    assert (r_cmd, u_psi) == pytest.approx((math.pi / 2, math.pi / 2), abs=1e-12)


def test_autopilot_wraps_error():
    r_cmd, _ = autopilot(VehicleState(0, 0, 0.0, 0.0), -3 * math.pi / 2, AutopilotGains(1.0, 0.5, 1.0))
    assert r_cmd == pytest.approx(math.pi / 2, abs=1e-12)


def test_step_fixed_point():
    s = VehicleState(1.0, 2.0, 0.4, 0.0, 0.0)
    assert step(s, 0.0, CALM, 0.37) == s


def test_step_surge():
    s = step(VehicleState(0, 0, 0.0, 0.0, 1.0), 0.0, CALM, 0.01)
    assert (s.x, s.y, s.psi, s.r) == pytest.approx((0.01, 0.0, 0.0, 0.0), abs=1e-15)


def test_step_yaw():
    s = step(VehicleState(0, 0, 0.0, 0.1, 0.0), 0.1, CALM, 0.01)
    assert s.psi == pytest.approx(0.001, abs=1e-15)
    assert s.r == 0.1


def test_step_rejects_bad_input():
    with pytest.raises(ValueError):
        step(VehicleState(0, 0, 0, 0, 1), float("nan"), CALM, 0.01)
    with pytest.raises(ValueError):
        step(VehicleState(0, 0, 0, 0, 1), 0.0, CALM, 0.0)


def test_negative_surge_rejected():
    with pytest.raises(ValueError):
        VehicleState(0, 0, 0, 0, -0.1)


@given(st.floats(-math.pi, math.pi), st.floats(0.0, 2.0))
def test_no_current_no_sideslip(psi, u_rel):
    k = body_velocities(VehicleState(0, 0, psi, 0, u_rel), CALM)
    assert k.beta == 0.0
    assert k.U == pytest.approx(u_rel, abs=1e-15)


def test_heading_independent_of_current():
    rng = np.random.default_rng(0)
    cmds = rng.uniform(-0.5, 0.5, 500)
    a = b = VehicleState(0, 0, 0.2, 0.0, 0.5)
    gains = AutopilotGains()
    for c in cmds:
        a = step(a, c, CALM, 0.01, gains)
        b = step(b, c, Environment(0.3, -0.2), 0.01, gains)
        assert (a.psi, a.r) == (b.psi, b.r)


@pytest.mark.parametrize("gains", [AutopilotGains(), AutopilotGains(1.0, 0.5, 50.0), AutopilotGains(2.0, 0.1, 1.0)])
def test_inner_loop_settles(gains):
    s = VehicleState(0, 0, 0.0, 0.0, 0.5)
    psi_d = 1.2
    dt = 0.01
    for _ in range(int(round(10.0 / gains.k_psi / dt))):
        r_cmd, _ = autopilot(s, psi_d, gains)
        s = step(s, r_cmd, CALM, dt, gains)
    assert abs(wrap_angle(psi_d - s.psi)) < 1e-3


def test_euler_first_order():
    env = Environment(0.1, 0.1)

    def final_position(dt):
        s = VehicleState(0, 0, 0.0, 0.0, 0.5)
        for _ in range(int(round(10.0 / dt))):
            s = step(s, 0.3, env, dt)
        return np.array([s.x, s.y])

    ref = final_position(0.0001)
    e1 = np.linalg.norm(final_position(0.01) - ref)
    e2 = np.linalg.norm(final_position(0.005) - ref)
    assert 1.5 <= e1 / e2 <= 2.5
