import math

import pytest
from hypothesis import given, strategies as st

from ielos.guidance import (
    GuidanceParams,
    Law,
    LawState,
    Measurement,
    alos_step,
    elos_heading,
    guidance_step,
    ielos_heading,
    initial_state,
    los_heading,
)
from ielos.path import wrap_angle

angle = st.floats(-math.pi, math.pi)
offset = st.floats(-1e3, 1e3)
lookahead = st.floats(0.1, 50.0)
beta = st.floats(-3.0, 3.0)


class TestLos:
    def test_on_path(self):
        assert los_heading(0.7, 0.0, 2.0).psi_d == 0.7

    def test_one_lookahead(self):
        assert los_heading(0.7, 2.0, 2.0).psi_d == pytest.approx(0.7 - math.pi / 4, abs=1e-12)

    def test_asymptote(self):
        assert los_heading(0.7, 2e6, 2.0).psi_d == pytest.approx(0.7 - math.pi / 2, abs=1e-5)


class TestAlos:
    def test_equilibrium(self):
        out, b = alos_step(0.4, 0.0, 2.0, 0.0, 0.5, 0.005, 0.01)
        assert out.psi_d == 0.4 and b == 0.0

    def test_increment(self):
        _, b = alos_step(0.0, 2.0, 2.0, 0.0, 0.5, 0.005, 1.0)
        assert b == pytest.approx(0.005 * (2 * 0.5 * 2) / math.sqrt(8), abs=1e-15)
        assert b == pytest.approx(0.0035355, abs=1e-7)

    @given(beta)
    def test_frozen_on_path(self, b0):
        _, b = alos_step(0.0, 0.0, 2.0, b0, 0.5, 0.005, 0.01)
        assert b == b0

    @given(offset, beta, lookahead, st.floats(0.01, 3.0))
    def test_increment_sign(self, y_e, b0, delta, U):
        _, b = alos_step(0.0, y_e, delta, b0, U, 0.01, 0.01)
        assert math.copysign(1, b - b0) == math.copysign(1, y_e) or b == b0


class TestElosIelos:
    def test_zero_compensation_is_los(self):
        assert elos_heading(0.3, 1.7, 2.0, 0.0).psi_d == los_heading(0.3, 1.7, 2.0).psi_d

    def test_elos_value(self):
        assert elos_heading(0.3, 0.0, 2.0, 0.1).psi_d == pytest.approx(0.3 + math.atan(-0.1), abs=1e-12)

    def test_elos_cancellation(self):
        assert elos_heading(0.3, -2.0 * 0.25, 2.0, 0.25).psi_d == pytest.approx(0.3, abs=1e-12)

    def test_ielos_values(self):
        assert ielos_heading(0.3, 0.0, 2.0, 0.0).psi_d == 0.3
        assert ielos_heading(0.3, 2.0, 2.0, 0.5).psi_d == pytest.approx(0.3 + math.atan(-1.5), abs=1e-12)
        assert ielos_heading(0.3, 0.0, 2.0, math.pi).psi_d == pytest.approx(0.3 - 1.2626, abs=1e-4)

    def test_ielos_requires_saturated_input(self):
        with pytest.raises(ValueError):
            ielos_heading(0.0, 0.0, 2.0, 3.5)


@given(angle, offset, lookahead, beta)
def test_heading_within_half_plane(alpha, y_e, delta, b):
    outs = [
        los_heading(alpha, y_e, delta),
        alos_step(alpha, y_e, delta, b, 0.5, 0.01, 0.01)[0],
        elos_heading(alpha, y_e, delta, b),
        ielos_heading(alpha, y_e, delta, b),
    ]
    for out in outs:
        assert abs(wrap_angle(out.psi_d - alpha)) < math.pi / 2


def test_params_validation():
    with pytest.raises(ValueError):
        GuidanceParams(delta=2.0).validate(Law.ELOS)
    with pytest.raises(ValueError):
        GuidanceParams(delta=0.0).validate(Law.LOS)
    GuidanceParams(k=2.0, td_r=30.0, td_h=0.05).validate(Law.IELOS)


def test_uniform_step_interface():
    params = GuidanceParams(delta=2.0, kappa=10.0, k=10.0, l=0.005, td_r=30.0, td_h=0.05)
    m = Measurement(alpha_k=0.5, alpha_k_dot=0.05, x_e=0.1, y_e=1.0, U=0.5)
    for law in Law:
        state = initial_state(law, params, 0.5, 1.0)
        out, new = guidance_step(law, params, state, m, 0.01)
        assert isinstance(new, LawState)
        assert new.psi_d_prev == out.psi_d
        assert abs(wrap_angle(out.psi_d - 0.5)) < math.pi / 2
    los_out, _ = guidance_step(Law.LOS, params, initial_state(Law.LOS, params, 0.5, 1.0), m, 0.01)
    assert los_out.beta_used == 0.0


def test_alos_clamp_is_reported():
    params = GuidanceParams(l=1e6)
    m = Measurement(0.0, 0.0, 0.0, 5.0, 0.5)
    out, state = guidance_step(Law.ALOS, params, initial_state(Law.ALOS, params, 0.0, 5.0), m, 0.01)
    assert out.clamped and state.beta_hat == math.pi
