import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from swe_resonance.core import G, State, eigenvalues
from swe_resonance.errors import DegenerateJump, NonPositiveHeight, OutOfFan, WrongRegion
from swe_resonance.wavecurves import (Orientation, WaveFamily, curve_residual, phi2,
                                      rarefaction_fan_state, shock_speed, u_on_curve,
                                      zero_speed_state)

F, B = Orientation.FORWARD, Orientation.BACKWARD


def rh_residuals(A, Bs, s, g=G):
    mass = s * (Bs.h - A.h) - (Bs.q - A.q)
    mom = s * (Bs.q - A.q) - ((Bs.q * Bs.u + 0.5 * g * Bs.h ** 2) - (A.q * A.u + 0.5 * g * A.h ** 2))
    return mass, mom


def test_identity_residual():
    U0 = State(0.7, 1.3)
    for fam in (1, 2):
        for o in (F, B):
            assert curve_residual(fam, o, U0, U0) == 0.0
            assert u_on_curve(fam, o, U0, U0.h) == U0.u


def test_shock_from_rest():
    U0 = State(1.0, 0.0)
    u = -math.sqrt(G / 2.0) * math.sqrt(0.5 + 1.0)
    assert u == pytest.approx(-2.7111, abs=1e-4)
    U = State(2.0, u)
    assert curve_residual(1, F, U, U0) == pytest.approx(0.0, abs=1e-15)
    s = shock_speed(U0, U)
    assert s == pytest.approx(2 * u, abs=1e-15) and s == pytest.approx(-5.4222, abs=1e-4)
    mass, mom = rh_residuals(U0, U, s)
    assert abs(mass) < 1e-13 and abs(mom) < 1e-13


def test_u_on_curve_fixture_one_forward():
    # 1-shock from the contact image in the first three-solution example
    U0 = State(0.21984063, 4.5487497)
    assert u_on_curve(WaveFamily.ONE, F, U0, 0.7964266) == pytest.approx(1.4737915, abs=1e-6)


def test_backward_two_rarefaction_keeps_invariant():
    UR = State(0.4, 2.2)
    h = 0.35252714
    u = u_on_curve(WaveFamily.TWO, B, UR, h)
    assert u - 2 * math.sqrt(G * h) == pytest.approx(UR.u - 2 * math.sqrt(G * UR.h), abs=1e-14)
    assert u == pytest.approx(1.9576022, abs=1e-6)


def test_phi2_zero_on_backward_curve():
    # contact image of the third solution of the three-solution example, checked
    # against the right state it was computed with
    UR = State(0.75904946, 1.0 / 0.75904946)
    assert phi2(State(0.72279573, 1.1855776), UR) == pytest.approx(0.0, abs=2e-7)


def test_nonpositive_height_rejected():
    with pytest.raises(NonPositiveHeight):
        u_on_curve(1, F, State(1.0, 0.0), 0.0)
    with pytest.raises(NonPositiveHeight):
        curve_residual(2, B, State(0.0, 0.0), State(1.0, 0.0))


def test_degenerate_jump():
    with pytest.raises(DegenerateJump):
        shock_speed(State(1.0, 1.0), State(1.0, 2.0))


def test_monotonicity_on_grid():
    U0 = State(0.8, 0.5)
    hs = np.linspace(0.01, 5.0, 2001)
    for o in (F, B):
        u1 = np.array([u_on_curve(1, o, U0, h) for h in hs])
        u2 = np.array([u_on_curve(2, o, U0, h) for h in hs])
        assert np.all(np.diff(u1) < 0.0)
        # the 2-curves increase with h in both orientations
        assert np.all(np.diff(u2) > 0.0)


def test_forward_one_curve_convex():
    U0 = State(0.8, 0.5)
    hs = np.linspace(0.05, 5.0, 1001)
    u = np.array([u_on_curve(1, F, U0, h) for h in hs])
    assert np.all(np.diff(u, 2) > -1e-12)


def test_lax_ordering_of_1_shocks():
    U0 = State(0.8, 0.5)
    lam = eigenvalues(U0)[0]
    prev = -math.inf
    for h in np.linspace(2.0, 0.8 + 1e-6, 50):
        s = shock_speed(U0, State(h, u_on_curve(1, F, U0, h)))
        assert s < lam and s > prev
        prev = s
    assert lam - prev < 1e-5


def test_zero_speed_state():
    U = State(0.5, 4.0)
    Us = zero_speed_state(U)
    assert Us.h == pytest.approx(1.0520, abs=1e-4) and Us.u == pytest.approx(1.9011, abs=1e-4)
    assert abs(shock_speed(U, Us)) < 1e-13
    assert curve_residual(1, F, Us, U) == pytest.approx(0.0, abs=1e-13)
    C = State(1.0, math.sqrt(G))
    assert zero_speed_state(C).h == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(WrongRegion):
        zero_speed_state(State(1.0, 1.0))


def test_location_of_standing_shock():
    U = State(0.5, 4.0)
    hs = zero_speed_state(U).h
    for h in np.linspace(0.51, 2.0, 60):
        V = State(h, u_on_curve(1, F, U, h))
        assert (shock_speed(U, V) > 0.0) == (h < hs)


def test_fan_state_example():
    s = rarefaction_fan_state(1, State(1.0, 0.0), -1.0)
    c = (2 * math.sqrt(G) + 1.0) / 3.0
    assert math.sqrt(G * s.h) == pytest.approx(c, abs=1e-14)
    assert s.h == pytest.approx(0.5977, abs=1e-4) and s.u == pytest.approx(1.4203, abs=1e-4)
    assert s.u + 2 * math.sqrt(G * s.h) == pytest.approx(2 * math.sqrt(G), abs=1e-13)
    assert eigenvalues(s)[0] == pytest.approx(-1.0, abs=1e-14)


def test_fan_head_and_dry_edge():
    U0 = State(1.0, 0.5)
    head = eigenvalues(U0)[0]
    s = rarefaction_fan_state(1, U0, head)
    assert s.h == pytest.approx(U0.h, abs=1e-14) and s.u == pytest.approx(U0.u, abs=1e-14)
    edge = U0.u + 2 * math.sqrt(G * U0.h)
    assert rarefaction_fan_state(1, U0, edge).h == 0.0
    with pytest.raises(OutOfFan):
        rarefaction_fan_state(1, U0, edge + 1.0)
    with pytest.raises(OutOfFan):
        rarefaction_fan_state(1, U0, head - 1.0, other=State(0.5, u_on_curve(1, F, U0, 0.5)))


hs = st.floats(0.01, 10.0)
us = st.floats(-10.0, 10.0)


@given(hs, us, hs, st.sampled_from([1, 2]), st.sampled_from([F, B]))
def test_points_on_curve_have_zero_residual(h0, u0, h, fam, o):
    U0 = State(h0, u0)
    U = State(h, u_on_curve(fam, o, U0, h))
    assert abs(curve_residual(fam, o, U, U0)) <= 1e-12 * max(1.0, abs(U.u), abs(u0))


@given(hs, us, hs, st.sampled_from([1, 2]))
def test_shock_branch_satisfies_both_jump_relations(h0, u0, h, fam):
    U0 = State(h0, u0)
    o = F if (fam == 1) == (h > h0) else B
    if h == h0:
        return
    U = State(h, u_on_curve(fam, o, U0, h))
    s = shock_speed(U0, U)
    mass, mom = rh_residuals(U0, U, s)
    scale = max(1.0, abs(s) * U.h, U.h ** 2 * G, abs(U.q * U.u), abs(U0.q * U0.u), G * h0 * h0)
    assert abs(mass) <= 1e-12 * scale and abs(mom) <= 1e-12 * scale


@given(hs, us, st.floats(0.0, 1.0), st.sampled_from([1, 2]))
def test_fan_invariant_and_characteristic(h0, u0, t, fam):
    U0 = State(h0, u0)
    c0 = math.sqrt(G * h0)
    lam0 = u0 - c0 if fam == 1 else u0 + c0
    edge = u0 + 2 * c0 if fam == 1 else u0 - 2 * c0
    xi = lam0 + t * (edge - lam0) * 0.999
    s = rarefaction_fan_state(fam, U0, xi)
    c = math.sqrt(G * s.h)
    inv = s.u + 2 * c if fam == 1 else s.u - 2 * c
    inv0 = u0 + 2 * c0 if fam == 1 else u0 - 2 * c0
    assert abs(inv - inv0) <= 1e-12 * max(1.0, abs(inv0), c0)
    lam = s.u - c if fam == 1 else s.u + c
    assert abs(lam - xi) <= 1e-12 * max(1.0, abs(xi), c0)
