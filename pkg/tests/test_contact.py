import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from swe_resonance.contact import (ContactSide, a_max, admissible_contact, contact_residuals,
                                   contact_roots, h_min, h_star, phi_cubic)
from swe_resonance.core import G, PhaseRegion, State, classify_region

from gen import rng


def test_phi_at_zero():
    U0 = State(0.7, 2.0, 1.0)
    assert phi_cubic(U0, 1.3, 0.0) == pytest.approx(U0.h ** 2 * U0.u ** 2)


def test_fig2_two_zeros_in_unit_interval():
    r = contact_roots(State(1.0, 1.0, 1.0), 1.2)
    assert 0.0 < r.h1 < r.h2 < 1.0


def test_step_up_supercritical_root():
    U0 = State(1.0, 5.0, 1.0)
    r = contact_roots(U0, 1.2)
    assert r.h1 == pytest.approx(1.223655890827479, abs=1e-12)
    V = admissible_contact(U0, 1.2)
    assert V.u == pytest.approx(4.086116070277590, abs=1e-12)
    assert classify_region(V) is PhaseRegion.G1


def test_step_up_mpmath_reference():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 40
    f = lambda h: 2 * mp.mpf("9.8") * h ** 3 + (2 * mp.mpf("9.8") * (mp.mpf("1.2") - 2) - 25) * h ** 2 + 25  # noqa: E731
    ref = mp.findroot(f, mp.mpf("1.22"))
    h1 = contact_roots(State(1.0, 5.0, 1.0), 1.2).h1
    assert abs(h1 - float(ref)) < 1e-15


def test_supercritical_image_on_step_up():
    V = admissible_contact(State(0.2, 4.0, 1.0), 1.1)
    assert V.h == pytest.approx(0.21591647, abs=1e-8) and V.u == pytest.approx(3.7051366, abs=1e-7)


def test_subcritical_image_on_step_down():
    V = admissible_contact(State(1.8452179343603226, 0.6767246805, 1.2), 1.0)
    assert V.h == pytest.approx(2.0496463, abs=1e-7) and V.u == pytest.approx(0.60922927, abs=1e-7)
    assert classify_region(V) is PhaseRegion.G2_PLUS


def test_same_level_returns_base():
    U0 = State(0.5, 4.0, 1.0)
    assert admissible_contact(U0, 1.0) is U0


def test_a_max_values():
    assert a_max(State(0.5, 4.0, 1.0)) == pytest.approx(1.2037, abs=1e-4)
    for u in (math.sqrt(G * 0.8), -math.sqrt(G * 0.8)):
        assert a_max(State(0.8, u, 1.0)) == pytest.approx(1.0, abs=1e-14)
    assert a_max(State(1.0, 5.0, 1.0)) >= 1.2


def test_a_max_is_where_phi_min_changes_sign():
    U0 = State(0.5, 4.0, 1.0)
    am = a_max(U0)
    for da, sign in ((-1e-6, -1), (1e-6, 1)):
        a = am + da
        assert math.copysign(1.0, phi_cubic(U0, a, h_star(U0, a))) == sign


def test_no_contact_above_a_max():
    U0 = State(0.5, 4.0, 1.0)
    assert contact_roots(U0, a_max(U0) + 1e-6) is None
    assert admissible_contact(U0, a_max(U0) + 1e-6) is None


def test_double_root_at_a_max():
    U0 = State(0.5, 4.0, 1.0)
    r = contact_roots(U0, a_max(U0))
    assert r.h1 == pytest.approx(r.h2, rel=1e-6)
    assert r.h1 == pytest.approx(h_min(U0), rel=1e-6)
    assert h_min(U0) == pytest.approx(h_star(U0, a_max(U0)), rel=1e-12)


def test_still_water_degenerate():
    r = contact_roots(State(1.0, 0.0, 1.0), 1.2)
    assert r.h1 == 0.0 and r.h2 == pytest.approx(0.8)
    V = admissible_contact(State(1.0, 0.0, 1.0), 1.2)
    assert V.h == pytest.approx(0.8) and V.u == 0.0


wet = st.builds(State, st.floats(0.02, 5.0), st.floats(-8.0, 8.0).filter(lambda u: abs(u) > 1e-3),
                st.floats(0.5, 1.5))


@given(wet, st.floats(-1.0, 1.0))
def test_roots_ordering_and_jump_relations(U0, t):
    am = a_max(U0)
    a = U0.a - 1.0 + (am - U0.a + 1.0) * (0.5 + 0.5 * t)
    r = contact_roots(U0, a)
    assert r is not None
    assert r.h1 <= r.h_min * (1 + 1e-12) and r.h_min <= r.h_star * (1 + 1e-12) + 1e-15
    assert r.h_star <= r.h2 * (1 + 1e-12)
    for side in ContactSide:
        V = admissible_contact(U0, a, side=side)
        dq, dE = contact_residuals(U0, V)
        assert abs(dq) <= 1e-10 * max(1.0, abs(U0.q)) and abs(dE) <= 1e-10 * max(1.0, U0.u ** 2, G * U0.h)


@given(wet, st.floats(0.0, 1.0))
def test_region_preserved(U0, t):
    a = U0.a - 1.0 + (a_max(U0) - U0.a + 1.0) * t
    V = admissible_contact(U0, a)
    if V is None:
        return
    base = classify_region(U0)
    got = classify_region(V)
    assert got is base or got.is_resonant or base.is_resonant


@given(wet)
def test_a_max_not_below_level(U0):
    assert a_max(U0) >= U0.a


def _scan_roots(h0, u0, a0, a, n_grid=4096, refine=80):
    """Brute-force oracle: sign changes of phi on a uniform grid, then bisection.

    Vectorized over samples; returns (h1, h2, found) arrays.
    """
    E = h0 + u0 ** 2 / (2 * G) + np.maximum(a0 - a, 0.0) + 1.0
    t = np.linspace(0.0, 1.0, n_grid)[None, :]
    hh = t * E[:, None]
    c2 = (2 * G * (a - a0 - h0) - u0 ** 2)[:, None]
    k0 = (h0 ** 2 * u0 ** 2)[:, None]
    phi = 2 * G * hh ** 3 + c2 * hh ** 2 + k0
    neg = phi < 0.0
    first = np.argmax(neg, axis=1)
    last = n_grid - 1 - np.argmax(neg[:, ::-1], axis=1)
    found = neg.any(axis=1) & (last < n_grid - 1)
    rows = np.arange(len(h0))

    def bis(lo, hi, lo_sign):
        for _ in range(refine):
            mid = 0.5 * (lo + hi)
            fm = 2 * G * mid ** 3 + c2[:, 0] * mid ** 2 + k0[:, 0]
            same = np.sign(fm) == lo_sign
            lo = np.where(same, mid, lo)
            hi = np.where(same, hi, mid)
        return 0.5 * (lo + hi)

    h1 = bis(hh[rows, np.maximum(first - 1, 0)], hh[rows, first], 1.0)
    h2 = bis(hh[rows, last], hh[rows, np.minimum(last + 1, n_grid - 1)], -1.0)
    return h1, h2, found


def test_roots_match_sign_scan_oracle():
    r = rng(1)
    n = 10_000
    h0 = r.uniform(0.02, 4.0, n)
    u0 = r.uniform(-8.0, 8.0, n)
    u0 = np.where(np.abs(u0) < 1e-2, 0.5, u0)
    a0 = r.uniform(0.5, 1.5, n)
    amax = np.array([a_max(State(h0[i], u0[i], a0[i])) for i in range(n)])
    a = a0 - 1.0 + (amax - a0 + 1.0) * r.uniform(0.0, 0.98, n)
    o1, o2, found = np.zeros(n), np.zeros(n), np.zeros(n, bool)
    for s in range(0, n, 1000):
        sl = slice(s, s + 1000)
        o1[sl], o2[sl], found[sl] = _scan_roots(h0[sl], u0[sl], a0[sl], a[sl])
    assert found.mean() > 0.99
    worst = 0.0
    for i in np.nonzero(found)[0]:
        rr = contact_roots(State(h0[i], u0[i], a0[i]), a[i])
        worst = max(worst, abs(rr.h1 - o1[i]), abs(rr.h2 - o2[i]))
    assert worst <= 1e-6, worst
