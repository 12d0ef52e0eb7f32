import math

import pytest

from swe_resonance.contact import h_min, h_star, phi_cubic
from swe_resonance.core import State
from swe_resonance.errors import BadBracket
from swe_resonance.numerics import RootPolicy, bisect, newton_safeguarded, regula_falsi


def test_regula_falsi_linear():
    assert regula_falsi(lambda x: x, -1.0, 1.0) == 0.0


def test_regula_falsi_contact_root():
    U0 = State(1.0, 5.0, 1.0)
    f = lambda h: phi_cubic(U0, 1.2, h)  # noqa: E731
    root = regula_falsi(f, 0.0, h_min(U0), RootPolicy(1e-13 * 25.0))
    assert root == pytest.approx(1.223655890827479, abs=1e-12)


def test_regula_falsi_fig2_data():
    # phi for U0 = (1,1,1), a = 1.2 has two zeros inside (0, 1)
    U0 = State(1.0, 1.0, 1.0)
    f = lambda h: phi_cubic(U0, 1.2, h)  # noqa: E731
    r = regula_falsi(f, 0.0, h_min(U0))
    assert 0.0 < r < 1.0 and abs(f(r)) < 1e-13


def test_regula_falsi_bad_bracket():
    with pytest.raises(BadBracket):
        regula_falsi(lambda x: x * x + 1.0, -1.0, 1.0)


def test_newton_square_root():
    assert newton_safeguarded(lambda x: x * x - 1.0, lambda x: 2.0 * x, 2.0) == pytest.approx(1.0, abs=1e-14)


def test_newton_larger_contact_root():
    U0 = State(1.0, 1.0, 1.0)
    f = lambda h: phi_cubic(U0, 1.2, h)  # noqa: E731
    df = lambda h: 6 * 9.8 * h * h + 2 * (2 * 9.8 * (1.2 - 2.0) - 1.0) * h  # noqa: E731
    hs = h_star(U0, 1.2)
    r = newton_safeguarded(f, df, hs + 1.0, bracket=(hs, hs + 1.0))
    assert hs < r < 1.0 and abs(f(r)) < 1e-12


def test_newton_falls_back_inside_bracket():
    # Newton from the flat end of atan overshoots; the bracket keeps it safe
    r = newton_safeguarded(math.atan, lambda x: 1.0 / (1.0 + x * x), 5.0, bracket=(-1.0, 6.0))
    assert abs(r) < 1e-12


def test_bisect_linear_and_sign_only():
    assert bisect(lambda x: x - 0.5, 0.0, 1.0) == pytest.approx(0.5, abs=1e-13)
    sign_only = lambda x: 1.0 if x > 0.3 else -1.0  # noqa: E731
    assert bisect(sign_only, 0.0, 1.0) == pytest.approx(0.3, abs=1e-13)


def test_bisect_bad_bracket():
    with pytest.raises(BadBracket):
        bisect(lambda x: 1.0, 0.0, 1.0)
