"""Shock and rarefaction curves of the two genuinely nonlinear families.

Across these waves the bottom level is constant, so everything here works in
the ``(h, u)`` projection.  Family 1 curves are decreasing in ``h``, family 2
curves are increasing, for both orientations.
"""
from __future__ import annotations

import enum
import math
from typing import Optional

from .core import G, State
from .errors import DegenerateJump, NonPositiveHeight, OutOfFan, WrongRegion


class WaveFamily(enum.IntEnum):
    ONE = 1
    TWO = 2
    THREE = 3


class Orientation(enum.Enum):
    FORWARD = "forward"    # U0 is the left state
    BACKWARD = "backward"  # U0 is the right state


def _check_family(family):
    family = WaveFamily(family)
    if family is WaveFamily.THREE:
        raise ValueError("the stationary family has no shock/rarefaction curve")
    return family


def is_shock_branch(family, orientation, h: float, h0: float) -> bool:
    """True when ``h`` lies on the Hugoniot (not the rarefaction) branch.

    At ``h == h0`` the rarefaction branch is used; both branches agree there
    to first order.
    """
    family = _check_family(family)
    orientation = Orientation(orientation)
    deeper = h > h0
    shallower = h < h0
    if family is WaveFamily.ONE:
        return deeper if orientation is Orientation.FORWARD else shallower
    return shallower if orientation is Orientation.FORWARD else deeper


def _branch_increment(shock: bool, h: float, h0: float, g: float) -> float:
    if shock:
        return (h - h0) * math.sqrt(0.5 * g * (1.0 / h + 1.0 / h0))
    return 2.0 * math.sqrt(g) * (math.sqrt(h) - math.sqrt(h0))


def _branch_slope(shock: bool, h: float, h0: float, g: float) -> float:
    if shock:
        s = 1.0 / h + 1.0 / h0
        return math.sqrt(0.5 * g) * (math.sqrt(s) - (h - h0) / (2.0 * h * h * math.sqrt(s)))
    return math.sqrt(g / h)


def u_on_curve_raw(family: int, forward: bool, h0: float, u0: float, h: float,
                   g: float = G) -> float:
    """Float-only core of :func:`u_on_curve` (no validation).

    ``h == 0`` is allowed and gives the dry end of the rarefaction branch.
    """
    if family == 1:
        shock = h > h0 if forward else h < h0
    else:
        shock = h < h0 if forward else h > h0
    if shock and h <= 0.0:
        return math.nan
    inc = _branch_increment(shock, h, h0, g)
    return u0 - inc if family == 1 else u0 + inc


def du_dh_raw(family: int, forward: bool, h0: float, h: float, g: float = G) -> float:
    if family == 1:
        shock = h > h0 if forward else h < h0
        return -_branch_slope(shock, h, h0, g)
    shock = h < h0 if forward else h > h0
    return _branch_slope(shock, h, h0, g)


def u_on_curve(family, orientation, U0: State, h: float, g: float = G) -> float:
    """Velocity of the state with height ``h`` on the wave curve through ``U0``."""
    family = _check_family(family)
    orientation = Orientation(orientation)
    if h <= 0.0 or U0.h <= 0.0:
        raise NonPositiveHeight(f"wave curves need positive heights (h={h!r}, h0={U0.h!r})")
    return u_on_curve_raw(int(family), orientation is Orientation.FORWARD, U0.h, U0.u, h, g)


def curve_residual(family, orientation, U: State, U0: State, g: float = G) -> float:
    """``Psi_i(U; U0)`` (forward) or ``Phi_i(U; U0)`` (backward).

    Zero exactly when ``U`` is on the curve; for family 2 the residual is
    positive when ``U`` lies above the curve in the ``(h, u)`` plane.
    """
    family = _check_family(family)
    orientation = Orientation(orientation)
    if U.h <= 0.0 or U0.h <= 0.0:
        raise NonPositiveHeight(f"wave curves need positive heights (h={U.h!r}, h0={U0.h!r})")
    shock = is_shock_branch(family, orientation, U.h, U0.h)
    inc = _branch_increment(shock, U.h, U0.h, g)
    if family is WaveFamily.ONE:
        return U.u - U0.u + inc
    return U.u - U0.u - inc


def phi2(U: State, UR: State, g: float = G) -> float:
    """Signed position of ``U`` relative to the backward 2-curve of ``UR``."""
    return U.u - u_on_curve_raw(2, False, UR.h, UR.u, U.h, g)


def shock_speed(U0: State, U: State, g: float = G) -> float:
    """Speed from the mass jump condition, ``[h u] / [h]``."""
    if U.h == U0.h:
        raise DegenerateJump(f"equal heights h={U.h!r} do not define a shock speed")
    return (U.h * U.u - U0.h * U0.u) / (U.h - U0.h)


def zero_speed_state(U: State, g: float = G, strict: bool = True) -> State:
    """Partner ``U#`` of ``U`` across a standing (zero-speed) shock.

    ``h# = (-h + sqrt(h^2 + 8 h u^2 / g)) / 2`` with the discharge preserved.
    With ``strict`` the input must be supercritical with ``u > 0``; otherwise
    any ``u > 0`` is accepted (the map is an involution, so a subcritical
    input returns its supercritical conjugate).
    """
    if U.h <= 0.0:
        raise NonPositiveHeight("zero-speed shock needs a wet state")
    if U.u <= 0.0 or (strict and U.u < math.sqrt(g * U.h) * (1.0 - 1e-9)):
        raise WrongRegion(f"{U} is not in the closure of G1")
    h, u = U.h, U.u
    hs = 0.5 * (-h + math.sqrt(h * h + 8.0 * h * u * u / g))
    return State(hs, u * h / hs, U.a)


def rarefaction_fan_state(family, U0: State, xi: float, g: float = G,
                          other: Optional[State] = None) -> State:
    """State inside a centred rarefaction fan at similarity speed ``xi``.

    ``U0`` is any wet state of the fan.  Family 1 keeps ``u + 2c`` fixed,
    family 2 keeps ``u - 2c`` fixed, and the returned state has
    ``lambda_family = xi``.  When ``other`` (the opposite end of the fan) is
    given, ``xi`` must lie between the two end speeds.
    """
    family = _check_family(family)
    c0 = math.sqrt(g * U0.h)
    if family is WaveFamily.ONE:
        c = (U0.u + 2.0 * c0 - xi) / 3.0
        lam0 = U0.u - c0
    else:
        c = (xi - U0.u + 2.0 * c0) / 3.0
        lam0 = U0.u + c0
    if other is not None:
        if other.h > 0.0:
            c1 = math.sqrt(g * other.h)
            lam1 = other.u - c1 if family is WaveFamily.ONE else other.u + c1
        else:
            lam1 = U0.u + 2.0 * c0 if family is WaveFamily.ONE else U0.u - 2.0 * c0
        lo, hi = min(lam0, lam1), max(lam0, lam1)
        slack = 1e-12 * max(1.0, abs(lo), abs(hi))
        if not lo - slack <= xi <= hi + slack:
            raise OutOfFan(f"xi={xi!r} outside fan [{lo!r}, {hi!r}]")
    if c < -1e-14 * max(1.0, c0):
        raise OutOfFan(f"xi={xi!r} lies beyond the dry edge of the fan")
    if c <= 0.0:
        return State(0.0, 0.0, U0.a)
    u = xi + c if family is WaveFamily.ONE else xi - c
    return State(c * c / g, u, U0.a)


def dry_edge_speed(family, U0: State, g: float = G) -> float:
    """Speed of the vacuum edge of a fan anchored at ``U0``."""
    family = _check_family(family)
    c0 = math.sqrt(g * U0.h)
    return U0.u + 2.0 * c0 if family is WaveFamily.ONE else U0.u - 2.0 * c0
