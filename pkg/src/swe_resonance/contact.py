"""Stationary contacts: zero-speed jumps across which the bottom level changes.

Across a contact the discharge ``h u`` and the Bernoulli head
``u^2 / 2 + g (h + a)`` are continuous.  Eliminating ``u`` leaves the cubic

    phi(h) = 2 g h^3 + (2 g (a - a0 - h0) - u0^2) h^2 + h0^2 u0^2

for the height on the far side.  It has two positive roots ``h1 <= h2`` as
long as ``a <= a_max(U0)``.  The smaller root is supercritical and the larger
one is subcritical; admissibility keeps the contact on the side of the
resonance curve where ``U0`` lives.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .core import G, PhaseRegion, State, classify_region
from .errors import NonPositiveHeight
from .numerics import RootPolicy, newton_safeguarded, regula_falsi


class ContactSide(enum.Enum):
    SUPERCRITICAL = "h1"   # smaller root, G1 or G3
    SUBCRITICAL = "h2"     # larger root, G2


@dataclass(frozen=True)
class ContactRoots:
    h1: float
    h2: float
    h_star: float
    h_min: float


def phi_cubic(U0: State, a: float, h: float, g: float = G) -> float:
    h0, u0, a0 = U0.h, U0.u, U0.a
    return 2.0 * g * h ** 3 + (2.0 * g * (a - a0 - h0) - u0 * u0) * h * h + h0 * h0 * u0 * u0


def phi_cubic_prime(U0: State, a: float, h: float, g: float = G) -> float:
    return 6.0 * g * h * h + 2.0 * (2.0 * g * (a - U0.a - U0.h) - U0.u * U0.u) * h


def h_star(U0: State, a: float, g: float = G) -> float:
    """Positive critical point of ``phi``."""
    return (U0.u * U0.u + 2.0 * g * (U0.a + U0.h - a)) / (3.0 * g)


def h_min(U0: State, g: float = G) -> float:
    """Critical depth for the discharge of ``U0``; the contact curve meets C there."""
    return (U0.h * U0.h * U0.u * U0.u / g) ** (1.0 / 3.0)


def a_max(U0: State, g: float = G) -> float:
    """Highest bottom level reachable from ``U0`` by a stationary contact."""
    if U0.h <= 0.0:
        raise NonPositiveHeight("a_max needs a wet state")
    gh3 = (g * U0.h) ** (1.0 / 3.0)
    u23 = abs(U0.u) ** (2.0 / 3.0)
    return U0.a + (gh3 - u23) ** 2 * (2.0 * gh3 + u23) / (2.0 * g)


def _policy(U0: State) -> RootPolicy:
    return RootPolicy(residual_tol=1e-13 * max(1.0, (U0.h * U0.u) ** 2), step_tol=1e-14, max_iter=200)


def contact_roots(U0: State, a: float, g: float = G) -> Optional[ContactRoots]:
    """Both roots of ``phi``, or ``None`` when ``a > a_max(U0)``.

    The supercritical root comes from regula falsi on ``[0, h_min]``; the
    subcritical one from Newton started beyond ``h_*`` where ``phi`` is
    increasing and convex.
    """
    if U0.h <= 0.0:
        raise NonPositiveHeight("stationary contacts need a wet base state")
    amax = a_max(U0, g)
    if a > amax + 1e-14 * max(1.0, abs(amax)):
        return None
    hs = h_star(U0, a, g)
    if U0.u == 0.0:
        # phi = 2 g h^2 (h - (h0 + a0 - a)): dry root plus the lake-at-rest root
        h2 = U0.h + U0.a - a
        if h2 <= 0.0:
            return None
        return ContactRoots(0.0, h2, max(hs, 0.0), 0.0)
    hm = h_min(U0, g)
    policy = _policy(U0)
    phi = lambda h: phi_cubic(U0, a, h, g)  # noqa: E731
    fm = phi(hm)
    if fm >= 0.0:
        # tangency: a == a_max up to rounding, double root at the critical depth
        if fm <= 1e-12 * max(1.0, (U0.h * U0.u) ** 2) or a >= amax:
            return ContactRoots(hm, hm, hs, hm)
        # rounding can put h_min marginally past h_*; retry on [0, h_*]
        if phi(hs) >= 0.0:
            return ContactRoots(hm, hm, hs, hm)
        h1 = regula_falsi(phi, 0.0, hs, policy)
        lo2 = hs
    else:
        h1 = regula_falsi(phi, 0.0, hm, policy)
        lo2 = max(hs, hm)
    h1 = _polish(phi, lambda h: phi_cubic_prime(U0, a, h, g), h1)
    if phi(lo2) >= 0.0:
        # tangency blurred by rounding: phi(h_min) < 0 <= phi(h_*)
        return ContactRoots(h1, lo2, hs, hm)
    hi2 = lo2 + 1.0
    while phi(hi2) <= 0.0:
        hi2 = 2.0 * hi2
    h2 = newton_safeguarded(phi, lambda h: phi_cubic_prime(U0, a, h, g), hi2,
                            bracket=(lo2, hi2), policy=policy)
    return ContactRoots(h1, h2, hs, hm)


def _polish(f, fprime, x, steps=3):
    """A few Newton steps that are kept only while they reduce ``|f|``."""
    fx = abs(f(x))
    for _ in range(steps):
        d = fprime(x)
        if d == 0.0 or fx == 0.0:
            break
        y = x - f(x) / d
        fy = abs(f(y))
        if not fy < fx:
            break
        x, fx = y, fy
    return x


def default_side(U0: State, g: float = G) -> ContactSide:
    """Root selected by the monotonicity criterion for ``U0``.

    On C+ and C- both roots stay in the closure of a strictly hyperbolic
    region; the supercritical one is returned there, matching the treatment
    of C+ as part of the supercritical regime.
    """
    region = classify_region(U0, g)
    if region in (PhaseRegion.G2_PLUS, PhaseRegion.G2_MINUS):
        return ContactSide.SUBCRITICAL
    return ContactSide.SUPERCRITICAL


def admissible_contact(U0: State, a: float, g: float = G,
                       side: Optional[ContactSide] = None) -> Optional[State]:
    """State on bottom level ``a`` reached from ``U0`` by an admissible contact.

    Returns ``None`` when no contact exists (``a > a_max(U0)``) and ``U0``
    itself when ``a == U0.a``.
    """
    if a == U0.a and (side is None or side is default_side(U0, g)):
        return U0
    roots = contact_roots(U0, a, g)
    if roots is None:
        return None
    side = default_side(U0, g) if side is None else ContactSide(side)
    h = roots.h1 if side is ContactSide.SUPERCRITICAL else roots.h2
    if h <= 0.0:
        return None
    return State(h, U0.h * U0.u / h, a)


def contact_residuals(U0: State, U: State, g: float = G) -> tuple[float, float]:
    """Jumps in discharge and Bernoulli head; both vanish across a contact."""
    dq = U.h * U.u - U0.h * U0.u
    dE = 0.5 * (U.u * U.u - U0.u * U0.u) + g * (U.h + U.a - U0.h - U0.a)
    return dq, dE
