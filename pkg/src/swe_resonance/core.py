"""States, characteristic speeds and phase regions of the shallow water system
with a bottom step.

The unknowns are the water height ``h``, the velocity ``u`` and the bottom
level ``a``.  Regarding ``a`` as an unknown with ``a_t = 0`` turns the balance
law into a 3x3 nonconservative system whose third field (speed zero) is the
stationary contact.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

G = 9.8


@dataclass(frozen=True)
class State:
    """Primitive state ``(h, u, a)``.

    A dry state (``h == 0``) always carries ``u == 0``.
    """

    h: float
    u: float
    a: float = 0.0

    def __post_init__(self):
        if self.h < 0.0:
            raise ValueError(f"negative water height {self.h!r}")
        if self.h == 0.0 and self.u != 0.0:
            object.__setattr__(self, "u", 0.0)

    @property
    def q(self) -> float:
        """Discharge ``h*u``."""
        return self.h * self.u

    @property
    def is_dry(self) -> bool:
        return self.h == 0.0

    def with_level(self, a: float) -> State:
        return State(self.h, self.u, a)

    def reflected(self) -> State:
        """Image under ``x -> -x`` (velocity changes sign)."""
        return State(self.h, -self.u, self.a)

    def as_tuple(self):
        return (self.h, self.u, self.a)


class PhaseRegion(enum.Enum):
    G1 = "G1"
    G2_PLUS = "G2+"
    G2_MINUS = "G2-"
    G3 = "G3"
    C_PLUS = "C+"
    C_MINUS = "C-"

    def reflected(self) -> PhaseRegion:
        return _REFLECT[self]

    @property
    def is_resonant(self) -> bool:
        return self in (PhaseRegion.C_PLUS, PhaseRegion.C_MINUS)


_REFLECT = {
    PhaseRegion.G1: PhaseRegion.G3,
    PhaseRegion.G3: PhaseRegion.G1,
    PhaseRegion.G2_PLUS: PhaseRegion.G2_MINUS,
    PhaseRegion.G2_MINUS: PhaseRegion.G2_PLUS,
    PhaseRegion.C_PLUS: PhaseRegion.C_MINUS,
    PhaseRegion.C_MINUS: PhaseRegion.C_PLUS,
}


def celerity(h: float, g: float = G) -> float:
    return math.sqrt(g * h)


def eigenvalues(s: State, g: float = G) -> tuple[float, float, float]:
    """Characteristic speeds ``(u - c, u + c, 0)`` with ``c = sqrt(g h)``."""
    c = math.sqrt(g * s.h)
    return (s.u - c, s.u + c, 0.0)


def froude(s: State, g: float = G) -> float:
    if s.h == 0.0:
        return math.inf if s.u else 0.0
    return s.u / math.sqrt(g * s.h)


def resonance_tol(s: State, g: float = G) -> float:
    return 1e-9 * max(1.0, abs(s.u), math.sqrt(g * s.h))


def classify_region(s: State, g: float = G, tol: float | None = None) -> PhaseRegion:
    """Locate ``s`` relative to the resonance curves ``u = +-sqrt(g h)``.

    ``tol`` defaults to ``1e-9 * max(1, |u|, sqrt(g h))``.
    """
    if tol is None:
        tol = resonance_tol(s, g)
    c = math.sqrt(g * s.h)
    lam1 = s.u - c
    lam2 = s.u + c
    if abs(lam1) <= tol and s.u >= 0.0:
        return PhaseRegion.C_PLUS
    if abs(lam2) <= tol and s.u <= 0.0:
        return PhaseRegion.C_MINUS
    if lam1 > 0.0:
        return PhaseRegion.G1
    if lam2 < 0.0:
        return PhaseRegion.G3
    return PhaseRegion.G2_PLUS if s.u >= 0.0 else PhaseRegion.G2_MINUS


def in_regime_a(s: State, g: float = G) -> bool:
    """``lambda_1 >= 0``: supercritical to the right, resonance curve C+ included."""
    return classify_region(s, g) in (PhaseRegion.G1, PhaseRegion.C_PLUS)


def in_g2(s: State, g: float = G) -> bool:
    return classify_region(s, g) in (PhaseRegion.G2_PLUS, PhaseRegion.G2_MINUS)


def flux(s: State, g: float = G) -> tuple[float, float]:
    """Physical flux ``(h u, h u^2 + g h^2 / 2)``."""
    q = s.h * s.u
    return (q, q * s.u + 0.5 * g * s.h * s.h)
