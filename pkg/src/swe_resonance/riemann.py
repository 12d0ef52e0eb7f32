"""Exact Riemann solver for shallow water over a bottom step.

Two regimes are distinguished by the left state.  Regime A has a
supercritical (or critical) left state, ``lambda_1(U_L) >= 0``; regime B a
subcritical one.  Each regime has three constructions:

    A1  contact to a_R, then 1-wave and 2-wave
    A2  contact to a half-way level, standing 1-shock, contact to a_R, 2-wave
    A3  1-wave with non-positive speed, contact to a_R, 2-wave
    B1  1-rarefaction up to the critical curve, contact, 1-wave, 2-wave
    B2  like A2 but starting from the critical point of the 1-rarefaction
    B3  like A3

Data with a left state in G3 or on C- are handled by mirroring ``x -> -x``.

Each construction returns ``None`` when it does not apply.  Applicability is
decided from the construction itself (signs of the wave-curve tests and the
ordering of the wave speeds), never by assuming one of the other branches.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from scipy.optimize import minimize_scalar

from . import contact as _ct
from .core import G, PhaseRegion, State, classify_region, eigenvalues
from .errors import (ConvergenceFailure, NoIntersection, NonPositiveHeight, NoSolution,
                     NoStationaryContact, NotApplicable, WrongRegion)
from .numerics import RootPolicy, bisect, newton_safeguarded
from .wavecurves import (du_dh_raw, phi2, rarefaction_fan_state, shock_speed,
                         u_on_curve_raw, zero_speed_state)

SEARCH_POLICY = RootPolicy(residual_tol=1e-13, step_tol=1e-13, max_iter=200)
_SUPER = _ct.ContactSide.SUPERCRITICAL
_SUB = _ct.ContactSide.SUBCRITICAL


class ConstructionTag(enum.Enum):
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"

    @property
    def regime(self) -> str:
        return self.value[0]

    @classmethod
    def parse(cls, text) -> ConstructionTag:
        if isinstance(text, cls):
            return text
        return cls(str(text).strip().upper())


REGIME_TAGS = {
    "A": (ConstructionTag.A1, ConstructionTag.A2, ConstructionTag.A3),
    "B": (ConstructionTag.B1, ConstructionTag.B2, ConstructionTag.B3),
}


class WaveKind(enum.Enum):
    SHOCK = "shock"
    RAREFACTION = "rarefaction"
    CONTACT = "contact"
    DRY = "dry"


@dataclass(frozen=True)
class Wave:
    """One elementary wave of a Riemann fan.

    Discontinuities have ``lo == hi``.  For a rarefaction ``lo`` is the head
    (slowest characteristic) and ``hi`` the tail; a dry front spans the gap
    between the two vacuum edges.
    """

    kind: WaveKind
    family: int
    left: State
    right: State
    lo: float
    hi: float

    @property
    def speed(self) -> float:
        return self.lo

    def reflected(self) -> Wave:
        fam = {1: 2, 2: 1}.get(self.family, self.family)
        return Wave(self.kind, fam, self.right.reflected(), self.left.reflected(), -self.hi, -self.lo)

    def state_at(self, xi: float, g: float = G) -> State:
        """Interior state of a fan or dry front; the left state for jumps."""
        if self.kind is WaveKind.RAREFACTION:
            if xi <= self.lo:
                return self.left
            if xi >= self.hi:
                return self.right
            anchor = self.left if self.family == 1 else self.right
            return rarefaction_fan_state(self.family, anchor, xi, g)
        if self.kind is WaveKind.DRY:
            return State(0.0, 0.0, self.left.a)
        return self.left


@dataclass(frozen=True)
class RiemannSolution:
    tag: Optional[ConstructionTag]
    left: State
    right: State
    waves: tuple
    named: dict = field(default_factory=dict, compare=False)
    params: dict = field(default_factory=dict, compare=False)
    mirrored: bool = False

    @property
    def states(self) -> list:
        """Constant states in order, from ``left`` to ``right``."""
        out = [self.left]
        for w in self.waves:
            if w.right != out[-1]:
                out.append(w.right)
        return out

    def reflected(self) -> RiemannSolution:
        return RiemannSolution(
            self.tag, self.right.reflected(), self.left.reflected(),
            tuple(w.reflected() for w in reversed(self.waves)),
            {k: v.reflected() for k, v in self.named.items()},
            dict(self.params), not self.mirrored)

    def interface(self, g: float = G) -> tuple[State, State]:
        return sample(self, 0.0, g, from_left=True), sample(self, 0.0, g)


def sample(sol: RiemannSolution, xi: float, g: float = G, from_left: bool = False) -> State:
    """State of the self-similar solution at ``x/t = xi``.

    The default is the right limit ``xi+``; ``from_left`` gives ``xi-``.  The
    two differ only on a discontinuity, in particular across a cluster of
    zero-speed waves at ``xi = 0``.
    """
    for w in sol.waves:
        if from_left:
            if xi <= w.lo:
                return w.left
        elif xi < w.lo:
            return w.left
        if w.kind in (WaveKind.RAREFACTION, WaveKind.DRY):
            if xi < w.hi or (from_left and xi == w.hi):
                if xi == w.hi and w.kind is WaveKind.RAREFACTION:
                    return w.right
                return w.state_at(xi, g)
    return sol.right


# ---------------------------------------------------------------- helpers

def _close(A: State, B: State, rel: float) -> bool:
    return (A.a == B.a and abs(A.h - B.h) <= rel * max(1.0, abs(B.h))
            and abs(A.u - B.u) <= rel * max(1.0, abs(B.u)))


def _speed_scale(*states: State, g: float = G) -> float:
    return max([1.0] + [abs(s.u) + math.sqrt(g * s.h) for s in states])


def _w1(U0: State, h: float, g: float) -> State:
    """State of height ``h`` on the forward 1-curve of ``U0``."""
    return State(h, u_on_curve_raw(1, True, U0.h, U0.u, h, g), U0.a)


def sharp(U: State, g: float = G) -> State:
    """Conjugate state across a standing 1-shock (lenient about C+ rounding)."""
    return zero_speed_state(U, g, strict=False)


def critical_point_w1(U_L: State, g: float = G) -> State:
    """Point where the 1-rarefaction from a subcritical ``U_L`` reaches C+."""
    c = (U_L.u + 2.0 * math.sqrt(g * U_L.h)) / 3.0
    if c <= 0.0:
        raise WrongRegion(f"the 1-rarefaction from {U_L} runs dry before reaching C+")
    return State(c * c / g, c, U_L.a)


def critical_state(U: State, a: float, g: float = G) -> State:
    """State on C+ with the discharge of ``U`` at level ``a``."""
    hm = _ct.h_min(U, g)
    return State(hm, U.q / hm, a)


def contact(U: State, a: float, g: float = G, side=None) -> Optional[State]:
    """Admissible contact, tolerant of rounding right at ``a = a_max(U)``."""
    V = _ct.admissible_contact(U, a, g, side)
    if V is None and U.u != 0.0:
        amax = _ct.a_max(U, g)
        if a <= amax + 1e-10 * max(1.0, abs(amax), U.h):
            return critical_state(U, a, g)
    return V


def _wave1(A: State, B: State, g: float) -> list:
    if A == B or (A.h == B.h and A.u == B.u):
        return []
    if B.h > A.h:
        s = shock_speed(A, B, g)
        return [Wave(WaveKind.SHOCK, 1, A, B, s, s)]
    return [Wave(WaveKind.RAREFACTION, 1, A, B, eigenvalues(A, g)[0], eigenvalues(B, g)[0])]


def _wave2(A: State, B: State, g: float) -> list:
    if A == B or (A.h == B.h and A.u == B.u):
        return []
    if B.h < A.h:
        s = shock_speed(A, B, g)
        return [Wave(WaveKind.SHOCK, 2, A, B, s, s)]
    return [Wave(WaveKind.RAREFACTION, 2, A, B, eigenvalues(A, g)[1], eigenvalues(B, g)[1])]


def _contact_wave(A: State, B: State) -> list:
    if A == B:
        return []
    return [Wave(WaveKind.CONTACT, 3, A, B, 0.0, 0.0)]


def _standing_shock(A: State, B: State) -> list:
    if A.h == B.h:
        return []
    return [Wave(WaveKind.SHOCK, 1, A, B, 0.0, 0.0)]


def _dry_tail(A: State, B: State, g: float) -> list:
    """1-rarefaction from ``A`` into vacuum, dry gap, 2-rarefaction up to ``B``."""
    cA, cB = math.sqrt(g * A.h), math.sqrt(g * B.h)
    sI, sJ = A.u + 2.0 * cA, B.u - 2.0 * cB
    I = State(0.0, 0.0, A.a)
    J = State(0.0, 0.0, B.a)
    return [Wave(WaveKind.RAREFACTION, 1, A, I, A.u - cA, sI),
            Wave(WaveKind.DRY, 0, I, J, sI, sJ),
            Wave(WaveKind.RAREFACTION, 2, J, B, sJ, B.u + cB)]


def _finish(tag, U_L, U_R, waves, named, g, params=None) -> RiemannSolution:
    """Assemble a solution after checking that the wave speeds are ordered."""
    waves = [w for w in waves if not _negligible(w)]
    tol = 1e-10 * _speed_scale(U_L, U_R, *[w.right for w in waves], g=g)
    prev = -math.inf
    for w in waves:
        if w.lo < prev - tol or w.hi < w.lo - tol:
            raise NotApplicable(f"{tag.value}: wave speeds out of order ({w.kind.value} at {w.lo!r})")
        prev = max(prev, w.hi)
    return RiemannSolution(tag, U_L, U_R, tuple(waves), dict(named), dict(params or {}))


def _negligible(w: Wave) -> bool:
    A, B = w.left, w.right
    if A.a != B.a:
        return False
    return (abs(A.h - B.h) <= 1e-14 * max(1.0, A.h) and abs(A.u - B.u) <= 1e-14 * max(1.0, abs(A.u))
            and w.kind is not WaveKind.DRY)


# ------------------------------------------------------------ intersections

def intersect_w1_w2b(U0: State, U_R: State, g: float = G) -> Optional[State]:
    """``W1(U0) ∩ W2^B(U_R)`` at the level of ``U_R``; ``None`` if vacuum forms.

    The difference of the two parameterizations is strictly decreasing in
    ``h``, so a crossing is unique and bracketed by ``(0, hi)``.
    """
    if U0.h <= 0.0 or U_R.h <= 0.0:
        raise NonPositiveHeight("wave-curve intersection needs wet states")

    def f(h):
        return u_on_curve_raw(1, True, U0.h, U0.u, h, g) - u_on_curve_raw(2, False, U_R.h, U_R.u, h, g)

    def df(h):
        return du_dh_raw(1, True, U0.h, h, g) - du_dh_raw(2, False, U_R.h, h, g)

    if f(0.0) <= 0.0:
        return None
    hi = max(U0.h, U_R.h)
    while f(hi) > 0.0:
        hi *= 2.0
        if hi > 1e12:
            raise ConvergenceFailure("wave-curve intersection escaped to infinity")
    guess = (U0.u + 2.0 * math.sqrt(g * U0.h) - U_R.u + 2.0 * math.sqrt(g * U_R.h)) / 4.0
    start = min(max(guess * guess / g, 1e-300), hi)
    policy = RootPolicy(1e-15 * _speed_scale(U0, U_R, g=g), 1e-15, 200)
    h = newton_safeguarded(f, df, start, bracket=(0.0, hi), policy=policy)
    return State(h, u_on_curve_raw(2, False, U_R.h, U_R.u, h, g), U_R.a)


def intersect_w3_w2b(U_L: State, U_R: State, g: float = G) -> State:
    """Point of ``W2^B(U_R)`` with the discharge of ``U_L``.

    With ``q = h_L u_L > 0`` the residual ``q/h - u_{W2B}(h)`` is strictly
    decreasing, so the root is unique.  The result carries ``a_R``.
    """
    if U_L.h <= 0.0 or U_R.h <= 0.0:
        raise NonPositiveHeight("intersection needs wet states")
    q = U_L.q
    if q <= 0.0:
        raise NoIntersection(f"discharge {q!r} <= 0: no unique crossing with the backward 2-curve")

    def f(h):
        return q / h - u_on_curve_raw(2, False, U_R.h, U_R.u, h, g)

    def df(h):
        return -q / (h * h) - du_dh_raw(2, False, U_R.h, h, g)

    lo = hi = U_R.h
    while f(lo) <= 0.0:
        lo *= 0.5
        if lo < 1e-300:
            raise NoIntersection("no crossing below the right state")
    while f(hi) >= 0.0:
        hi *= 2.0
        if hi > 1e12:
            raise NoIntersection("no crossing above the right state")
    if f(U_R.h) == 0.0:
        return State(U_R.h, U_R.u, U_R.a)
    policy = RootPolicy(1e-15 * max(1.0, abs(q) / U_R.h, abs(U_R.u)), 1e-15, 200)
    h = newton_safeguarded(f, df, U_R.h, bracket=(lo, hi), policy=policy)
    return State(h, q / h, U_R.a)


def _c_minus_crossing(U_L: State, h_from: float, g: float) -> float:
    """First height above ``h_from`` where the 1-curve of ``U_L`` meets C-."""

    def lam2(h):
        s = _w1(U_L, h, g)
        return s.u + math.sqrt(g * h)

    hi = max(h_from, U_L.h) * 2.0
    while lam2(hi) >= 0.0:
        hi *= 2.0
        if hi > 1e12:
            raise ConvergenceFailure("1-curve never reaches C-")
    return bisect(lam2, h_from, hi, SEARCH_POLICY)


def _feasible_w1(U_L: State, h_anchor: float, a_R: float, g: float):
    """Heights on ``W1(U_L)`` from which a subcritical contact to ``a_R`` exists.

    Returns ``(h_lo, h_hi)`` inside ``[h_anchor, C- crossing]`` or ``None``.
    Going down (``a_R <= a_L``) every state qualifies; going up, ``a_max``
    along the curve must reach ``a_R``.
    """
    h_cm = _c_minus_crossing(U_L, h_anchor, g)
    if a_R <= U_L.a:
        return h_anchor, h_cm

    def m(h):
        return _ct.a_max(_w1(U_L, h, g), g) - a_R

    if m(h_anchor) >= 0.0:
        lo, peak = h_anchor, h_anchor
    else:
        n = 64
        grid = [h_anchor + (h_cm - h_anchor) * k / n for k in range(n + 1)]
        vals = [m(h) for h in grid]
        k = max(range(n + 1), key=vals.__getitem__)
        a, b = grid[max(k - 1, 0)], grid[min(k + 1, n)]
        res = minimize_scalar(lambda h: -m(h), bounds=(a, b), method="bounded",
                              options={"xatol": 1e-14 * max(1.0, b)})
        peak = res.x if -res.fun >= vals[k] else grid[k]
        if m(peak) < 0.0:
            return None
        lo = bisect(m, h_anchor, peak, SEARCH_POLICY)
        step = 1e-14 * max(1.0, lo)
        while m(lo) < 0.0 and lo < peak:
            # the midpoint can sit a rounding step on the infeasible side
            lo = min(peak, lo + step)
            step *= 2.0
    if m(h_cm) >= 0.0:
        return lo, h_cm
    hi = bisect(m, max(lo, peak), h_cm, SEARCH_POLICY)
    if m(hi) < 0.0 and hi > lo:
        # keep the end inside the feasible side of the bracket
        hi = max(lo, hi - 1e-13 * max(1.0, hi))
    return lo, hi


# ------------------------------------------------------------------ markers

def regime_a_markers(U_L: State, a_R: float, g: float = G) -> dict:
    """``U_L^o``, ``U_L^{o#}``, ``U_L^#`` and ``U_L^{#o}`` (``None`` if undefined)."""
    Lo = contact(U_L, a_R, g, _SUPER)
    Los = sharp(Lo, g) if Lo is not None and Lo.u > 0.0 else None
    Ls = sharp(U_L, g)
    Lso = contact(Ls, a_R, g, _SUB)
    return {"U_L^o": Lo, "U_L^o#": Los, "U_L^#": Ls, "U_L^#o": Lso}


def regime_b_markers(U_L: State, a_R: float, g: float = G) -> dict:
    """``U_1``, ``U_1^o``, ``U_2`` and ``U_2^#`` for a subcritical ``U_L``.

    For ``a_R > a_L`` the 1-curve must climb until ``a_max`` reaches ``a_R``;
    then ``U_1^o``, ``U_2`` and ``U_2^#`` all collapse onto one critical state.
    """
    try:
        C = critical_point_w1(U_L, g)
    except WrongRegion:
        return {"U_1": None, "U_1^o": None, "U_2": None, "U_2^#": None}
    if a_R <= U_L.a:
        U2 = contact(C, a_R, g, _SUPER)
        return {"U_1": C, "U_1^o": contact(C, a_R, g, _SUB), "U_2": U2,
                "U_2^#": sharp(U2, g) if U2 is not None else None}
    span = _feasible_w1(U_L, C.h, a_R, g)
    if span is None:
        return {"U_1": None, "U_1^o": None, "U_2": None, "U_2^#": None}
    U1 = _w1(U_L, span[0], g)
    U2 = critical_state(U1, a_R, g)
    return {"U_1": U1, "U_1^o": U2, "U_2": U2, "U_2^#": U2}


def _phi(U: Optional[State], U_R: State, g: float) -> float:
    return math.nan if U is None else phi2(U, U_R, g)


# ------------------------------------------------------------ constructions

def _a1(U_L, U_R, g, algorithm):
    Lo = contact(U_L, U_R.a, g, _SUPER)
    if Lo is None:
        raise NoStationaryContact(f"A1: level {U_R.a!r} is above a_max of the left state")
    named = {"U_L^o": Lo}
    UM = intersect_w1_w2b(Lo, U_R, g)
    if UM is None:
        named.update(I=State(0.0, 0.0, U_R.a), J=State(0.0, 0.0, U_R.a))
        waves = _contact_wave(U_L, Lo) + _dry_tail(Lo, U_R, g)
    else:
        named["U_M"] = UM
        waves = _contact_wave(U_L, Lo) + _wave1(Lo, UM, g) + _wave2(UM, U_R, g)
    return _finish(ConstructionTag.A1, U_L, U_R, waves, named, g)


def _half_way(base: State, U_R: State, lo: float, hi: float, g: float):
    """Level search of A2/B2 over ``a`` in ``[lo, hi]``.

    ``P(a)`` is obtained by a supercritical contact from ``base`` to ``a``, a
    standing shock, and a subcritical contact to ``a_R``.  The level is found
    by bisection on the sign of ``Phi2(P(a); U_R)``.
    """

    def chain(a):
        M = contact(base, a, g, _SUPER)
        if M is None or M.u <= 0.0:
            return None
        N = sharp(M, g)
        P = contact(N, U_R.a, g, _SUB)
        if P is None:
            return None
        return M, N, P

    def F(a):
        c = chain(a)
        return math.nan if c is None else phi2(c[2], U_R, g)

    n = 32
    grid = [lo + (hi - lo) * k / n for k in range(n + 1)]
    grid[-1] = hi
    vals = [F(a) for a in grid]
    ok = [k for k in range(n + 1) if not math.isnan(vals[k])]
    if not ok:
        raise NotApplicable("half-way level: no level admits the contact chain")
    k0, k1 = ok[0], ok[-1]
    if any(math.isnan(vals[k]) for k in range(k0, k1 + 1)):
        raise NotApplicable("half-way level: contact chain undefined inside the bracket")
    a_lo, a_hi = grid[k0], grid[k1]

    def defined(a):
        return 1.0 if not math.isnan(F(a)) else -1.0

    if k0 > 0:
        a_lo = bisect(lambda a: -defined(a), grid[k0 - 1], grid[k0], SEARCH_POLICY)
        if math.isnan(F(a_lo)):
            a_lo = grid[k0]
    if k1 < n:
        a_hi = bisect(defined, grid[k1], grid[k1 + 1], SEARCH_POLICY)
        if math.isnan(F(a_hi)):
            a_hi = grid[k1]
    f_lo, f_hi = F(a_lo), F(a_hi)
    if f_lo == 0.0:
        a_star = a_lo
    elif f_hi == 0.0:
        a_star = a_hi
    else:
        if (f_lo > 0.0) == (f_hi > 0.0):
            raise NotApplicable("half-way level: no sign change of Phi2 along the contact chain")

        def test(a):
            v = F(a)
            if math.isnan(v):
                raise NotApplicable("half-way level: contact chain undefined at a bisection point")
            return v

        a_star = bisect(test, a_lo, a_hi, SEARCH_POLICY)
    return a_star, chain(a_star)


def _a2(U_L, U_R, g, algorithm):
    a_L, a_R = U_L.a, U_R.a
    a_star, (M, N, P) = _half_way(U_L, U_R, min(a_L, a_R), max(a_L, a_R), g)
    named = {"U_1": M, "U_2": N, "U_M": P}
    waves = (_contact_wave(U_L, M) + _standing_shock(M, N) + _contact_wave(N, P)
             + _wave2(P, U_R, g))
    return _finish(ConstructionTag.A2, U_L, U_R, waves, named, g, {"a": a_star})


def _composite(tag, U_L, U_R, h_anchor, g, algorithm):
    """Shared engine of A3 and B3.

    ``U_M`` runs along ``W1(U_L)`` from ``h_anchor`` toward C-; it must meet
    the 2-curve after a subcritical contact to ``a_R``.
    """
    a_R = U_R.a
    span = _feasible_w1(U_L, h_anchor, a_R, g)
    if span is None:
        raise NoStationaryContact(f"{tag.value}: no state on the 1-curve reaches level {a_R!r}")
    h_lo, h_hi = span

    def image(h):
        U = _w1(U_L, h, g)
        return U, contact(U, a_R, g, _SUB)

    def f(h):
        _, V = image(h)
        if V is None:
            raise NotApplicable(f"{tag.value}: contact lost inside the feasible range")
        return phi2(V, U_R, g)

    f_lo, f_hi = f(h_lo), f(h_hi)
    if f_lo < 0.0:
        raise NotApplicable(f"{tag.value}: anchor lies below the backward 2-curve")
    if f_hi > 0.0:
        raise NotApplicable(f"{tag.value}: the composite curve never meets the backward 2-curve")
    if algorithm == 2:
        h_M = _algorithm2(U_L, U_R, h_lo, h_hi, g)
    else:
        h_M = bisect(f, h_lo, h_hi, SEARCH_POLICY)
    UM, UMo = image(h_M)
    if UMo is None:
        raise NotApplicable(f"{tag.value}: no contact from the intersection state")
    named = {"U_M": UM, "U_M^o": UMo}
    waves = _wave1(U_L, UM, g) + _contact_wave(UM, UMo) + _wave2(UMo, U_R, g)
    return _finish(tag, U_L, U_R, waves, named, g, {"algorithm": float(algorithm)})


def _algorithm2(U_L, U_R, h_lo, h_hi, g):
    """Bisection on the bottom-level mismatch instead of on ``Phi2``.

    For a trial ``U`` on the 1-curve, the state with the same discharge on
    ``W2^B(U_R)`` fixes the level a contact would need; the search stops when
    that level equals ``a_R``.
    """
    a_R = U_R.a

    def mismatch(h):
        U = _w1(U_L, h, g)
        V = intersect_w3_w2b(U, U_R, g)
        a = U.a + (U.u * U.u - V.u * V.u) / (2.0 * g) + U.h - V.h
        return a - a_R

    top = h_hi
    if _w1(U_L, top, g).u <= 0.0:
        top = bisect(lambda h: _w1(U_L, h, g).u, h_lo, h_hi, SEARCH_POLICY)
        while _w1(U_L, top, g).u <= 0.0 and top > h_lo:
            top = top - 1e-13 * max(1.0, top)
    return bisect(mismatch, h_lo, top, SEARCH_POLICY)


def _a3(U_L, U_R, g, algorithm):
    anchor = sharp(U_L, g)
    return _composite(ConstructionTag.A3, U_L, U_R, anchor.h, g, algorithm)


def _b1(U_L, U_R, g, algorithm):
    a_L, a_R = U_L.a, U_R.a
    C = critical_point_w1(U_L, g)
    if a_R <= a_L:
        U1 = C
        U2 = contact(U1, a_R, g, _SUPER)
        if U2 is None:
            raise NoStationaryContact("B1: no supercritical contact from the critical state")
    else:
        span = _feasible_w1(U_L, C.h, a_R, g)
        if span is None:
            raise NoStationaryContact(f"B1: no state on the 1-curve reaches level {a_R!r}")
        U1 = _w1(U_L, span[0], g)
        U2 = critical_state(U1, a_R, g)
    named = {"U_1": U1, "U_2": U2}
    U3 = intersect_w1_w2b(U2, U_R, g)
    head = _wave1(U_L, U1, g) + _contact_wave(U1, U2)
    if U3 is None:
        named.update(I=State(0.0, 0.0, a_R), J=State(0.0, 0.0, a_R))
        waves = head + _dry_tail(U2, U_R, g)
    else:
        named["U_3"] = U3
        waves = head + _wave1(U2, U3, g) + _wave2(U3, U_R, g)
    return _finish(ConstructionTag.B1, U_L, U_R, waves, named, g)


def _b2(U_L, U_R, g, algorithm):
    if not U_R.a < U_L.a:
        raise NotApplicable("B2 needs a step down (a_R < a_L)")
    U1 = critical_point_w1(U_L, g)
    a_star, (M, N, P) = _half_way(U1, U_R, U_R.a, U_L.a, g)
    named = {"U_1": U1, "M": M, "N": N, "P": P}
    waves = (_wave1(U_L, U1, g) + _contact_wave(U1, M) + _standing_shock(M, N)
             + _contact_wave(N, P) + _wave2(P, U_R, g))
    return _finish(ConstructionTag.B2, U_L, U_R, waves, named, g, {"a": a_star})


def _b3(U_L, U_R, g, algorithm):
    C = critical_point_w1(U_L, g)
    return _composite(ConstructionTag.B3, U_L, U_R, C.h, g, algorithm)


_BUILDERS = {
    ConstructionTag.A1: _a1, ConstructionTag.A2: _a2, ConstructionTag.A3: _a3,
    ConstructionTag.B1: _b1, ConstructionTag.B2: _b2, ConstructionTag.B3: _b3,
}


def regime_of(U_L: State, g: float = G) -> Optional[str]:
    """``"A"``, ``"B"`` or ``None`` (left state in G3 or on C-)."""
    region = classify_region(U_L, g)
    if region in (PhaseRegion.G1, PhaseRegion.C_PLUS):
        return "A"
    if region in (PhaseRegion.G2_PLUS, PhaseRegion.G2_MINUS):
        return "B"
    return None


def trivial_solution(U: State, tag=None) -> RiemannSolution:
    return RiemannSolution(tag, U, U, (), {}, {})


def _equilibrium(tag, U_L, U_R, g) -> Optional[RiemannSolution]:
    """Data already joined by one admissible contact.

    The contact state is replaced by ``U_R`` itself so the interface flux of
    an equilibrium is bit-for-bit the same on both sides.
    """
    if U_L.a == U_R.a:
        return None
    V = contact(U_L, U_R.a, g)
    if V is None or not _close(V, U_R, 1e-12):
        return None
    key = "U_L^o" if tag.regime == "A" else "U_M^o"
    named = {key: U_R} if tag.regime == "A" else {"U_M": U_L, "U_M^o": U_R}
    return RiemannSolution(tag, U_L, U_R, tuple(_contact_wave(U_L, U_R)), named, {})


def construct_or_raise(tag, U_L: State, U_R: State, g: float = G,
                       algorithm: int = 1) -> RiemannSolution:
    """Like :func:`construct` but raising :class:`NotApplicable` with a reason."""
    tag = ConstructionTag.parse(tag)
    if U_L.h <= 0.0 or U_R.h <= 0.0:
        raise NonPositiveHeight("the exact solver needs wet Riemann data")
    if U_L == U_R:
        return trivial_solution(U_L, tag)
    if regime_of(U_L, g) != tag.regime:
        raise NotApplicable(f"{tag.value} does not apply to a left state in {classify_region(U_L, g).value}")
    if tag in (ConstructionTag.A1, ConstructionTag.B3):
        eq = _equilibrium(tag, U_L, U_R, g)
        if eq is not None:
            return eq
    return _BUILDERS[tag](U_L, U_R, g, algorithm)


def construct(tag, U_L: State, U_R: State, g: float = G,
              algorithm: int = 1) -> Optional[RiemannSolution]:
    """Build the solution of one construction, or ``None`` if it does not apply.

    ``algorithm`` picks the search used by A3/B3: 1 bisects on ``Phi2``,
    2 bisects on the bottom-level mismatch.
    """
    try:
        return construct_or_raise(tag, U_L, U_R, g, algorithm)
    except (NotApplicable, WrongRegion):
        return None


# ----------------------------------------------------------- selection

def ladder_tag(U_L: State, U_R: State, g: float = G,
               literal_sign: bool = False) -> ConstructionTag:
    """Sign-test ladder preferring A1 and B3.

    ``literal_sign`` reproduces a variant of the ladder that sends states with
    ``lambda_1 <= 0`` to the A-branch; it exists only for comparison.
    """
    lam1 = eigenvalues(U_L, g)[0]
    a_branch = lam1 <= 0.0 if literal_sign else regime_of(U_L, g) == "A"
    if a_branch:
        m = regime_a_markers(U_L, U_R.a, g)
        if _phi(m["U_L^o#"], U_R, g) < 0.0:
            return ConstructionTag.A1
        if _phi(m["U_L^#o"], U_R, g) < 0.0:
            return ConstructionTag.A2
        return ConstructionTag.A3
    m = regime_b_markers(U_L, U_R.a, g)
    if _phi(m["U_1^o"], U_R, g) > 0.0:
        return ConstructionTag.B3
    if _phi(m["U_2^#"], U_R, g) > 0.0:
        return ConstructionTag.B2
    return ConstructionTag.B1


def _candidates(regime: str, first: ConstructionTag, preference) -> list:
    order = []
    for t in list(preference or ()) + [first] + list(REGIME_TAGS[regime]):
        t = ConstructionTag.parse(t)
        if t.regime == regime and t not in order:
            order.append(t)
    return order


def _solve_frame(U_L, U_R, g, preference, algorithm, literal_sign):
    regime = "A" if literal_sign and eigenvalues(U_L, g)[0] <= 0.0 else regime_of(U_L, g)
    if literal_sign and regime != regime_of(U_L, g):
        raise NoSolution(f"the literal branch sign sends {U_L} to constructions that do not apply")
    if regime is None:
        return None
    first = ladder_tag(U_L, U_R, g)
    for tag in _candidates(regime, first, preference):
        sol = construct(tag, U_L, U_R, g, algorithm)
        if sol is not None:
            return sol
    return None


def solve(U_L: State, U_R: State, g: float = G, preference: Sequence = (),
          algorithm: int = 1, literal_sign: bool = False) -> RiemannSolution:
    """One admissible solution, chosen by ``preference`` then the sign ladder.

    A left state in G3 or on C- is handled in the mirrored frame.  If the
    direct frame has no solution the mirrored frame is tried as well.
    """
    if U_L.h <= 0.0 or U_R.h <= 0.0:
        raise NonPositiveHeight("the exact solver needs wet Riemann data")
    if U_L == U_R:
        return trivial_solution(U_L)
    sol = None
    if regime_of(U_L, g) is not None:
        sol = _solve_frame(U_L, U_R, g, preference, algorithm, literal_sign)
    if sol is None and regime_of(U_R.reflected(), g) is not None:
        m = _solve_frame(U_R.reflected(), U_L.reflected(), g, preference, algorithm, literal_sign)
        if m is not None:
            sol = m.reflected()
    if sol is None and U_L.a == U_R.a:
        sol = classical_solution(U_L, U_R, g)
    if sol is None:
        raise NoSolution(f"no construction applies to U_L={U_L}, U_R={U_R}")
    return sol


def classical_solution(U_L: State, U_R: State, g: float = G) -> RiemannSolution:
    """Flat-bottom solution (1-wave, 2-wave, possibly a dry gap), tag ``None``."""
    if U_L.a != U_R.a:
        raise NotApplicable("the classical solution needs a flat bottom")
    UM = intersect_w1_w2b(U_L, U_R, g)
    if UM is None:
        waves = _dry_tail(U_L, U_R, g)
        named = {"I": waves[0].right, "J": waves[1].right}
    else:
        waves = _wave1(U_L, UM, g) + _wave2(UM, U_R, g)
        named = {"U_M": UM}
    return RiemannSolution(None, U_L, U_R, tuple(w for w in waves if not _negligible(w)), named, {})


# ---------------------------------------------------------- classification

class Uniqueness(enum.Enum):
    UNIQUE = "unique"
    MULTIPLE_TWO = "multiple-two"
    MULTIPLE_THREE = "multiple-three"
    NONE = "none"


@dataclass
class ClassificationReport:
    exists: bool
    solutions: list
    uniqueness: Uniqueness
    evidence: dict
    mirrored: bool = False

    @property
    def tags(self) -> list:
        return [t for t, _ in self.solutions]


def _profile(sol: RiemannSolution, g: float) -> list:
    speeds = sorted({w.lo for w in sol.waves} | {w.hi for w in sol.waves} | {0.0})
    span = max([1.0] + [abs(s) for s in speeds if math.isfinite(s)])
    probes = [span * (k / 40.0 - 1.0) * 1.5 for k in range(81)]
    probes += [s + d for s in speeds for d in (-1e-7 * span, 1e-7 * span)]
    out = [sample(sol, x, g) for x in sorted(probes)]
    out += list(sol.interface(g))
    return out


def _same_solution(s1: RiemannSolution, s2: RiemannSolution, g: float) -> bool:
    p1, p2 = _profile(s1, g), _profile(s2, g)
    if len(p1) != len(p2):
        return False
    return all(_close(A, B, 1e-8) for A, B in zip(p1, p2))


def evidence_for(U_L: State, U_R: State, g: float = G) -> dict:
    regime = regime_of(U_L, g)
    ev = {"regime": regime, "region_L": classify_region(U_L, g).value,
          "region_R": classify_region(U_R, g).value}
    if regime == "A":
        m = regime_a_markers(U_L, U_R.a, g)
        ev.update(m)
        ev["phi2(U_L^o#)"] = _phi(m["U_L^o#"], U_R, g)
        ev["phi2(U_L^#o)"] = _phi(m["U_L^#o"], U_R, g)
    elif regime == "B":
        m = regime_b_markers(U_L, U_R.a, g)
        ev.update(m)
        ev["phi2(U_1^o)"] = _phi(m["U_1^o"], U_R, g)
        ev["phi2(U_2^#)"] = _phi(m["U_2^#"], U_R, g)
    return ev


def _classify_frame(U_L, U_R, g):
    regime = regime_of(U_L, g)
    found = []
    for tag in REGIME_TAGS[regime]:
        sol = construct(tag, U_L, U_R, g)
        if sol is None:
            continue
        if any(_same_solution(sol, s, g) for _, s in found):
            continue
        found.append((tag, sol))
    return found


def classify(U_L: State, U_R: State, g: float = G) -> ClassificationReport:
    """Every distinct admissible solution, with the sign tests behind it.

    Solutions that coincide (as happens on the boundaries between the
    uniqueness and multiplicity regions) are reported once.
    """
    if U_L.h <= 0.0 or U_R.h <= 0.0:
        raise NonPositiveHeight("classification needs wet Riemann data")
    if U_L == U_R:
        return ClassificationReport(True, [(None, trivial_solution(U_L))], Uniqueness.UNIQUE,
                                    evidence_for(U_L, U_R, g))
    mirrored = False
    found = []
    ev = {}
    if regime_of(U_L, g) is not None:
        ev = evidence_for(U_L, U_R, g)
        found = _classify_frame(U_L, U_R, g)
    if not found and regime_of(U_R.reflected(), g) is not None:
        mf = _classify_frame(U_R.reflected(), U_L.reflected(), g)
        if mf:
            mirrored = True
            ev = evidence_for(U_R.reflected(), U_L.reflected(), g)
            ev["mirrored"] = True
            found = [(t, s.reflected()) for t, s in mf]
    if not ev:
        ev = {"regime": None, "region_L": classify_region(U_L, g).value,
              "region_R": classify_region(U_R, g).value}
    n = len(found)
    verdict = {0: Uniqueness.NONE, 1: Uniqueness.UNIQUE, 2: Uniqueness.MULTIPLE_TWO}.get(
        n, Uniqueness.MULTIPLE_THREE)
    return ClassificationReport(n > 0, found, verdict, ev, mirrored)

