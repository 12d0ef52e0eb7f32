"""Godunov scheme in quasi-conservative form.

The bottom level is constant in each cell, so the source term only acts at
cell faces where ``a`` jumps.  There the exact solver provides two traces
``U(0-)`` and ``U(0+)``, and each cell sees the flux of the trace on its own
side:

    U_i <- U_i - dt/dx * (F(U_{i+1/2}(0-)) - F(U_{i-1/2}(0+)))

Faces with a flat bottom have ``U(0-) == U(0+)`` and are handled by a
vectorized classical solver.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.integrate import quad

from .core import G, State
from .errors import NegativeHeight, NoSolution, ZeroWaveSpeed
from .riemann import ConstructionTag, RiemannSolution, ladder_tag, solve

log = logging.getLogger(__name__)

DEFAULT_PREFERENCE = (ConstructionTag.A1, ConstructionTag.B3)


@dataclass
class Grid:
    """Cell averages of ``h`` and ``hu`` plus the piecewise-constant bottom."""

    x0: float
    x1: float
    h: np.ndarray
    hu: np.ndarray
    a: np.ndarray

    def __post_init__(self):
        self.h = np.asarray(self.h, dtype=float)
        self.hu = np.asarray(self.hu, dtype=float)
        self.a = np.asarray(self.a, dtype=float)
        if not self.x1 > self.x0:
            raise ValueError("grid needs x1 > x0")
        if not (self.h.shape == self.hu.shape == self.a.shape) or self.h.ndim != 1:
            raise ValueError("h, hu and a must be 1-D arrays of equal length")
        if np.any(self.h < 0.0):
            raise ValueError("negative cell height")

    @property
    def n(self) -> int:
        return self.h.size

    @property
    def dx(self) -> float:
        return (self.x1 - self.x0) / self.n

    @property
    def centers(self) -> np.ndarray:
        return self.x0 + (np.arange(self.n) + 0.5) * self.dx

    @property
    def u(self) -> np.ndarray:
        out = np.zeros_like(self.h)
        wet = self.h > 0.0
        out[wet] = self.hu[wet] / self.h[wet]
        return out

    def state(self, i: int) -> State:
        h = float(self.h[i])
        return State(h, float(self.hu[i]) / h if h > 0.0 else 0.0, float(self.a[i]))

    def copy(self) -> Grid:
        return Grid(self.x0, self.x1, self.h.copy(), self.hu.copy(), self.a.copy())


@dataclass(frozen=True)
class SchemeConfig:
    cfl: float = 0.75
    preference: tuple = DEFAULT_PREFERENCE
    boundary: str = "transmissive"
    g: float = G
    literal_sign: bool = False

    def __post_init__(self):
        if not self.cfl > 0.0:
            raise ValueError("cfl must be positive")
        if self.boundary != "transmissive":
            raise ValueError(f"unsupported boundary policy {self.boundary!r}")
        object.__setattr__(self, "preference",
                           tuple(ConstructionTag.parse(t) for t in self.preference))


@dataclass(frozen=True)
class InterfaceTrace:
    left: State
    right: State
    tag: Optional[ConstructionTag]


@dataclass(frozen=True)
class RiemannData:
    left: State
    right: State
    x_jump: float = 0.0


# ------------------------------------------------------------ interface

def select_solver(U_L: State, U_R: State, g: float = G,
                  preference: Sequence = DEFAULT_PREFERENCE) -> Optional[ConstructionTag]:
    """Tag of the construction used at a face (``None`` for the flat classical case)."""
    return solve(U_L, U_R, g, preference).tag


def interface_trace(U_L: State, U_R: State, g: float = G,
                    preference: Sequence = DEFAULT_PREFERENCE,
                    literal_sign: bool = False) -> InterfaceTrace:
    sol = solve(U_L, U_R, g, preference, literal_sign=literal_sign)
    left, right = sol.interface(g)
    return InterfaceTrace(left, right, sol.tag)


def flat_interface_states(hL, uL, hR, uR, g: float = G, iters: int = 50):
    """Vectorized exact flat-bottom Riemann solver sampled at ``x/t = 0``.

    Returns ``(h, u)`` arrays.  Covers shocks, rarefactions, transonic fans
    and dry states.
    """
    hL, uL, hR, uR = (np.asarray(v, dtype=float) for v in (hL, uL, hR, uR))
    hL, uL, hR, uR = np.broadcast_arrays(hL, uL, hR, uR)
    cL, cR = np.sqrt(g * hL), np.sqrt(g * hR)
    h = np.zeros(hL.shape)
    u = np.zeros(hL.shape)
    dryL, dryR = hL <= 0.0, hR <= 0.0
    vacuum = (dryL | dryR) | (uR - uL >= 2.0 * (cL + cR))
    wet = ~vacuum

    # star state by Newton on f_L(h) + f_R(h) + uR - uL = 0
    with np.errstate(divide="ignore", invalid="ignore"):
        hs = np.where(wet, (0.5 * (cL + cR) - 0.25 * (uR - uL)) ** 2 / g, 0.0)
        hs = np.maximum(hs, 1e-14 * np.maximum(hL, hR))

        def branch(hk, ck, hstar):
            shock = hstar > hk
            s = np.sqrt(0.5 * g * (1.0 / hstar + 1.0 / np.where(hk > 0, hk, 1.0)))
            f = np.where(shock, (hstar - hk) * s, 2.0 * (np.sqrt(g * hstar) - ck))
            df = np.where(shock, s - g * (hstar - hk) / (4.0 * hstar * hstar * s),
                          np.sqrt(g / hstar))
            return f, df

        for _ in range(iters):
            fl, dfl = branch(hL, cL, hs)
            fr, dfr = branch(hR, cR, hs)
            step = (fl + fr + uR - uL) / (dfl + dfr)
            new = np.where(wet, hs - step, hs)
            new = np.where(new <= 0.0, 0.5 * hs, new)
            done = np.abs(new - hs) <= 1e-15 * np.maximum(1.0, hs)
            hs = new
            if np.all(done | ~wet):
                break
        fl, _ = branch(hL, cL, hs)
        fr, _ = branch(hR, cR, hs)
        us = 0.5 * (uL + uR) + 0.5 * (fr - fl)
        cs = np.sqrt(g * hs)

        # left of the contact line of the star region
        left_side = us >= 0.0
        shockL = hs > hL
        sL = uL - cL * np.sqrt(0.5 * hs * (hs + hL) / np.where(hL > 0, hL * hL, 1.0))
        fanL_u = (uL + 2.0 * cL) / 3.0
        hL_pick = np.where(shockL, np.where(sL >= 0.0, hL, hs),
                           np.where(uL - cL >= 0.0, hL, np.where(us - cs <= 0.0, hs, fanL_u ** 2 / g)))
        uL_pick = np.where(shockL, np.where(sL >= 0.0, uL, us),
                           np.where(uL - cL >= 0.0, uL, np.where(us - cs <= 0.0, us, fanL_u)))
        shockR = hs > hR
        sR = uR + cR * np.sqrt(0.5 * hs * (hs + hR) / np.where(hR > 0, hR * hR, 1.0))
        fanR_c = (-uR + 2.0 * cR) / 3.0
        hR_pick = np.where(shockR, np.where(sR <= 0.0, hR, hs),
                           np.where(uR + cR <= 0.0, hR, np.where(us + cs >= 0.0, hs, fanR_c ** 2 / g)))
        uR_pick = np.where(shockR, np.where(sR <= 0.0, uR, us),
                           np.where(uR + cR <= 0.0, uR, np.where(us + cs >= 0.0, us, -fanR_c)))
        h = np.where(left_side, hL_pick, hR_pick)
        u = np.where(left_side, uL_pick, uR_pick)

    # fans into (or out of) vacuum
    if np.any(vacuum):
        v = vacuum
        headL, edgeL = uL - cL, uL + 2.0 * cL
        edgeR, headR = uR - 2.0 * cR, uR + cR
        cfanL = (uL + 2.0 * cL) / 3.0
        cfanR = (-uR + 2.0 * cR) / 3.0
        hv = np.zeros(hL.shape)
        uv = np.zeros(hL.shape)
        wL = ~dryL
        wR = ~dryR
        # region tests at xi = 0, from left to right
        inL = wL & (headL >= 0.0)
        inFanL = wL & ~inL & (edgeL > 0.0)
        inR = wR & (headR <= 0.0)
        inFanR = wR & ~inR & (edgeR < 0.0)
        hv = np.where(inFanR, cfanR ** 2 / g, hv)
        uv = np.where(inFanR, -cfanR, uv)
        hv = np.where(inR, hR, hv)
        uv = np.where(inR, uR, uv)
        hv = np.where(inFanL, cfanL ** 2 / g, hv)
        uv = np.where(inFanL, cfanL, uv)
        hv = np.where(inL, hL, hv)
        uv = np.where(inL, uL, uv)
        h = np.where(v, hv, h)
        u = np.where(v, uv, u)
    same = (hL == hR) & (uL == uR)
    h = np.where(same, hL, h)
    u = np.where(same, uL, u)
    u = np.where(h > 0.0, u, 0.0)
    return h, u


def _flux(h, u, g):
    q = h * u
    return q, q * u + 0.5 * g * h * h


# ---------------------------------------------------------------- stepping

def cfl_dt(grid: Grid, cfg: SchemeConfig, t_remaining: Optional[float] = None) -> float:
    """Largest stable step ``cfl * dx / max|lambda|``, capped by ``t_remaining``."""
    smax = float(np.max(np.abs(grid.u) + np.sqrt(cfg.g * grid.h))) if grid.n else 0.0
    if smax == 0.0:
        raise ZeroWaveSpeed("all wave speeds vanish")
    dt = cfg.cfl * grid.dx / smax
    if t_remaining is not None:
        dt = min(dt, t_remaining)
    return dt


@dataclass
class _TraceCache:
    store: dict = field(default_factory=dict)

    def get(self, UL: State, UR: State, cfg: SchemeConfig, face: int) -> InterfaceTrace:
        key = (UL.as_tuple(), UR.as_tuple())
        tr = self.store.get(key)
        if tr is None:
            try:
                tr = interface_trace(UL, UR, cfg.g, cfg.preference, cfg.literal_sign)
            except NoSolution as exc:
                raise NoSolution(f"face {face}: {exc}", interface=face) from exc
            self.store[key] = tr
        return tr


def interface_fluxes(grid: Grid, cfg: SchemeConfig, cache: Optional[_TraceCache] = None):
    """Fluxes seen from the left and right of every face (``n + 1`` faces).

    Face ``j`` separates cells ``j - 1`` and ``j``; the outer faces use
    transmissive ghost cells.
    """
    g = cfg.g
    h = np.concatenate(([grid.h[0]], grid.h, [grid.h[-1]]))
    hu = np.concatenate(([grid.hu[0]], grid.hu, [grid.hu[-1]]))
    a = np.concatenate(([grid.a[0]], grid.a, [grid.a[-1]]))
    u = np.zeros_like(h)
    wet = h > 0.0
    u[wet] = hu[wet] / h[wet]
    hs, us = flat_interface_states(h[:-1], u[:-1], h[1:], u[1:], g)
    fm0, fm1 = _flux(hs, us, g)
    fp0, fp1 = fm0.copy(), fm1.copy()
    jumps = np.nonzero(a[:-1] != a[1:])[0]
    if jumps.size:
        cache = cache or _TraceCache()
        for j in jumps:
            UL = State(float(h[j]), float(u[j]), float(a[j]))
            UR = State(float(h[j + 1]), float(u[j + 1]), float(a[j + 1]))
            if UL.h <= 0.0 or UR.h <= 0.0:
                raise NoSolution(f"face {j}: dry state next to a bottom step", interface=int(j))
            tr = cache.get(UL, UR, cfg, int(j))
            fm0[j], fm1[j] = _flux(tr.left.h, tr.left.u, g)
            fp0[j], fp1[j] = _flux(tr.right.h, tr.right.u, g)
    return (fm0, fm1), (fp0, fp1)


def step(grid: Grid, dt: float, cfg: SchemeConfig,
         cache: Optional[_TraceCache] = None) -> Grid:
    """One Godunov step; ``a`` is left untouched."""
    (fm0, fm1), (fp0, fp1) = interface_fluxes(grid, cfg, cache)
    lam = dt / grid.dx
    h = grid.h - lam * (fm0[1:] - fp0[:-1])
    hu = grid.hu - lam * (fm1[1:] - fp1[:-1])
    bad = h < -1e-12
    if np.any(bad):
        i = int(np.nonzero(bad)[0][0])
        raise NegativeHeight(f"cell {i}: height {h[i]!r} after update", cell=i)
    dry = h <= 0.0
    h[dry] = 0.0
    hu[dry] = 0.0
    return Grid(grid.x0, grid.x1, h, hu, grid.a.copy())


def evolve(grid: Grid, t_end: float, cfg: SchemeConfig = SchemeConfig(),
           callback: Optional[Callable[[Grid, float], None]] = None) -> Grid:
    """Advance to exactly ``t_end``; the last step is truncated."""
    if cfg.cfl > 0.5:
        log.warning("cfl=%g exceeds 1/2: neighbouring Riemann fans may interact", cfg.cfl)
    cache = _TraceCache()
    t = 0.0
    cur = grid.copy()
    while t < t_end:
        remaining = t_end - t
        try:
            dt = cfl_dt(cur, cfg, remaining)
        except ZeroWaveSpeed:
            dt = remaining
        # guard against a sliver of time left by rounding
        if t_end - (t + dt) <= 1e-14 * t_end:
            dt = remaining
        cur = step(cur, dt, cfg, cache)
        t = t_end if dt == remaining else t + dt
        if callback is not None:
            callback(cur, t)
    return cur


# ---------------------------------------------------------------- set-up

def _cell_edges(x0, x1, n):
    return x0 + (x1 - x0) * np.arange(n + 1) / n


def init_cell_averages(initial, x0: float, x1: float, n: int, g: float = G) -> Grid:
    """Exact cell averages of Riemann data or of a profile ``x -> State``.

    For Riemann data the cell containing the jump gets the length-weighted
    mix of both states.  For a callable profile ``h``, ``hu`` and ``a`` are
    integrated numerically cell by cell.
    """
    if n < 1:
        raise ValueError("need at least one cell")
    edges = _cell_edges(x0, x1, n)
    if isinstance(initial, RiemannData):
        L, R = initial.left, initial.right
        dx = (x1 - x0) / n
        frac = np.clip((initial.x_jump - edges[:-1]) / dx, 0.0, 1.0)
        full_left = edges[1:] <= initial.x_jump
        full_right = edges[:-1] >= initial.x_jump
        frac[full_left] = 1.0
        frac[full_right] = 0.0
        h = frac * L.h + (1.0 - frac) * R.h
        hu = frac * L.q + (1.0 - frac) * R.q
        a = frac * L.a + (1.0 - frac) * R.a
        return Grid(x0, x1, h, hu, a)
    h = np.empty(n)
    hu = np.empty(n)
    a = np.empty(n)
    for i in range(n):
        lo, hi = edges[i], edges[i + 1]
        w = hi - lo
        h[i] = quad(lambda x: initial(x).h, lo, hi, limit=200)[0] / w
        hu[i] = quad(lambda x: initial(x).q, lo, hi, limit=200)[0] / w
        a[i] = quad(lambda x: initial(x).a, lo, hi, limit=200)[0] / w
    return Grid(x0, x1, h, hu, a)


def exact_profile(sol: RiemannSolution, x: np.ndarray, t: float, x_jump: float = 0.0,
                  g: float = G) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Exact ``(h, u, a)`` at points ``x`` and time ``t > 0``."""
    from .riemann import sample

    out = np.empty((3, len(x)))
    for k, xk in enumerate(x):
        s = sample(sol, (xk - x_jump) / t, g)
        out[:, k] = s.as_tuple()
    return out[0], out[1], out[2]


def with_preference(cfg: SchemeConfig, preference) -> SchemeConfig:
    return replace(cfg, preference=tuple(ConstructionTag.parse(p) for p in preference))


__all__ = ["Grid", "SchemeConfig", "InterfaceTrace", "RiemannData", "DEFAULT_PREFERENCE",
           "select_solver", "interface_trace", "flat_interface_states", "cfl_dt", "step",
           "evolve", "init_cell_averages", "exact_profile", "interface_fluxes", "ladder_tag",
           "with_preference"]
