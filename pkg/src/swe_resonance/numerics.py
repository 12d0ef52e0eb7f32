"""Bracketing and Newton-type scalar root finders.

All three methods share one convergence policy (:class:`RootPolicy`).  The
residual tolerance is absolute; callers scale it to their problem.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import BadBracket, ConvergenceFailure

__all__ = ["RootPolicy", "DEFAULT_POLICY", "regula_falsi", "newton_safeguarded", "bisect"]


@dataclass(frozen=True)
class RootPolicy:
    residual_tol: float = 1e-13
    step_tol: float = 1e-14
    max_iter: int = 200

    def __post_init__(self):
        if self.residual_tol <= 0 or self.step_tol <= 0 or self.max_iter < 1:
            raise ValueError("RootPolicy tolerances must be positive and max_iter >= 1")

    def scaled(self, scale: float) -> RootPolicy:
        return RootPolicy(self.residual_tol * scale, self.step_tol, self.max_iter)


DEFAULT_POLICY = RootPolicy()


def _width_ok(lo, hi, policy):
    return abs(hi - lo) <= policy.step_tol * max(1.0, abs(lo), abs(hi))


def regula_falsi(f: Callable[[float], float], lo: float, hi: float,
                 policy: RootPolicy = DEFAULT_POLICY) -> float:
    """False position with the Illinois modification.

    Halving the weight of a stagnant endpoint keeps the bracket shrinking
    superlinearly on convex functions where plain regula falsi stalls.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise BadBracket(f"no sign change on [{lo!r}, {hi!r}]: f={flo!r}, {fhi!r}")
    side = 0
    x = lo
    for _ in range(policy.max_iter):
        x = (lo * fhi - hi * flo) / (fhi - flo)
        if not lo < x < hi and not hi < x < lo:
            x = 0.5 * (lo + hi)
        fx = f(x)
        if abs(fx) <= policy.residual_tol or fx == 0.0:
            return x
        if fx * fhi > 0.0:
            hi, fhi = x, fx
            if side == -1:
                flo *= 0.5
            side = -1
        else:
            lo, flo = x, fx
            if side == 1:
                fhi *= 0.5
            side = 1
        if _width_ok(lo, hi, policy):
            return x
    raise ConvergenceFailure(f"regula falsi did not converge on [{lo!r}, {hi!r}]")


def newton_safeguarded(f: Callable[[float], float], fprime: Callable[[float], float],
                       start: float, bracket: Optional[tuple[float, float]] = None,
                       policy: RootPolicy = DEFAULT_POLICY) -> float:
    """Newton iteration with a bisection fallback.

    With a bracket, any iterate that leaves it (or fails to reduce ``|f|``)
    is replaced by the bracket midpoint and the bracket is tightened every
    step.  Without one, plain Newton is run.
    """
    x = start
    fx = f(x)
    if bracket is not None:
        lo, hi = bracket
        flo, fhi = f(lo), f(hi)
        if flo == 0.0:
            return lo
        if fhi == 0.0:
            return hi
        if flo * fhi > 0.0:
            raise BadBracket(f"no sign change on [{lo!r}, {hi!r}]")
        if not min(lo, hi) <= x <= max(lo, hi):
            x = 0.5 * (lo + hi)
            fx = f(x)
    for _ in range(policy.max_iter):
        if abs(fx) <= policy.residual_tol:
            return x
        if bracket is not None:
            if fx * flo > 0.0:
                lo, flo = x, fx
            else:
                hi, fhi = x, fx
        d = fprime(x)
        x_new = x - fx / d if d != 0.0 and math.isfinite(d) else math.nan
        if bracket is not None:
            if not (min(lo, hi) < x_new < max(lo, hi)):
                x_new = 0.5 * (lo + hi)
        elif not math.isfinite(x_new):
            raise ConvergenceFailure(f"Newton step failed at x={x!r}")
        f_new = f(x_new)
        if bracket is not None and abs(f_new) > abs(fx) and x_new != 0.5 * (lo + hi):
            x_new = 0.5 * (lo + hi)
            f_new = f(x_new)
        step = abs(x_new - x)
        x, fx = x_new, f_new
        if step <= policy.step_tol * max(1.0, abs(x)):
            return x
        if bracket is not None and _width_ok(lo, hi, policy):
            return x
    raise ConvergenceFailure(f"Newton did not converge from start={start!r}")


def bisect(f: Callable[[float], float], lo: float, hi: float,
           policy: RootPolicy = DEFAULT_POLICY) -> float:
    """Midpoint bisection driven by the sign of ``f``.

    Only signs are used to update the bracket, so ``f`` may be a pure sign
    test.  A magnitude below ``residual_tol`` ends the search early.
    """
    slo, shi = _sign(f(lo)), _sign(f(hi))
    if slo == 0:
        return lo
    if shi == 0:
        return hi
    if slo == shi:
        raise BadBracket(f"no sign change on [{lo!r}, {hi!r}]")
    for _ in range(policy.max_iter):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            return mid
        fm = f(mid)
        sm = _sign(fm)
        if sm == 0 or abs(fm) <= policy.residual_tol:
            return mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
        if _width_ok(lo, hi, policy):
            return 0.5 * (lo + hi)
    raise ConvergenceFailure(f"bisection did not converge on [{lo!r}, {hi!r}]")


def _sign(v) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0
