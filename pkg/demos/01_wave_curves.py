"""
Phase regions and wave curves
=============================

Classify a few states, walk along the 1- and 2-wave curves, and find the
state a 1-shock must jump to in order to stand still.
"""

import numpy as np

from swe_resonance import State, classify_region, eigenvalues
from swe_resonance.wavecurves import (curve_residual, rarefaction_fan_state, shock_speed,
                                      u_on_curve, zero_speed_state)

# Froude number decides the region; the sign of u splits the subcritical one
for U in (State(0.5, 4.0), State(1.0, 1.0), State(1.0, -1.0), State(0.2, -5.0)):
    lam1, lam2, _ = eigenvalues(U)
    print(f"{U.h:4.1f} {U.u:5.1f}  region {classify_region(U).value:4s}  "
          f"lambda = ({lam1:+.3f}, {lam2:+.3f})")

# forward 1-curve from still water: shock branch for h > h0, fan for h < h0
U0 = State(1.0, 0.0)
print("\n   h    u on 1-curve   residual")
for h in np.linspace(0.25, 2.0, 8):
    u = u_on_curve(1, "forward", U0, h)
    print(f"{h:5.2f}  {u:+12.6f}   {curve_residual(1, 'forward', State(h, u), U0):.1e}")

# a dam break into deeper water: the shock from rest moves left
U = State(2.0, u_on_curve(1, "forward", U0, 2.0))
print(f"\nshock from rest to h=2: speed {shock_speed(U0, U):.4f}")

# the standing 1-shock of a supercritical state
U = State(0.5, 4.0)
Us = zero_speed_state(U)
print(f"standing shock from {U.h}, {U.u}: h# = {Us.h:.4f}, u# = {Us.u:.4f}, "
      f"speed {shock_speed(U, Us):.1e}")

# inside a 1-fan the characteristic speed equals x/t
s = rarefaction_fan_state(1, U0, -1.0)
print(f"1-fan of still water at x/t = -1: h = {s.h:.4f}, u = {s.u:.4f}, "
      f"lambda1 = {eigenvalues(s)[0]:.4f}")
