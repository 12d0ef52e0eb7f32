"""
Stationary contacts over a bottom step
======================================

A stationary contact keeps the discharge and the Bernoulli head.  The cubic
behind it has two positive roots below the highest reachable level a_max;
the monotonicity criterion keeps the root on the same side of criticality.
"""

from swe_resonance import State, classify_region
from swe_resonance.contact import (a_max, admissible_contact, contact_residuals, contact_roots,
                                   h_min)
from swe_resonance.fixtures import TABLES
from swe_resonance.riemann import regime_a_markers, regime_b_markers

U0 = State(0.5, 4.0, 1.0)
print(f"U0 = {U0}, region {classify_region(U0).value}")
print(f"a_max = {a_max(U0):.6f}, critical depth h_min = {h_min(U0):.6f}")

# both roots as the step grows toward a_max
for a in (0.8, 1.0, 1.1, 1.2, a_max(U0)):
    r = contact_roots(U0, a)
    print(f"a = {a:.6f}: h1 = {r.h1:.8f}  h2 = {r.h2:.8f}")

print("beyond a_max:", contact_roots(U0, 1.25))

# the admissible root stays supercritical here, and the jump relations hold
V = admissible_contact(U0, 1.1)
dq, dE = contact_residuals(U0, V)
print(f"\nadmissible image at a = 1.1: {V}  ({classify_region(V).value})")
print(f"discharge jump {dq:.1e}, head jump {dE:.1e}")

# marker states of the published tables
print("\ntable  marker   computed h, u")
for name, tab in sorted(TABLES.items()):
    mk = regime_a_markers if tab.regime == "A" else regime_b_markers
    m = mk(tab.left, tab.a_R)
    for key in tab.printed:
        print(f"{name:5s}  {key:7s}  {m[key].h:.10f}  {m[key].u:.10f}")
