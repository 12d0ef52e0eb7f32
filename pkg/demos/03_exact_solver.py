"""
The exact Riemann solver
========================

Solve the seven step problems, list the wave pattern of each, and sample
the self-similar solution.  Data whose left state moves left
supercritically are solved in the mirrored frame automatically.
"""

import numpy as np

from swe_resonance import sample, solve
from swe_resonance.fixtures import TESTS

for k, t in TESTS.items():
    sol = solve(t.left, t.right)
    pattern = " | ".join(f"{w.kind.value}{w.family if w.family in (1, 2) else ''}"
                         f"@{w.lo:+.3f}" for w in sol.waves)
    print(f"Test {k}: {sol.tag.value}   {pattern}")
    for name, s in sol.named.items():
        print(f"    {name:6s} h = {s.h:.8f}  u = {s.u:.8f}  a = {s.a}")

# the profile of Test 3 at t = 0.1, one value per 0.2 in x
t = TESTS[3]
sol = solve(t.left, t.right)
print("\n    x      h        u")
for x in np.linspace(-1.0, 1.0, 11):
    s = sample(sol, x / 0.1)
    print(f"{x:+5.1f}  {s.h:.5f}  {s.u:+.5f}")

# at x = 0 the solution has two traces, one on each side of the step
left, right = sol.interface()
print(f"\ntraces at the step: {left}  |  {right}")
