"""
Three solutions of one Riemann problem
======================================

Supercritical flow onto a step up can admit three admissible solutions.
``classify`` builds every construction that applies and shows the sign
tests behind the verdict.
"""

from swe_resonance import State, classify, solve

U_L = State(0.2, 5.0, 1.0)
U_R = State(0.75904946, 1.3410741, 1.2)
rep = classify(U_L, U_R)
print(f"verdict: {rep.uniqueness.value}, constructions {[t.value for t in rep.tags]}")
for key in ("phi2(U_L^o#)", "phi2(U_L^#o)"):
    print(f"  {key} = {rep.evidence[key]:+.6f}")

for tag, sol in rep.solutions:
    print(f"\n{tag.value}:")
    for w in sol.waves:
        print(f"  {w.kind.value:11s} family {w.family}  speed {w.lo:+.4f}")
    for name, s in sol.named.items():
        print(f"  {name:6s} ({s.h:.8f}, {s.u:.8f}, {s.a})")

# solve picks one; a preference list overrides the default ladder
print("\ndefault:", solve(U_L, U_R).tag.value)
print("prefer A3:", solve(U_L, U_R, preference=["A3"]).tag.value)

# a subcritical left state on a step down has a single solution
print("\n", classify(State(1.0, 3.0, 1.2), State(2.0, 0.5, 1.0)).uniqueness.value)
