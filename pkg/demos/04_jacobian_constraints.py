"""Which isogeny decompositions of a Jacobian are compatible with a bound B?

The period span of A_1^k_1 x ... x A_m^k_m has dimension
sum_i 2 g_i^2 / dim End_0(A_i).  Given the genus, the bound and whether the
canonical representation is irreducible, we enumerate what survives.
"""

from __future__ import annotations

from periodspan.jacobian import albert_feasible, feasibility_verdict

for g in range(1, 8):
    print(f"simple abelian varieties of dimension {g}: End_0 dimensions {sorted(albert_feasible(g))}")
print()

for label, g, B in [("Bolza", 2, 1), ("Klein", 3, 1), ("Macbeath", 7, 2), ("genus 14 Hurwitz", 14, 2)]:
    v = feasibility_verdict(g, B, isotypic=True)
    print(f"{label}: g = {g}, B = {B} -> {v.summary}")
    for s in v.signatures:
        print(f"    {s}  (End_0 dims {[f.endo_dim for f in s.factors]}, period span {s.v_dim})")

print()
v = feasibility_verdict(4, 2)
print(f"genus 4, B = 2, no isotypic restriction: {len(v.signatures)} signatures, e.g. {v.signatures[0]}")
