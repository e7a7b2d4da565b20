"""Exact character tables by Dixon's method.

Builds PSL(2,7) as permutations of the projective line over F_7, computes
its character table with values in cyclotomic fields and checks both
orthogonality relations exactly.
"""

from __future__ import annotations

from periodspan import groups
from periodspan.chartable import character_table, format_table, verify

G = groups.psl2_prime(7)
print(f"|G| = {G.order}, {len(G.classes)} conjugacy classes")
print("class sizes:", G.classes.class_sizes)
print("element orders:", G.classes.orders)

T = character_table(G)
print("degrees:", T.degrees, " sum of squares:", sum(d * d for d in T.degrees))
print("verification problems:", verify(T, G.order) or "none")

# z(7)^k denotes exp(2 pi i k / 7); the two degree-3 characters are complex conjugates
print()
print(format_table(T))
